from locally_stable.setio.documents import (
    FORMAT_VERSION,
    Document,
    dumps,
    export_report,
    export_set,
    export_trace,
    import_set,
    loads,
    read_document,
    read_set,
    write_document,
)
