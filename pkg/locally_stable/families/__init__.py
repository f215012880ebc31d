from locally_stable.families.catalog import (
    FamilySpec,
    build_family,
    family_catalog,
    find_family,
)
from locally_stable.families.constructions import (
    bands,
    bipartite_equal,
    bipartite_general,
    multipartite_equal,
    multipartite_general,
    multipartite_genuine,
    stopper_state,
    tripartite_general,
)
