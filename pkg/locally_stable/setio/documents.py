import json
import logging
import pathlib
from typing import Any, Iterable, Optional

from locally_stable.errors import DocumentError, LabelRangeError, UnsupportedFormatError
from locally_stable.prover import ProofTrace, TraceFormat, render_trace
from locally_stable.qstate import (
    ORTHOGONALITY_TOL,
    BasisTerm,
    Coefficient,
    PureState,
    StateSet,
    SystemShape,
    default_names,
)
from locally_stable.solver import CRITERION, DeletionResult, StabilityVerdict

FORMAT_VERSION = 1

Document = dict[str, Any]


def coefficient_document(c: Coefficient) -> Document:
    return {"num": c.num, "den": c.den, "phase_num": c.phase_num, "phase_den": c.phase_den}


def export_set(s: StateSet) -> Document:
    """Exact interchange document; term order is the canonical one"""
    return {
        "format_version": FORMAT_VERSION,
        "dims": list(s.shape.dims),
        "states": [
            {
                "name": name,
                "terms": [
                    {"labels": list(term.labels), "coeff": coefficient_document(term.coeff)}
                    for term in state.terms
                ],
            }
            for name, state in zip(s.names, s.states)
        ],
    }


def _field(node: Any, key: str, kind: type, path: str, default: Any = None) -> Any:
    if not isinstance(node, dict):
        raise DocumentError("expected an object", path or None)
    child = f"{path}.{key}" if path else key
    if key not in node:
        if default is not None:
            return default
        raise DocumentError("missing field", child)
    value = node[key]
    # bool is an int subclass; labels and exponents must be real integers
    if not isinstance(value, kind) or (kind is int and isinstance(value, bool)):
        raise DocumentError(f"expected {kind.__name__}, got {type(value).__name__}", child)
    return value


def _integers(values: list, path: str) -> list[int]:
    for index, value in enumerate(values):
        if not isinstance(value, int) or isinstance(value, bool):
            raise DocumentError(f"expected int, got {type(value).__name__}", f"{path}[{index}]")
    return values


def _coefficient(node: Any, path: str) -> Coefficient:
    num = _field(node, "num", int, path)
    den = _field(node, "den", int, path, default=1)
    phase_num = _field(node, "phase_num", int, path, default=0)
    phase_den = _field(node, "phase_den", int, path, default=1)
    try:
        return Coefficient.from_parts(num, den, phase_num, phase_den)
    except ValueError as e:
        raise DocumentError(str(e), path) from e


def _term(node: Any, shape: SystemShape, path: str) -> BasisTerm:
    labels_path = f"{path}.labels"
    labels = _integers(_field(node, "labels", list, path), labels_path)
    if len(labels) != shape.n:
        raise DocumentError(f"expected {shape.n} labels, got {len(labels)}", labels_path)
    for party, (label, dim) in enumerate(zip(labels, shape.dims)):
        if label < 0:
            raise DocumentError(f"negative label {label} at party {party}", labels_path)
        if label >= dim:
            raise LabelRangeError(label, dim, party, labels_path)
    return BasisTerm(tuple(labels), _coefficient(_field(node, "coeff", dict, path), f"{path}.coeff"))


def import_set(
    doc: Document, validate: bool = True, tol: float = ORTHOGONALITY_TOL
) -> StateSet:
    """Canonical StateSet from a document, orthogonality checked unless validate is off"""
    if not isinstance(doc, dict):
        raise DocumentError("expected an object at the top level")
    if "format_version" not in doc:
        raise DocumentError("missing field", "format_version")
    if doc["format_version"] != FORMAT_VERSION:
        raise UnsupportedFormatError(doc["format_version"])

    dims = _integers(_field(doc, "dims", list, ""), "dims")
    try:
        shape = SystemShape(tuple(dims))
    except ValueError as e:
        raise DocumentError(str(e), "dims") from e

    states: list[PureState] = []
    names: list[Optional[str]] = []
    for i, node in enumerate(_field(doc, "states", list, "")):
        path = f"states[{i}]"
        terms = [
            _term(term, shape, f"{path}.terms[{j}]")
            for j, term in enumerate(_field(node, "terms", list, path))
        ]
        try:
            state = PureState.construct(shape, terms)
        except ValueError as e:
            raise DocumentError(str(e), f"{path}.terms") from e
        if state.is_zero:
            raise DocumentError("the zero state is not allowed", path)
        states.append(state)
        names.append(_field(node, "name", str, path) if "name" in node else None)

    defaults = default_names(states)
    logging.debug(f"imported {len(states)} states over {shape}")
    return StateSet.construct(
        states,
        [name if name is not None else default for name, default in zip(names, defaults)],
        shape=shape,
        validate=validate,
        tol=tol,
    )


def export_trace(trace: ProofTrace) -> Document:
    doc = render_trace(trace, TraceFormat.STRUCTURED)
    assert isinstance(doc, dict)
    return doc


def export_report(
    v: StabilityVerdict,
    traces: Optional[Iterable[ProofTrace]] = None,
    deletions: Optional[Iterable[DeletionResult]] = None,
) -> Document:
    bound = v.cardinality_bound
    doc: Document = {
        "format_version": FORMAT_VERSION,
        "locally_stable": v.locally_stable,
        "dimensions": v.dimensions,
        "parties": [
            {
                "party": report.party,
                "local_dim": report.local_dim,
                "dimension": report.dimension,
                "trivial": report.trivial,
                "identity_residual": report.identity_residual,
            }
            for report in v.reports
        ],
        "criterion": CRITERION,
        "method": str(v.method),
        "rank_tolerance": v.rank_tolerance,
        "orthogonality_tolerance": v.orthogonality_tolerance,
        "bound": {
            "cardinality": bound.cardinality,
            "bound": bound.bound,
            "meets_bound": bound.meets_bound,
            "attains_bound": bound.attains_bound,
        },
        "implications": v.implications,
    }
    if deletions is not None:
        doc["deletions"] = [
            {
                "removed": row.removed,
                "name": row.name,
                "locally_stable": row.locally_stable,
                "dimensions": list(row.dimensions),
            }
            for row in deletions
        ]
    if traces is not None:
        doc["traces"] = [export_trace(trace) for trace in traces]
    return doc


def dumps(doc: Document) -> str:
    """UTF-8 friendly JSON, two-space indent, trailing newline"""
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def loads(text: str) -> Document:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"invalid JSON: {e.msg} at line {e.lineno} column {e.colno}") from e


def read_document(path: pathlib.Path | str) -> Document:
    try:
        text = pathlib.Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise DocumentError(f"{path} is not UTF-8: {e.reason} at byte {e.start}") from e
    return loads(text)


def read_set(
    path: pathlib.Path | str, validate: bool = True, tol: float = ORTHOGONALITY_TOL
) -> StateSet:
    return import_set(read_document(path), validate, tol)


def write_document(path: pathlib.Path | str, doc: Document) -> None:
    pathlib.Path(path).write_text(dumps(doc), encoding="utf-8")
    logging.debug(f"wrote {path}")
