from enum import StrEnum
from typing import Any

import pandas as pd

from locally_stable.prover.facts import (
    Entry,
    EqualDiag,
    Fact,
    Factor,
    ProofTrace,
    Proportional,
    Zero,
)
from locally_stable.qstate import Coefficient

TRACE_FORMAT_VERSION = 1
ROOT_SUM_NOTE = "lemma2 uses 1 + w_p + w_p^2 + … + w_p^(p-1) = 0"


class TraceFormat(StrEnum):
    TEXT = "text"
    STRUCTURED = "structured"


def entry_text(entry: Entry) -> str:
    return f"m[{entry[0]},{entry[1]}]"


def _factor_prefix(factor: Factor, links: int) -> str:
    if isinstance(factor, Coefficient):
        if links >= 2 and factor == Coefficient(-1) ** links:
            return f"(-1)^{links} "
        if factor == Coefficient.one():
            return ""
        if factor == -Coefficient.one():
            return "-"
        return f"{factor}·"
    return f"({factor.real:.6g}{factor.imag:+.6g}i)·"


def fact_text(fact: Fact) -> str:
    match fact:
        case Zero(entry=entry):
            return f"{entry_text(entry)} = 0"
        case Proportional(entry=entry, other=other, factor=factor, links=links):
            return f"{entry_text(entry)} = {_factor_prefix(factor, links)}{entry_text(other)}"
        case EqualDiag(first=first, second=second):
            return f"{entry_text((first, first))} = {entry_text((second, second))}"
    raise ValueError(f"unknown fact {fact}")


def _zero_grid(trace: ProofTrace) -> pd.DataFrame:
    """0 for a zero entry, * on the diagonal, ? for an unresolved entry"""
    zeros = trace.zero_entries()
    dim = trace.local_dim
    cells = [
        ["*" if x == y else "0" if (x, y) in zeros else "?" for y in range(dim)]
        for x in range(dim)
    ]
    return pd.DataFrame(cells, index=range(dim), columns=range(dim))


def _text(trace: ProofTrace) -> str:
    lines = [f"party {trace.party} (local dimension {trace.local_dim}): {trace.outcome}"]
    if not trace.steps:
        lines.append("no facts")
    else:
        steps = pd.DataFrame(
            {
                "rule": [str(step.justification.rule) for step in trace.steps],
                "inputs": [", ".join(step.justification.inputs) for step in trace.steps],
                "fact": [fact_text(step.fact) for step in trace.steps],
            },
            index=pd.Index([step.index for step in trace.steps], name="step"),
        )
        lines += [steps.to_string(), "", "zero entries", _zero_grid(trace).to_string()]
        diagonal = trace.facts(EqualDiag)
        if diagonal:
            lines += ["", "diagonal entries"]
            lines += [f"  {fact_text(step.fact)}" for step in diagonal]
            lines.append(ROOT_SUM_NOTE)
    classes = " ".join("{" + ",".join(str(x) for x in c) + "}" for c in trace.diagonal_classes)
    lines.append(f"diagonal classes: {classes}")
    lines += [f"skipped {note}" for note in trace.skipped]
    if trace.unresolved:
        lines.append("unresolved: " + " ".join(entry_text(e) for e in trace.unresolved))
    return "\n".join(lines) + "\n"


def factor_document(factor: Factor) -> dict[str, Any]:
    if isinstance(factor, Coefficient):
        return {
            "num": factor.num,
            "den": factor.den,
            "phase_num": factor.phase_num,
            "phase_den": factor.phase_den,
        }
    return {"re": factor.real, "im": factor.imag}


def fact_document(fact: Fact) -> dict[str, Any]:
    match fact:
        case Zero(entry=entry):
            return {"kind": "zero", "entries": [list(entry)], "factor": None, "links": 0}
        case Proportional(entry=entry, other=other, factor=factor, links=links):
            return {
                "kind": "proportional",
                "entries": [list(entry), list(other)],
                "factor": factor_document(factor),
                "links": links,
            }
        case EqualDiag(first=first, second=second):
            return {
                "kind": "equal-diag",
                "entries": [[first, first], [second, second]],
                "factor": None,
                "links": 0,
            }
    raise ValueError(f"unknown fact {fact}")


def _structured(trace: ProofTrace) -> dict[str, Any]:
    return {
        "format_version": TRACE_FORMAT_VERSION,
        "party": trace.party,
        "local_dim": trace.local_dim,
        "steps": [
            {
                "index": step.index,
                "rule": str(step.justification.rule),
                "inputs": list(step.justification.inputs),
                "fact": fact_document(step.fact),
            }
            for step in trace.steps
        ],
        "outcome": str(trace.outcome),
        "unresolved": [list(entry) for entry in trace.unresolved],
        "diagonal_classes": [list(c) for c in trace.diagonal_classes],
        "skipped": list(trace.skipped),
    }


def render_trace(
    trace: ProofTrace, trace_format: TraceFormat = TraceFormat.TEXT
) -> str | dict[str, Any]:
    """Text for people, a plain dict for persisting"""
    match trace_format:
        case TraceFormat.TEXT:
            return _text(trace)
        case TraceFormat.STRUCTURED:
            return _structured(trace)
    raise ValueError(f"unknown trace format {trace_format}")
