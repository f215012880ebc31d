import logging

from locally_stable.prover.engine import factor_value, prove_trivial
from locally_stable.prover.facts import EqualDiag, ProofTrace, Proportional, Zero
from locally_stable.prover.render import fact_text
from locally_stable.qstate import ORTHOGONALITY_TOL, StateSet
from locally_stable.solver import RANK_TOL, Method, NullspaceReport, build_constraints, nullspace

ORACLE_TOL = 1e-8


def check_trace_against_report(
    trace: ProofTrace, report: NullspaceReport, tol: float = ORACLE_TOL
) -> list[str]:
    """Every fact must hold on every basis matrix of the numeric nullspace"""
    if trace.party != report.party or trace.local_dim != report.local_dim:
        raise ValueError(
            f"trace for party {trace.party} does not match report for party {report.party}"
        )
    # the span is closed under adjoints, so diagonal facts are checked on Hermitian parts
    hermitian = [
        part
        for matrix in report.basis
        for part in ((matrix + matrix.conj().T) / 2, (matrix - matrix.conj().T) / 2j)
    ]

    mismatches = []
    for step in trace.steps:
        match step.fact:
            case Zero(entry=(x, y)):
                worst = max((abs(m[x, y]) for m in report.basis), default=0.0)
            case Proportional(entry=(x, y), other=(u, v), factor=factor):
                value = factor_value(factor)
                worst = max((abs(m[x, y] - value * m[u, v]) for m in report.basis), default=0.0)
            case EqualDiag(first=a, second=b):
                worst = max((abs(h[a, a] - h[b, b]) for h in hermitian), default=0.0)
            case _:
                raise ValueError(f"unknown fact {step.fact}")
        if worst > tol:
            mismatches.append(f"step {step.index}: {fact_text(step.fact)} off by {worst:.3g}")

    if trace.trivial and report.dimension != 1:
        mismatches.append(f"trace says trivial, nullspace has dimension {report.dimension}")
    for mismatch in mismatches:
        logging.debug(f"party {trace.party}: {mismatch}")
    return mismatches


def check_against_oracle(
    s: StateSet,
    k: int,
    tol: float = RANK_TOL,
    method: Method = Method.SVD,
    ortho_tol: float = ORTHOGONALITY_TOL,
) -> tuple[ProofTrace, NullspaceReport, list[str]]:
    """Prove party k symbolically and replay the trace on the numeric nullspace"""
    trace = prove_trivial(s, k, ortho_tol=ortho_tol)
    report = nullspace(build_constraints(s, k, tol=ortho_tol), tol, method)
    return trace, report, check_trace_against_report(trace, report, max(tol, ORACLE_TOL))
