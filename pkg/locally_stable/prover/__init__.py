from locally_stable.prover.crosscheck import (
    ORACLE_TOL,
    check_against_oracle,
    check_trace_against_report,
)
from locally_stable.prover.engine import lemma1_scan, lemma2_scan, propagate, prove_trivial
from locally_stable.prover.facts import (
    COEFFICIENT_TOL,
    EntryFact,
    EqualDiag,
    FactStore,
    Justification,
    Outcome,
    ProofTrace,
    Proportional,
    Rule,
    Zero,
)
from locally_stable.prover.render import TRACE_FORMAT_VERSION, TraceFormat, fact_text, render_trace
from locally_stable.prover.union_find import UnionFind
