import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional

from locally_stable.errors import OrthogonalityError
from locally_stable.qstate import ORTHOGONALITY_TOL, StateSet, is_orthogonal_set
from locally_stable.solver.constraints import build_constraints
from locally_stable.solver.nullspace import RANK_TOL, Method, NullspaceReport, nullspace
from locally_stable.util.perf import perf

# dimension > 1 means a Hermitian H not proportional to I satisfies every row,
# and {I/2 + εH, I/2 - εH} is then a nontrivial orthogonality-preserving POVM
CRITERION = "trivial iff the nullspace is spanned by the identity (dimension 1)"


@dataclass(frozen=True)
class CardinalityBound:
    cardinality: int
    bound: int

    @classmethod
    def construct(cls, s: StateSet) -> "CardinalityBound":
        return cls(len(s), max(s.shape.dims) + 1)

    @property
    def meets_bound(self) -> bool:
        return self.cardinality >= self.bound

    @property
    def attains_bound(self) -> bool:
        return self.cardinality == self.bound


@dataclass(frozen=True, eq=False)
class StabilityVerdict:
    reports: tuple[NullspaceReport, ...]
    cardinality_bound: CardinalityBound
    rank_tolerance: float
    orthogonality_tolerance: float
    method: Method

    @property
    def locally_stable(self) -> bool:
        return all(report.trivial for report in self.reports)

    @property
    def dimensions(self) -> list[int]:
        return [report.dimension for report in self.reports]

    @property
    def implications(self) -> dict[str, Optional[bool]]:
        """Weaker nonlocality notions that stability implies; undecided otherwise"""
        implied = True if self.locally_stable else None
        return {"locally_irreducible": implied, "locally_indistinguishable": implied}


@dataclass(frozen=True)
class DeletionResult:
    removed: int
    name: str
    locally_stable: bool
    dimensions: tuple[int, ...]


@perf
def verify_local_stability(
    s: StateSet,
    tol: float = RANK_TOL,
    parties: Optional[Iterable[int]] = None,
    method: Method = Method.SVD,
    workers: int = 1,
    ortho_tol: float = ORTHOGONALITY_TOL,
) -> StabilityVerdict:
    """Nullspace of every requested party, reported in party order"""
    check = is_orthogonal_set(s, ortho_tol)
    if not check:
        raise OrthogonalityError(check.pair, check.overlap)
    parties = list(range(s.shape.n)) if parties is None else list(parties)
    for k in parties:
        s.shape.check_party(k)

    def party_report(k: int) -> NullspaceReport:
        return nullspace(build_constraints(s, k, tol=ortho_tol), tol, method)

    if workers > 1 and len(parties) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(party_report, parties))
    else:
        reports = [party_report(k) for k in parties]

    verdict = StabilityVerdict(
        tuple(reports), CardinalityBound.construct(s), tol, ortho_tol, Method(method)
    )
    logging.debug(f"dimensions {verdict.dimensions}, stable: {verdict.locally_stable}")
    return verdict


@perf
def deletion_test(
    s: StateSet,
    tol: float = RANK_TOL,
    method: Method = Method.SVD,
    workers: int = 1,
    ortho_tol: float = ORTHOGONALITY_TOL,
) -> list[DeletionResult]:
    """Verdict of the set with each single state removed"""
    results = []
    for index, name in enumerate(s.names):
        verdict = verify_local_stability(
            s.without(index), tol, method=method, workers=workers, ortho_tol=ortho_tol
        )
        results.append(
            DeletionResult(index, name, verdict.locally_stable, tuple(verdict.dimensions))
        )
    return results
