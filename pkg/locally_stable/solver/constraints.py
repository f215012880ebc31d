import logging
from dataclasses import dataclass

import numpy as np

from locally_stable.errors import OrthogonalityError
from locally_stable.qstate import (
    ORTHOGONALITY_TOL,
    Coefficient,
    StateSet,
    coeff_value,
    is_orthogonal_set,
    merge_monomials,
    reduced_contributions,
)

Entry = tuple[int, int]


@dataclass(frozen=True, eq=False)
class ConstraintRow:
    """⟨φ_i| I⊗…⊗E_k⊗…⊗I |φ_j⟩ = 0 written over the entries of E_k"""

    pair: tuple[int, int]
    coefficients: np.ndarray
    contributions: dict[Entry, tuple[Coefficient, ...]]

    def column_value(self, entry: Entry) -> complex:
        return sum((coeff_value(c) for c in self.contributions.get(entry, ())), 0j)

    def columns(self, tol: float) -> dict[Entry, Coefficient | complex]:
        """Nonzero columns, exact where the contributions merge into one monomial"""
        columns: dict[Entry, Coefficient | complex] = {}
        for entry, contributions in self.contributions.items():
            exact = merge_monomials(list(contributions))
            if exact is not None:
                if not exact.is_zero:
                    columns[entry] = exact
                continue
            value = self.column_value(entry)
            if abs(value) > tol:
                columns[entry] = value
        return columns


@dataclass(frozen=True, eq=False)
class ConstraintSystem:
    party: int
    local_dim: int
    rows: tuple[ConstraintRow, ...]

    @property
    def matrix(self) -> np.ndarray:
        if not self.rows:
            return np.zeros((0, self.local_dim**2), dtype=complex)
        return np.vstack([row.coefficients for row in self.rows])

    def column(self, entry: Entry) -> int:
        x, y = entry
        return x * self.local_dim + y

    def entry(self, column: int) -> Entry:
        return divmod(column, self.local_dim)


def build_constraints(
    s: StateSet,
    k: int,
    both_orders: bool = True,
    tol: float = ORTHOGONALITY_TOL,
) -> ConstraintSystem:
    """One row per ordered pair of distinct states, all-zero rows included"""
    s.shape.check_party(k)
    check = is_orthogonal_set(s, tol)
    if not check:
        raise OrthogonalityError(check.pair, check.overlap)

    dim = s.shape.dims[k]
    rows = []
    for i, a in enumerate(s.states):
        for j, b in enumerate(s.states):
            if i == j or (not both_orders and i > j):
                continue
            contributions = reduced_contributions(a, b, k)
            coefficients = np.zeros(dim * dim, dtype=complex)
            for (x, y), monomials in contributions.items():
                exact = merge_monomials(list(monomials))
                if exact is not None and exact.is_zero:
                    continue
                coefficients[x * dim + y] = sum((coeff_value(c) for c in monomials), 0j)
            rows.append(
                ConstraintRow(
                    (i, j),
                    coefficients,
                    {entry: tuple(monomials) for entry, monomials in contributions.items()},
                )
            )
    logging.debug(f"party {k}: {len(rows)} constraint rows over {dim * dim} entries")
    return ConstraintSystem(k, dim, tuple(rows))


def identity_residual(cs: ConstraintSystem) -> float:
    """Largest |row · vec(I)|; zero whenever the set is orthogonal"""
    if not cs.rows:
        return 0.0
    identity = np.eye(cs.local_dim, dtype=complex).reshape(-1)
    return float(np.max(np.abs(cs.matrix @ identity)))
