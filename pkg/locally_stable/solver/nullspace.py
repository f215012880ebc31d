import logging
from dataclasses import dataclass
from enum import StrEnum
from typing import Sequence

import numpy as np
import scipy.linalg
import sympy

from locally_stable.qstate import Coefficient
from locally_stable.solver.constraints import ConstraintSystem

RANK_TOL = 1e-8


class Method(StrEnum):
    SVD = "svd"
    QR = "qr"
    EXACT = "exact"


@dataclass(frozen=True, eq=False)
class NullspaceReport:
    """Orthonormal basis of the operators allowed at one party"""

    party: int
    local_dim: int
    dimension: int
    basis: tuple[np.ndarray, ...]
    tolerance: float
    method: Method

    @property
    def trivial(self) -> bool:
        return self.dimension == 1

    @property
    def vectors(self) -> np.ndarray:
        if not self.basis:
            return np.zeros((self.local_dim**2, 0), dtype=complex)
        return np.column_stack([matrix.reshape(-1) for matrix in self.basis])

    def span_residual(self, matrix: np.ndarray) -> float:
        """Relative distance of a matrix from the span of the basis"""
        vector = np.asarray(matrix, dtype=complex).reshape(-1)
        vectors = self.vectors
        residual = vector - vectors @ (vectors.conj().T @ vector)
        return float(np.linalg.norm(residual) / max(np.linalg.norm(vector), 1e-300))

    @property
    def identity_residual(self) -> float:
        return self.span_residual(np.eye(self.local_dim))


def nullspace(
    cs: ConstraintSystem, tol: float = RANK_TOL, method: Method = Method.SVD
) -> NullspaceReport:
    """Right nullspace of the constraint rows, rank cut at tol relative to the largest pivot"""
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    size = cs.local_dim**2
    matrix = cs.matrix
    if not matrix.size or not np.any(matrix):
        vectors = np.eye(size, dtype=complex)
    else:
        match method:
            case Method.SVD:
                vectors = scipy.linalg.null_space(matrix, rcond=tol)
            case Method.QR:
                vectors = _qr_null_space(matrix, tol)
            case Method.EXACT:
                vectors = _exact_null_space(cs)
            case _:
                raise ValueError(f"unknown method {method}")

    basis = tuple(
        vectors[:, index].reshape(cs.local_dim, cs.local_dim)
        for index in range(vectors.shape[1])
    )
    logging.debug(
        f"party {cs.party}: nullspace dimension {len(basis)} of {size} ({method})"
    )
    return NullspaceReport(cs.party, cs.local_dim, len(basis), basis, tol, Method(method))


def _qr_null_space(matrix: np.ndarray, tol: float) -> np.ndarray:
    q, r, _ = scipy.linalg.qr(matrix.conj().T, pivoting=True)
    pivots = np.abs(np.diag(r))
    rank = int(np.sum(pivots > tol * pivots[0])) if pivots.size else 0
    return q[:, rank:]


def _exact_entry(monomials: Sequence[Coefficient]) -> sympy.Expr:
    return sympy.expand_complex(
        sympy.Add(
            *(
                sympy.Rational(c.num, c.den)
                * sympy.exp(2 * sympy.pi * sympy.I * sympy.Rational(c.phase_num, c.phase_den))
                for c in monomials
            )
        )
    )


def _exact_null_space(cs: ConstraintSystem) -> np.ndarray:
    """Symbolic elimination; only practical for tiny systems"""
    size = cs.local_dim**2
    matrix = sympy.Matrix(
        [
            [_exact_entry(row.contributions.get(cs.entry(column), ())) for column in range(size)]
            for row in cs.rows
        ]
    )
    kernel = matrix.nullspace(simplify=True)
    if not kernel:
        return np.zeros((size, 0), dtype=complex)
    numeric = np.array(
        [[complex(sympy.N(value)) for value in vector] for vector in kernel]
    ).T
    return scipy.linalg.orth(numeric)


def hermitian_closure_check(
    r: NullspaceReport, cs: ConstraintSystem, tol: float = RANK_TOL
) -> bool:
    """Every basis matrix's conjugate transpose stays inside the span"""
    if r.party != cs.party or r.local_dim != cs.local_dim:
        raise ValueError(f"report for party {r.party} does not match system for party {cs.party}")
    for matrix in r.basis:
        residual = r.span_residual(matrix.conj().T)
        if residual > tol:
            logging.debug(f"party {r.party}: adjoint leaves the nullspace by {residual}")
            return False
    return True
