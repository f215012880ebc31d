import itertools
from typing import Iterable, Iterator

import numpy as np

from locally_stable.qstate.state import PureState

SCHMIDT_TOL = 1e-8


def amplitudes(state: PureState) -> np.ndarray:
    """Dense amplitude tensor with one axis per party"""
    tensor = np.zeros(state.shape.dims, dtype=complex)
    for term in state.terms:
        tensor[term.labels] = term.coeff.value
    return tensor


def bipartitions(n: int) -> Iterator[tuple[int, ...]]:
    """One side of every bipartition of n parties, each cut listed once"""
    rest = range(1, n)
    for size in range(0, n - 1):
        for others in itertools.combinations(rest, size):
            yield (0, *others)


def bipartition_rank(
    state: PureState, parties: Iterable[int], tol: float = SCHMIDT_TOL
) -> int:
    """Schmidt rank across the cut parties | rest, relative to the largest singular value"""
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    left = sorted(set(parties))
    for k in left:
        state.shape.check_party(k)
    right = [k for k in range(state.shape.n) if k not in left]
    if not left or not right:
        raise ValueError(f"{left} does not split {state.shape.n} parties")

    tensor = np.transpose(amplitudes(state), left + right)
    rows = int(np.prod([state.shape.dims[k] for k in left]))
    singular = np.linalg.svd(tensor.reshape(rows, -1), compute_uv=False)
    if not singular.size or singular[0] == 0:
        return 0
    return int(np.sum(singular > tol * singular[0]))


def is_genuinely_entangled(state: PureState, tol: float = SCHMIDT_TOL) -> bool:
    """Entangled across every bipartition"""
    if state.shape.n < 2:
        return False
    return all(
        bipartition_rank(state, left, tol) > 1 for left in bipartitions(state.shape.n)
    )
