import logging
from typing import Sequence

from locally_stable.errors import HypothesisError
from locally_stable.qstate import Coefficient, PureState, StateSet, SystemShape
from locally_stable.qstate.state_set import STOPPER_NAME

ONE = Coefficient.one()
MINUS = Coefficient(-1)

Term = tuple[tuple[int, ...], Coefficient]


def bands(dims: Sequence[int]) -> list[range]:
    """Band m covers [d_{m-1}, d_m - 1] with d_0 = 1"""
    bounds = (1, *dims)
    return [range(bounds[m - 1], bounds[m]) for m in range(1, len(dims) + 1)]


def _ket(n: int, placements: dict[int, int]) -> tuple[int, ...]:
    return tuple(placements.get(slot, 0) for slot in range(n))


def _state(shape: SystemShape, terms: list[Term]) -> PureState:
    return PureState.construct(shape, terms)


def _with_stopper(shape: SystemShape, states: list[PureState]) -> StateSet:
    names = [f"phi_{index}" for index in range(len(states))] + [STOPPER_NAME]
    state_set = StateSet.construct(states + [stopper_state(shape)], names)
    logging.debug(f"built {len(state_set)} states over {shape}")
    return state_set


def stopper_state(shape: SystemShape) -> PureState:
    """Full product of uniform superpositions, stored term by term"""
    return _state(shape, [(labels, ONE) for labels in shape.label_tuples()])


def bipartite_equal(d: int, k: int = 2) -> StateSet:
    if d < 3:
        raise HypothesisError("bipartite_equal", "d ≥ 3", "Theorem 1", f"d = {d}")
    if not 2 <= k <= d - 1:
        raise HypothesisError(
            "bipartite_equal", "2 ≤ k ≤ d − 1", "Theorem 1", f"k = {k}, d = {d}"
        )
    shape = SystemShape((d, d))
    states = [_state(shape, [((0, 0), ONE), ((1, k), MINUS)])]
    states += [_state(shape, [((i, 0), ONE), ((0, i), MINUS)]) for i in range(1, d)]
    return _with_stopper(shape, states)


def bipartite_general(d1: int, d2: int) -> StateSet:
    if not 3 <= d1 <= d2:
        raise HypothesisError(
            "bipartite_general", "3 ≤ d1 ≤ d2", "Theorem 2", f"d1 = {d1}, d2 = {d2}"
        )
    shape = SystemShape((d1, d2))
    states = [_state(shape, [((0, 0), ONE), ((1, 2), MINUS)])]
    states += [_state(shape, [((i, 0), ONE), ((0, i), MINUS)]) for i in range(1, d1)]
    states += [
        _state(shape, [((0, j), ONE), ((2, j - 1), MINUS)]) for j in range(d1, d2)
    ]
    return _with_stopper(shape, states)


def multipartite_equal(d: int, n: int) -> StateSet:
    if d < 2 or n < 3:
        raise HypothesisError(
            "multipartite_equal", "d ≥ 2, n ≥ 3", "Theorem 3", f"d = {d}, n = {n}"
        )
    shape = SystemShape((d,) * n)
    states = [_state(shape, [((0,) * n, ONE), ((1,) * n, MINUS)])]
    states += [
        _state(shape, [(_ket(n, {t: i}), Coefficient.root(n, t)) for t in range(n)])
        for i in range(1, d)
    ]
    return _with_stopper(shape, states)


def _check_ordered(family: str, theorem: str, dims: Sequence[int], parties: str) -> None:
    if len(dims) < 3:
        raise HypothesisError(family, "n ≥ 3", theorem, f"n = {len(dims)}")
    if dims[0] < 3 or any(a > b for a, b in zip(dims, dims[1:])):
        raise HypothesisError(
            family, f"3 ≤ {parties}", theorem, f"dims = {tuple(dims)}"
        )


def _band_state(n: int, slot: int, label: int, phase_order: int) -> list[Term]:
    """label placed in slots slot..n-1 with successive powers of ω"""
    return [
        (_ket(n, {slot + t: label}), Coefficient.root(phase_order, t))
        for t in range(n - slot)
    ]


def _last_band_state(n: int, label: int) -> list[Term]:
    shifted = (2,) + (1,) * (n - 2) + (label - 1,)
    return [(_ket(n, {n - 1: label}), ONE), (shifted, MINUS)]


def _banded(dims: Sequence[int], genuine: bool) -> StateSet:
    shape = SystemShape(tuple(dims))
    n = shape.n
    states = [_state(shape, [((0,) * n, ONE), ((1,) * n, MINUS)])]
    for m, band in enumerate(bands(dims), start=1):
        for label in band:
            if m == n:
                terms = _last_band_state(n, label)
            elif m == 1 or not genuine:
                terms = _band_state(n, m - 1, label, n - m + 1)
            else:
                terms = _band_state(n, m - 1, label, n - m + 2)
                trailing = _ket(n, {**{slot: 1 for slot in range(m - 1)}, n - 1: label})
                terms.append((trailing, Coefficient.root(n - m + 2, n - m + 1)))
            states.append(_state(shape, terms))
    return _with_stopper(shape, states)


def tripartite_general(d1: int, d2: int, d3: int) -> StateSet:
    _check_ordered("tripartite_general", "Theorem 4", (d1, d2, d3), "d1 ≤ d2 ≤ d3")
    return _banded((d1, d2, d3), genuine=False)


def multipartite_general(dims: Sequence[int]) -> StateSet:
    _check_ordered("multipartite_general", "Theorem 5", dims, "d1 ≤ … ≤ dn")
    return _banded(dims, genuine=False)


def multipartite_genuine(dims: Sequence[int]) -> StateSet:
    """Every state but the stopper is genuinely entangled"""
    _check_ordered("multipartite_genuine", "Theorem 6", dims, "d1 ≤ … ≤ dn")
    return _banded(dims, genuine=True)
