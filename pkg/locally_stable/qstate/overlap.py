from collections import defaultdict

from locally_stable.errors import ShapeMismatchError
from locally_stable.qstate.coefficient import Coefficient, coeff_value
from locally_stable.qstate.state import BasisTerm, Labels, PureState

Column = tuple[int, int]


def _check_shapes(a: PureState, b: PureState) -> None:
    if a.shape != b.shape:
        raise ShapeMismatchError(f"shape {a.shape} does not match {b.shape}")


def _rest(labels: Labels, k: int) -> Labels:
    return labels[:k] + labels[k + 1 :]


def inner_product(a: PureState, b: PureState) -> complex:
    """⟨a|b⟩"""
    _check_shapes(a, b)
    b_terms = {term.labels: term.coeff for term in b.terms}
    total = 0j
    for term in a.terms:
        other = b_terms.get(term.labels)
        if other is not None:
            total += coeff_value(term.coeff.conjugate() * other)
    return total


def reduced_contributions(
    a: PureState, b: PureState, k: int
) -> dict[Column, list[Coefficient]]:
    """Monomials conj(c_a)·c_b landing on each entry (x, y) of a party-k operator.

    Terms are joined on their labels at every party except k.
    """
    _check_shapes(a, b)
    a.shape.check_party(k)
    by_rest: dict[Labels, list[BasisTerm]] = defaultdict(list)
    for term in b.terms:
        by_rest[_rest(term.labels, k)].append(term)

    contributions: dict[Column, list[Coefficient]] = defaultdict(list)
    for term in a.terms:
        for other in by_rest.get(_rest(term.labels, k), ()):
            contributions[(term.labels[k], other.labels[k])].append(
                term.coeff.conjugate() * other.coeff
            )
    return dict(sorted(contributions.items()))


def reduced_coefficient(a: PureState, b: PureState, k: int, x: int, y: int) -> complex:
    """Coefficient of the entry m_{x,y} in ⟨a| I⊗…⊗E_k⊗…⊗I |b⟩"""
    _check_shapes(a, b)
    a.shape.check_party(k)
    dim = a.shape.dims[k]
    if not (0 <= x < dim and 0 <= y < dim):
        raise IndexError(f"entry ({x}, {y}) out of range for local dimension {dim}")
    contributions = reduced_contributions(a, b, k).get((x, y), [])
    return sum((coeff_value(c) for c in contributions), 0j)
