import pytest

from locally_stable.qstate import Coefficient, PureState, StateSet, SystemShape

ONE = Coefficient.one()
MINUS = Coefficient(-1)
TWO_BY_TWO = SystemShape((2, 2))


def product_basis() -> StateSet:
    return StateSet.construct(
        [PureState.construct(TWO_BY_TWO, [(labels, ONE)]) for labels in TWO_BY_TWO.label_tuples()]
    )


def bell_basis() -> StateSet:
    terms = [
        [((0, 0), ONE), ((1, 1), ONE)],
        [((0, 0), ONE), ((1, 1), MINUS)],
        [((0, 1), ONE), ((1, 0), ONE)],
        [((0, 1), ONE), ((1, 0), MINUS)],
    ]
    return StateSet.construct(
        [PureState.construct(TWO_BY_TWO, state) for state in terms],
        names=["phi_plus", "phi_minus", "psi_plus", "psi_minus"],
    )


@pytest.fixture
def computational() -> StateSet:
    return product_basis()


@pytest.fixture
def bell() -> StateSet:
    return bell_basis()


def family_parameters() -> list[tuple[str, list[int], dict[str, int]]]:
    """Every family instance the constructions are checked against"""
    cases = [("bipartite_equal", [d], {}) for d in range(3, 9)]
    cases += [("bipartite_equal", [d], {"k": 3}) for d in range(4, 9)]
    cases += [
        ("bipartite_general", [d1, d2], {})
        for d1 in range(3, 9)
        for d2 in range(d1, 9)
    ]
    cases += [("multipartite_equal", [d, n], {}) for d in range(2, 6) for n in (3, 4)]
    cases += [
        ("tripartite_general", dims, {}) for dims in ([3, 3, 3], [3, 4, 5], [5, 7, 10])
    ]
    cases += [("multipartite_general", dims, {}) for dims in ([3, 4, 5, 6], [3, 3, 4, 4, 5])]
    cases += [("multipartite_genuine", dims, {}) for dims in ([3, 3, 4], [3, 4, 5, 6])]
    return cases


def case_id(case: tuple[str, list[int], dict[str, int]]) -> str:
    name, params, variants = case
    suffix = "".join(f",{key}={value}" for key, value in variants.items())
    return f"{name}({','.join(str(p) for p in params)}{suffix})"
