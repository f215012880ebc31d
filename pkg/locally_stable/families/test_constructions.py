import pytest

from locally_stable.errors import HypothesisError
from locally_stable.families.constructions import (
    bands,
    bipartite_equal,
    bipartite_general,
    multipartite_equal,
    multipartite_general,
    multipartite_genuine,
    stopper_state,
    tripartite_general,
)
from locally_stable.qstate import (
    Coefficient,
    PureState,
    StateSet,
    SystemShape,
    is_genuinely_entangled,
    is_orthogonal_set,
    is_stopper,
)

ONE = Coefficient.one()
MINUS = Coefficient(-1)
W3 = Coefficient.root(3)


def expect(dims: tuple[int, ...], *terms) -> PureState:
    return PureState.construct(SystemShape(dims), terms)


ALL_FAMILIES = [
    bipartite_equal(3),
    bipartite_equal(5),
    bipartite_equal(6, k=4),
    bipartite_general(3, 3),
    bipartite_general(5, 9),
    multipartite_equal(2, 3),
    multipartite_equal(4, 4),
    tripartite_general(3, 4, 5),
    tripartite_general(5, 7, 10),
    multipartite_general([3, 4, 5, 6]),
    multipartite_general([3, 3, 4, 4, 5]),
    multipartite_genuine([3, 3, 4]),
    multipartite_genuine([3, 4, 5]),
    multipartite_genuine([3, 4, 4, 5]),
]


@pytest.mark.parametrize(
    "dims, count",
    [((2, 2), 4), ((3, 3), 9), ((3, 3, 4), 36)],
)
def test_stopper_state(dims: tuple[int, ...], count: int):
    stopper = stopper_state(SystemShape(dims))
    assert len(stopper) == count
    assert all(term.coeff == ONE for term in stopper.terms)
    assert is_stopper(stopper)


def test_bipartite_equal():
    s = bipartite_equal(3)
    assert len(s) == 4
    assert s.names == ("phi_0", "phi_1", "phi_2", "S")
    assert s[0] == expect((3, 3), ((0, 0), ONE), ((1, 2), MINUS))
    assert str(s[1]) == "-|01⟩ + |10⟩"


def test_bipartite_equal_figure_labels():
    s = bipartite_equal(5)
    assert len(s) == 6
    assert s[4] == expect((5, 5), ((4, 0), ONE), ((0, 4), MINUS))


def test_bipartite_equal_variant():
    assert bipartite_equal(5, k=3)[0] == expect((5, 5), ((0, 0), ONE), ((1, 3), MINUS))


@pytest.mark.parametrize(
    "d, k",
    [(2, 2), (3, 1), (3, 3)],
    ids=["d too small", "k too small", "k too large"],
)
def test_bipartite_equal_hypothesis(d: int, k: int):
    with pytest.raises(HypothesisError, match="Theorem 1"):
        bipartite_equal(d, k)


def test_bipartite_equal_hypothesis_message():
    with pytest.raises(HypothesisError, match="d ≥ 3"):
        bipartite_equal(2)


def test_bipartite_general():
    s = bipartite_general(5, 9)
    assert len(s) == 10
    assert s[6] == expect((5, 9), ((0, 6), ONE), ((2, 5), MINUS))
    assert bipartite_general(3, 3) == bipartite_equal(3)
    with pytest.raises(HypothesisError, match="Theorem 2"):
        bipartite_general(2, 5)
    with pytest.raises(HypothesisError):
        bipartite_general(5, 4)


def test_multipartite_equal():
    s = multipartite_equal(5, 3)
    assert len(s) == 6
    assert s[4] == expect(
        (5, 5, 5),
        ((4, 0, 0), ONE),
        ((0, 4, 0), W3),
        ((0, 0, 4), W3 * W3),
    )
    assert len(multipartite_equal(2, 3)) == 3
    with pytest.raises(HypothesisError, match="n ≥ 3"):
        multipartite_equal(2, 2)


def test_tripartite_general():
    s = tripartite_general(5, 7, 10)
    assert len(s) == 11
    assert s[9] == expect((5, 7, 10), ((0, 0, 9), ONE), ((2, 1, 8), MINUS))
    assert s[6] == expect((5, 7, 10), ((0, 6, 0), ONE), ((0, 0, 6), MINUS))
    assert tripartite_general(3, 3, 3) == multipartite_equal(3, 3)
    with pytest.raises(HypothesisError, match="Theorem 4"):
        tripartite_general(4, 3, 5)


def test_multipartite_general():
    assert multipartite_general([5, 7, 10]) == tripartite_general(5, 7, 10)
    s = multipartite_general([3, 4, 5, 6])
    assert len(s) == 7
    # band 2 holds label 3 in slots 2..4 with ω_3 phases
    assert s[3] == expect(
        (3, 4, 5, 6),
        ((0, 3, 0, 0), ONE),
        ((0, 0, 3, 0), W3),
        ((0, 0, 0, 3), W3 * W3),
    )
    assert s[4] == expect((3, 4, 5, 6), ((0, 0, 4, 0), ONE), ((0, 0, 0, 4), MINUS))
    assert s[5] == expect((3, 4, 5, 6), ((0, 0, 0, 5), ONE), ((2, 1, 1, 4), MINUS))
    with pytest.raises(HypothesisError, match="n ≥ 3"):
        multipartite_general([3, 3])


def test_multipartite_general_equal_dims():
    for d in (3, 4):
        for n in (3, 4):
            assert multipartite_general([d] * n) == multipartite_equal(d, n)


def test_multipartite_genuine():
    s = multipartite_genuine([3, 4, 5])
    assert s[3] == expect(
        (3, 4, 5),
        ((0, 3, 0), ONE),
        ((0, 0, 3), W3),
        ((1, 0, 3), W3 * W3),
    )
    wide = multipartite_genuine([3, 4, 4, 5])
    w4 = Coefficient.root(4)
    assert wide[3] == expect(
        (3, 4, 4, 5),
        ((0, 3, 0, 0), ONE),
        ((0, 0, 3, 0), w4),
        ((0, 0, 0, 3), w4**2),
        ((1, 0, 0, 3), w4**3),
    )
    with pytest.raises(HypothesisError, match="Theorem 6"):
        multipartite_genuine([2, 3, 4])


def test_multipartite_genuine_empty_band():
    s = multipartite_genuine([3, 3, 4])
    assert len(s) == 5
    assert s[3] == expect((3, 3, 4), ((0, 0, 3), ONE), ((2, 1, 2), MINUS))


@pytest.mark.parametrize("s", ALL_FAMILIES)
def test_family_invariants(s: StateSet):
    assert is_orthogonal_set(s, 1e-12)
    assert len(s) == max(s.shape.dims) + 1
    assert s.stopper_index == len(s) - 1


@pytest.mark.parametrize(
    "dims", [(3,), (3, 3), (3, 5), (3, 4, 5, 6), (3, 3, 4, 4, 5), (4, 4, 4)]
)
def test_bands_tile(dims: tuple[int, ...]):
    labels = [label for band in bands(dims) for label in band]
    assert labels == list(range(1, dims[-1]))


@pytest.mark.parametrize("dims", [(3, 3, 4), (3, 4, 5), (3, 4, 4, 5), (3, 4, 5, 6)])
def test_genuine_states_are_entangled(dims: tuple[int, ...]):
    s = multipartite_genuine(list(dims))
    for state in s.states[:-1]:
        assert is_genuinely_entangled(state)
    assert not is_genuinely_entangled(s.states[-1])


def test_general_band_states_are_not_all_genuine():
    s = multipartite_general([3, 4, 5])
    # |0 3 0⟩ - |0 0 3⟩ factors across the first party
    assert not is_genuinely_entangled(s[3])
