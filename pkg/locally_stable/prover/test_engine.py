import pathlib

import pytest

from locally_stable.conftest import bell_basis, case_id, family_parameters, product_basis
from locally_stable.families import (
    bipartite_equal,
    bipartite_general,
    build_family,
    stopper_state,
    tripartite_general,
)
from locally_stable.prover.engine import lemma1_scan, lemma2_scan, propagate, prove_trivial
from locally_stable.prover.facts import (
    EqualDiag,
    FactStore,
    Outcome,
    Proportional,
    Rule,
    Zero,
)
from locally_stable.qstate import Coefficient, PureState, StateSet, SystemShape

PACKAGE_DIR = pathlib.Path(__file__).parent
MINUS = Coefficient(-1)


def read_entries(name: str) -> set[tuple[int, int]]:
    with open(PACKAGE_DIR / name) as file:
        return {
            tuple(int(value) for value in line.split(","))  # type: ignore[misc]
            for line in file.read().splitlines()
            if line
        }


@pytest.fixture
def table_set() -> StateSet:
    return tripartite_general(5, 7, 10)


def test_lemma1_single_column():
    steps = lemma1_scan(bipartite_equal(3), 0)
    by_entry = {step.fact.entry: step for step in steps}
    assert by_entry[(1, 2)].justification.inputs == ("phi_1", "phi_2")
    assert all(step.justification.rule == Rule.LEMMA1 for step in steps)
    assert (0, 2) not in by_entry


def test_lemma1_zero_table(table_set: StateSet):
    steps = lemma1_scan(table_set, 2)
    assert {step.fact.entry for step in steps} == read_entries("lemma1_zeros_5_7_10.txt")


def test_lemma1_ignores_rows_without_columns():
    shape = SystemShape((2, 2))
    s = StateSet.construct(
        [
            PureState.construct(shape, [((0, 0), Coefficient.one())]),
            PureState.construct(shape, [((1, 1), Coefficient.one())]),
        ]
    )
    assert lemma1_scan(s, 0) == []


def test_single_unknown_propagation():
    s = bipartite_equal(3)
    store = FactStore(3)
    lemma1_scan(s, 0, store)
    steps = propagate(s, 0, store)
    zero = next(step for step in steps if step.fact == Zero((0, 2)))
    assert zero.justification.rule == Rule.SINGLE_UNKNOWN
    assert zero.justification.inputs[:2] == ("phi_0", "phi_2")
    assert store.all_off_diagonals_zero()


def test_propagate_fixed_point_without_rows():
    s = product_basis()
    store = FactStore(2)
    lemma1_scan(s, 0, store)
    assert store.all_off_diagonals_zero()
    assert propagate(s, 0, store) == []


def test_chain_is_composed():
    s = bipartite_general(3, 6)
    trace = prove_trivial(s, 1)
    chains = [step.fact for step in trace.steps if step.justification.rule == Rule.CHAIN]
    assert Proportional((4, 5), (2, 3), Coefficient.one(), 2) in chains
    assert Proportional((5, 4), (3, 2), Coefficient.one(), 2) in chains
    two_unknown = [
        step.fact for step in trace.steps if step.justification.rule == Rule.TWO_UNKNOWN
    ]
    assert Proportional((3, 4), (2, 3), MINUS) in two_unknown
    assert trace.trivial


def test_lemma2_table(table_set: StateSet):
    trace = prove_trivial(table_set, 2)
    diagonal = [step for step in trace.steps if step.justification.rule == Rule.LEMMA2]
    facts = {(step.fact.first, step.fact.second) for step in diagonal}
    assert facts == read_entries("diagonal_facts_5_7_10.txt")
    assert all(step.justification.inputs[0] == "S" for step in diagonal)
    assert trace.diagonal_classes == (tuple(range(10)),)
    assert trace.trivial


def test_lemma2_two_label_states():
    s = bipartite_equal(3)
    store = FactStore(3)
    lemma1_scan(s, 0, store)
    propagate(s, 0, store)
    facts = {step.fact for step in lemma2_scan(s, 0, store)}
    assert facts == {EqualDiag(1, 0), EqualDiag(2, 0)}


def test_lemma2_preconditions():
    s = bipartite_equal(3)
    store = FactStore(3)
    assert lemma2_scan(s, 0, store) == []
    assert store.skipped == ["lemma2: off-diagonal entries unresolved"]

    s = product_basis()
    store = FactStore(2)
    lemma1_scan(s, 0, store)
    assert lemma2_scan(s, 0, store) == []
    assert store.skipped == ["lemma2: no stopper"]


def test_lemma2_skips_three_label_states():
    shape = SystemShape((3, 3))
    spread = PureState.construct(
        shape, [((x, x), Coefficient.root(3, x)) for x in range(3)]
    )
    s = StateSet.construct([spread, stopper_state(shape)])
    store = FactStore(3)
    for entry in store.off_diagonals():
        store.add(Zero(entry), Rule.LEMMA1, ())
    assert lemma2_scan(s, 0, store) == []
    assert store.skipped == []


@pytest.mark.parametrize("case", family_parameters(), ids=case_id)
def test_family_sets_are_proved_trivial(case):
    name, params, variants = case
    s = build_family(name, params, **variants)
    for k in range(s.shape.n):
        trace = prove_trivial(s, k)
        assert trace.outcome == Outcome.TRIVIAL, f"party {k}: {trace.unresolved}"
        assert trace.unresolved == ()
        assert trace.skipped == ()


def test_product_basis_is_inconclusive():
    trace = prove_trivial(product_basis(), 0)
    assert trace.outcome == Outcome.INCONCLUSIVE
    assert trace.unresolved == ((0, 0), (1, 1))
    assert trace.diagonal_classes == ((0,), (1,))
    assert trace.skipped == ("lemma2: no stopper",)


def test_bell_basis_is_inconclusive():
    trace = prove_trivial(bell_basis(), 0)
    assert not trace.trivial
    assert (0, 1) in trace.unresolved and (1, 0) in trace.unresolved
    facts = [step.fact for step in trace.facts(Proportional)]
    assert facts == [
        Proportional((1, 0), (0, 1), MINUS),
        Proportional((1, 0), (0, 1), Coefficient.one()),
    ]
    assert trace.facts(Zero) == []


def test_determinism(table_set: StateSet):
    first = prove_trivial(table_set, 1)
    second = prove_trivial(tripartite_general(5, 7, 10), 1)
    assert first == second


def test_steps_are_numbered_in_order():
    trace = prove_trivial(tripartite_general(3, 4, 5), 2)
    assert [step.index for step in trace.steps] == list(range(len(trace.steps)))
    assert trace.zero_entries() == {
        (x, y) for x in range(5) for y in range(5) if x != y
    }


def test_invalid_party():
    with pytest.raises(IndexError):
        prove_trivial(bipartite_equal(3), 2)
