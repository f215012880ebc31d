import functools
import logging
from typing import Optional

from locally_stable.prover.facts import (
    COEFFICIENT_TOL,
    ChainRoot,
    Entry,
    EntryFact,
    EqualDiag,
    Factor,
    FactStore,
    Outcome,
    ProofTrace,
    Proportional,
    Rule,
    Zero,
)
from locally_stable.prover.union_find import UnionFind
from locally_stable.qstate import ORTHOGONALITY_TOL, Coefficient, StateSet, is_stopper
from locally_stable.solver.constraints import build_constraints
from locally_stable.util.perf import perf

Row = tuple[tuple[int, int], dict[Entry, Factor]]


@functools.lru_cache(maxsize=16)
def party_rows(s: StateSet, k: int, tol: float, ortho_tol: float = ORTHOGONALITY_TOL) -> tuple[Row, ...]:
    """Nonzero columns of every ordered-pair row, in lexicographic pair order"""
    cs = build_constraints(s, k, tol=ortho_tol)
    return tuple((row.pair, row.columns(tol)) for row in cs.rows)


def factor_value(factor: Factor) -> complex:
    return factor.value if isinstance(factor, Coefficient) else complex(factor)


def _ratio(numerator: Factor, denominator: Factor) -> Factor:
    if isinstance(numerator, Coefficient) and isinstance(denominator, Coefficient):
        return numerator / denominator
    return factor_value(numerator) / factor_value(denominator)


def _compose(a: Factor, b: Factor) -> Factor:
    if isinstance(a, Coefficient) and isinstance(b, Coefficient):
        return a * b
    return factor_value(a) * factor_value(b)


def _stoppers(s: StateSet) -> set[int]:
    return {index for index, state in enumerate(s.states) if is_stopper(state)}


def _step_ref(index: int) -> str:
    return f"#{index}"


def lemma1_scan(
    s: StateSet,
    k: int,
    store: Optional[FactStore] = None,
    tol: float = COEFFICIENT_TOL,
    ortho_tol: float = ORTHOGONALITY_TOL,
) -> list[EntryFact]:
    """Zero every off-diagonal entry that is the only nonzero column of a row"""
    if store is None:
        store = FactStore(s.shape.dims[k])
    stoppers = _stoppers(s)
    found = []
    for (i, j), columns in party_rows(s, k, tol, ortho_tol):
        if i in stoppers or j in stoppers or len(columns) != 1:
            continue
        ((entry, _),) = columns.items()
        if entry[0] == entry[1]:
            continue
        step = store.add(Zero(entry), Rule.LEMMA1, (s.names[i], s.names[j]))
        if step:
            found.append(step)
    logging.debug(f"party {k}: lemma1 zeroed {len(found)} entries")
    return found


def _chain(
    store: FactStore, via: EntryFact, target: Entry, source: Entry, factor: Factor
) -> list[EntryFact]:
    """target = factor · source with source already zero"""
    origin = store.zeros[source]
    composed = _compose(factor, origin.factor)
    links = origin.links + 1
    found = []
    inputs = (_step_ref(via.index), _step_ref(origin.step))
    if links >= 2:
        chain = store.add(
            Proportional(target, origin.root, composed, links),
            Rule.CHAIN,
            inputs,
        )
        if chain:
            found.append(chain)
            inputs = (_step_ref(chain.index), _step_ref(store.zeros[origin.root].step))
    zero = store.add(
        Zero(target),
        Rule.PROPORTIONAL_ZERO,
        inputs,
        root=ChainRoot(origin.root, composed, links, 0),
    )
    if zero:
        found.append(zero)
    return found


def _resolve(store: FactStore) -> list[EntryFact]:
    found: list[EntryFact] = []
    changed = True
    while changed:
        changed = False
        for step in list(store.proportionals):
            fact = step.fact
            assert isinstance(fact, Proportional)
            if store.is_zero(fact.other) and not store.is_zero(fact.entry):
                found += _chain(store, step, fact.entry, fact.other, fact.factor)
            elif store.is_zero(fact.entry) and not store.is_zero(fact.other):
                found += _chain(
                    store, step, fact.other, fact.entry, _ratio(Coefficient.one(), fact.factor)
                )
            else:
                continue
            changed = True
    return found


def propagate(
    s: StateSet,
    k: int,
    store: FactStore,
    tol: float = COEFFICIENT_TOL,
    ortho_tol: float = ORTHOGONALITY_TOL,
) -> list[EntryFact]:
    """Rounds over the rows against the zeros known at the start of each round"""
    rows = party_rows(s, k, tol, ortho_tol)
    dim = store.local_dim
    found: list[EntryFact] = []
    for round_index in range(dim * dim + dim):
        known = dict(store.zeros)
        added: list[EntryFact] = []
        for (i, j), columns in rows:
            unknown = sorted((entry, c) for entry, c in columns.items() if entry not in known)
            if not unknown or len(unknown) > 2 or all(x == y for (x, y), _ in unknown):
                continue
            used = tuple(_step_ref(known[entry].step) for entry in columns if entry in known)
            inputs = (s.names[i], s.names[j], *used)
            if len(unknown) == 1:
                step = store.add(Zero(unknown[0][0]), Rule.SINGLE_UNKNOWN, inputs)
            else:
                (low, c_low), (high, c_high) = unknown
                factor = -_ratio(c_low, c_high)
                step = store.add(Proportional(high, low, factor), Rule.TWO_UNKNOWN, inputs)
            if step:
                added.append(step)
        added += _resolve(store)
        logging.debug(f"party {k} round {round_index}: {len(added)} new facts")
        if not added:
            break
        found += added
    return found


def lemma2_scan(
    s: StateSet,
    k: int,
    store: FactStore,
    tol: float = COEFFICIENT_TOL,
) -> list[EntryFact]:
    """Equal diagonals from two-label states and the stopper, once off-diagonals vanish"""
    if not store.all_off_diagonals_zero():
        store.skipped.append("lemma2: off-diagonal entries unresolved")
        return []
    stopper = s.stopper_index
    if stopper is None:
        store.skipped.append("lemma2: no stopper")
        return []

    found = []
    for index, state in enumerate(s.states):
        if is_stopper(state):
            continue
        labels = state.slot_labels(k)
        if len(labels) != 2:
            continue
        low, high = labels
        column = sum((t.coeff.value for t in state.terms if t.labels[k] == high), 0j)
        if abs(column) <= tol:
            continue
        step = store.add(EqualDiag(high, low), Rule.LEMMA2, (s.names[stopper], s.names[index]))
        if step:
            found.append(step)
    logging.debug(f"party {k}: lemma2 linked {len(found)} diagonal pairs")
    return found


@perf
def prove_trivial(
    s: StateSet,
    k: int,
    tol: float = COEFFICIENT_TOL,
    ortho_tol: float = ORTHOGONALITY_TOL,
) -> ProofTrace:
    """Try to show that only multiples of the identity survive at party k"""
    s.shape.check_party(k)
    dim = s.shape.dims[k]
    store = FactStore(dim)
    lemma1_scan(s, k, store, tol, ortho_tol)
    propagate(s, k, store, tol, ortho_tol)
    lemma2_scan(s, k, store, tol)

    classes = UnionFind(range(dim))
    for first, second in sorted(store.equal_diags):
        classes.union(first, second)
    components = classes.components()

    unresolved = [entry for entry in store.off_diagonals() if not store.is_zero(entry)]
    if len(components) > 1:
        unresolved += [(x, x) for x in range(dim)]
    outcome = Outcome.INCONCLUSIVE if unresolved else Outcome.TRIVIAL
    logging.debug(f"party {k}: {outcome} after {len(store)} facts")
    return ProofTrace(
        k,
        dim,
        tuple(store.steps),
        outcome,
        tuple(sorted(unresolved)),
        tuple(tuple(component) for component in components),
        tuple(store.skipped),
    )
