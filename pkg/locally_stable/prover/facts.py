from dataclasses import dataclass, field
from enum import StrEnum
from typing import Optional

from locally_stable.qstate import Coefficient

Entry = tuple[int, int]
Factor = Coefficient | complex

COEFFICIENT_TOL = 1e-9


class Rule(StrEnum):
    LEMMA1 = "lemma1"
    SINGLE_UNKNOWN = "single-unknown"
    TWO_UNKNOWN = "two-unknown"
    PROPORTIONAL_ZERO = "proportional-zero"
    CHAIN = "chain"
    LEMMA2 = "lemma2"


class Outcome(StrEnum):
    TRIVIAL = "trivial"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Zero:
    entry: Entry


@dataclass(frozen=True)
class Proportional:
    """m[entry] = factor · m[other], composed over `links` rows"""

    entry: Entry
    other: Entry
    factor: Factor
    links: int = 1


@dataclass(frozen=True)
class EqualDiag:
    first: int
    second: int


Fact = Zero | Proportional | EqualDiag


@dataclass(frozen=True)
class Justification:
    rule: Rule
    inputs: tuple[str, ...]


@dataclass(frozen=True)
class EntryFact:
    index: int
    fact: Fact
    justification: Justification


@dataclass
class ChainRoot:
    """How a zero entry traces back to the zero that started its chain"""

    root: Entry
    factor: Factor
    links: int
    step: int


class FactStore:
    """Grow-only store of deduced facts for one party"""

    def __init__(self, local_dim: int) -> None:
        self.local_dim = local_dim
        self.steps: list[EntryFact] = []
        self.zeros: dict[Entry, ChainRoot] = {}
        self.proportionals: list[EntryFact] = []
        self.equal_diags: set[tuple[int, int]] = set()
        self.skipped: list[str] = []
        self._known: set[Fact] = set()

    def __len__(self) -> int:
        return len(self.steps)

    def is_zero(self, entry: Entry) -> bool:
        return entry in self.zeros

    def off_diagonals(self) -> list[Entry]:
        return [
            (x, y)
            for x in range(self.local_dim)
            for y in range(self.local_dim)
            if x != y
        ]

    def all_off_diagonals_zero(self) -> bool:
        return all(self.is_zero(entry) for entry in self.off_diagonals())

    def add(
        self, fact: Fact, rule: Rule, inputs: tuple[str, ...], root: Optional[ChainRoot] = None
    ) -> Optional[EntryFact]:
        """Record a fact once; returns None when it was already known"""
        if fact in self._known:
            return None
        if isinstance(fact, Zero) and self.is_zero(fact.entry):
            return None
        if isinstance(fact, EqualDiag):
            pair = (max(fact.first, fact.second), min(fact.first, fact.second))
            if pair in self.equal_diags:
                return None
            self.equal_diags.add(pair)

        step = EntryFact(len(self.steps), fact, Justification(rule, inputs))
        self.steps.append(step)
        self._known.add(fact)
        match fact:
            case Zero(entry=entry):
                origin = root or ChainRoot(entry, Coefficient.one(), 0, 0)
                origin.step = step.index
                self.zeros[entry] = origin
            case Proportional():
                self.proportionals.append(step)
        return step


@dataclass(frozen=True)
class ProofTrace:
    party: int
    local_dim: int
    steps: tuple[EntryFact, ...]
    outcome: Outcome
    unresolved: tuple[Entry, ...]
    diagonal_classes: tuple[tuple[int, ...], ...]
    skipped: tuple[str, ...] = field(default=())

    @property
    def trivial(self) -> bool:
        return self.outcome == Outcome.TRIVIAL

    def facts(self, kind: type) -> list[EntryFact]:
        return [step for step in self.steps if isinstance(step.fact, kind)]

    def zero_entries(self, rule: Optional[Rule] = None) -> set[Entry]:
        return {
            step.fact.entry
            for step in self.facts(Zero)
            if rule is None or step.justification.rule == rule
        }
