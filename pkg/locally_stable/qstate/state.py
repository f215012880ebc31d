import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from locally_stable.qstate.coefficient import Coefficient
from locally_stable.qstate.shape import SystemShape

Labels = tuple[int, ...]


@dataclass(frozen=True)
class BasisTerm:
    labels: Labels
    coeff: Coefficient


@dataclass(frozen=True)
class PureState:
    """Unnormalized sparse state, terms sorted by labels with distinct labels"""

    shape: SystemShape
    terms: tuple[BasisTerm, ...]

    @classmethod
    def construct(
        cls,
        shape: SystemShape,
        terms: Iterable[BasisTerm | tuple[Sequence[int], Coefficient]],
    ) -> "PureState":
        """Canonicalize terms: merge duplicate labels, drop zeros, sort"""
        merged: dict[Labels, Coefficient] = {}
        for term in terms:
            if isinstance(term, BasisTerm):
                labels, coeff = term.labels, term.coeff
            else:
                labels, coeff = tuple(term[0]), term[1]
            labels = tuple(int(label) for label in labels)
            _check_labels(shape, labels)
            if labels in merged:
                total = merged[labels].try_add(coeff)
                if total is None:
                    raise ValueError(
                        f"terms {merged[labels]} and {coeff} on {ket(labels)} do not merge into a monomial"
                    )
                merged[labels] = total
            else:
                merged[labels] = coeff

        return cls(
            shape,
            tuple(
                BasisTerm(labels, coeff)
                for labels, coeff in sorted(merged.items())
                if not coeff.is_zero
            ),
        )

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def norm_squared(self) -> Fraction:
        return sum((term.coeff.scale**2 for term in self.terms), Fraction(0))

    @property
    def norm(self) -> float:
        return math.sqrt(self.norm_squared)

    def coefficient(self, labels: Sequence[int]) -> Coefficient:
        for term in self.terms:
            if term.labels == tuple(labels):
                return term.coeff
        return Coefficient(Fraction(0))

    def scaled(self, factor: Coefficient) -> "PureState":
        return PureState.construct(
            self.shape, (BasisTerm(t.labels, t.coeff * factor) for t in self.terms)
        )

    def permute_labels(self, party: int, permutation: Sequence[int]) -> "PureState":
        """Apply a local permutation of the computational basis at one party"""
        self.shape.check_party(party)
        if sorted(permutation) != list(range(self.shape.dims[party])):
            raise ValueError(f"{list(permutation)} is not a permutation at party {party}")
        return PureState.construct(
            self.shape,
            (
                BasisTerm(_replace(t.labels, party, permutation[t.labels[party]]), t.coeff)
                for t in self.terms
            ),
        )

    def apply_phases(self, party: int, phases: Sequence[Coefficient]) -> "PureState":
        """Apply a local diagonal unitary at one party"""
        self.shape.check_party(party)
        if len(phases) != self.shape.dims[party]:
            raise ValueError(
                f"expected {self.shape.dims[party]} phases at party {party}, got {len(phases)}"
            )
        return PureState.construct(
            self.shape,
            (BasisTerm(t.labels, t.coeff * phases[t.labels[party]]) for t in self.terms),
        )

    def slot_labels(self, party: int) -> list[int]:
        """Distinct labels this state uses at one party"""
        return sorted({term.labels[party] for term in self.terms})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        text = ""
        for term in self.terms:
            coeff = str(term.coeff)
            sign = "+"
            if coeff.startswith("-"):
                sign, coeff = "-", coeff[1:]
            if coeff == "1":
                coeff = ""
            if text:
                text += f" {sign} {coeff}{ket(term.labels)}"
            else:
                text = f"{sign.strip('+')}{coeff}{ket(term.labels)}"
        return text


def ket(labels: Sequence[int]) -> str:
    if all(label < 10 for label in labels):
        return "|" + "".join(str(label) for label in labels) + "⟩"
    return "|" + ",".join(str(label) for label in labels) + "⟩"


def _replace(labels: Labels, party: int, label: int) -> Labels:
    return labels[:party] + (label,) + labels[party + 1 :]


def _check_labels(shape: SystemShape, labels: Labels) -> None:
    if len(labels) != shape.n:
        raise ValueError(f"{len(labels)} labels for {shape.n} parties")
    for party, (label, dim) in enumerate(zip(labels, shape.dims)):
        if label < 0:
            raise ValueError(f"negative label {label} at party {party}")
        if label >= dim:
            raise ValueError(f"label {label} ≥ dim {dim} at party {party}")


def is_stopper(state: PureState) -> bool:
    """All label tuples present with one common coefficient"""
    if not state.terms or len(state.terms) != state.shape.total:
        return False
    first = state.terms[0].coeff
    return all(term.coeff == first for term in state.terms)
