import logging
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from locally_stable.errors import OrthogonalityError, ShapeMismatchError
from locally_stable.qstate.overlap import inner_product
from locally_stable.qstate.shape import SystemShape
from locally_stable.qstate.state import PureState, is_stopper

ORTHOGONALITY_TOL = 1e-9
STOPPER_NAME = "S"


@dataclass(frozen=True)
class OrthogonalityCheck:
    ok: bool
    pair: Optional[tuple[int, int]] = None
    overlap: float = 0.0

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class StateSet:
    shape: SystemShape
    states: tuple[PureState, ...]
    names: tuple[str, ...]

    @classmethod
    def construct(
        cls,
        states: Sequence[PureState],
        names: Optional[Sequence[str]] = None,
        shape: Optional[SystemShape] = None,
        validate: bool = True,
        tol: float = ORTHOGONALITY_TOL,
    ) -> "StateSet":
        """Build a set, checking shapes and (optionally) pairwise orthogonality"""
        if shape is None:
            if not states:
                raise ValueError("an empty state set needs an explicit shape")
            shape = states[0].shape
        for index, state in enumerate(states):
            if state.shape != shape:
                raise ShapeMismatchError(
                    f"state {index} has shape {state.shape}, set has {shape}"
                )
            if state.is_zero:
                raise ValueError(f"state {index} is the zero state")

        if names is None:
            names = default_names(states)
        elif len(names) != len(states):
            raise ValueError(f"{len(names)} names for {len(states)} states")

        state_set = cls(shape, tuple(states), tuple(names))
        if validate:
            check = is_orthogonal_set(state_set, tol)
            if not check:
                raise OrthogonalityError(check.pair, check.overlap)
        return state_set

    def __len__(self) -> int:
        return len(self.states)

    def __iter__(self) -> Iterator[PureState]:
        return iter(self.states)

    def __getitem__(self, index: int) -> PureState:
        return self.states[index]

    @property
    def stopper_index(self) -> Optional[int]:
        for index, state in enumerate(self.states):
            if is_stopper(state):
                return index
        return None

    def without(self, index: int) -> "StateSet":
        """The set minus one state; a subset of an orthogonal set stays orthogonal"""
        if not 0 <= index < len(self.states):
            raise IndexError(f"state {index} out of range for {len(self.states)} states")
        keep = [i for i in range(len(self.states)) if i != index]
        return StateSet(
            self.shape,
            tuple(self.states[i] for i in keep),
            tuple(self.names[i] for i in keep),
        )


def default_names(states: Sequence[PureState]) -> list[str]:
    return [
        STOPPER_NAME if is_stopper(state) else f"phi_{index}"
        for index, state in enumerate(states)
    ]


def is_orthogonal_set(s: StateSet, tol: float = ORTHOGONALITY_TOL) -> OrthogonalityCheck:
    """Pairwise |⟨i|j⟩| ≤ tol·max(‖i‖‖j‖, 1), reporting the first offending pair"""
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    norms = [state.norm for state in s.states]
    for i in range(len(s.states)):
        for j in range(i + 1, len(s.states)):
            overlap = abs(inner_product(s.states[i], s.states[j]))
            if overlap > tol * max(norms[i] * norms[j], 1.0):
                logging.debug(f"states {i} and {j} overlap by {overlap}")
                return OrthogonalityCheck(False, (i, j), overlap)
    return OrthogonalityCheck(True)
