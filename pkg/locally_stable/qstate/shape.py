import itertools
import math
from dataclasses import dataclass
from typing import Iterator


@dataclass(frozen=True)
class SystemShape:
    dims: tuple[int, ...]

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        if not dims:
            raise ValueError("a system needs at least one party")
        for party, dim in enumerate(dims):
            if dim < 2:
                raise ValueError(f"local dimension {dim} < 2 at party {party}")
        object.__setattr__(self, "dims", dims)

    @property
    def n(self) -> int:
        return len(self.dims)

    @property
    def total(self) -> int:
        return math.prod(self.dims)

    def check_party(self, k: int) -> None:
        if not 0 <= k < self.n:
            raise IndexError(f"party {k} out of range for {self.n} parties")

    def label_tuples(self) -> Iterator[tuple[int, ...]]:
        """All computational basis labels in lexicographic order"""
        return itertools.product(*(range(dim) for dim in self.dims))

    def __str__(self) -> str:
        return "⊗".join(str(dim) for dim in self.dims)
