from dataclasses import dataclass, field
from typing import Callable, Sequence

from locally_stable.errors import ParameterError
from locally_stable.families.constructions import (
    bipartite_equal,
    bipartite_general,
    multipartite_equal,
    multipartite_general,
    multipartite_genuine,
    tripartite_general,
)
from locally_stable.qstate import StateSet


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple[str, ...]
    hypothesis: str
    theorem: str
    builder: Callable[..., StateSet] = field(repr=False)
    variadic: bool = False
    variants: tuple[str, ...] = ()

    def build(self, params: Sequence[int], **variants: int) -> StateSet:
        unknown = set(variants) - set(self.variants)
        if unknown:
            raise ParameterError(f"{self.name} has no variant {', '.join(sorted(unknown))}")
        if self.variadic:
            return self.builder(list(params), **variants)
        if len(params) != len(self.params):
            raise ParameterError(
                f"{self.name} takes {len(self.params)} parameters ({', '.join(self.params)}), got {len(params)}"
            )
        return self.builder(*params, **variants)


FAMILIES = (
    FamilySpec(
        "bipartite_equal",
        ("d",),
        "d ≥ 3, 2 ≤ k ≤ d − 1",
        "Theorem 1",
        bipartite_equal,
        variants=("k",),
    ),
    FamilySpec("bipartite_general", ("d1", "d2"), "3 ≤ d1 ≤ d2", "Theorem 2", bipartite_general),
    FamilySpec("multipartite_equal", ("d", "n"), "d ≥ 2, n ≥ 3", "Theorem 3", multipartite_equal),
    FamilySpec(
        "tripartite_general",
        ("d1", "d2", "d3"),
        "3 ≤ d1 ≤ d2 ≤ d3",
        "Theorem 4",
        tripartite_general,
    ),
    FamilySpec(
        "multipartite_general",
        ("dims",),
        "n ≥ 3, 3 ≤ d1 ≤ … ≤ dn",
        "Theorem 5",
        multipartite_general,
        variadic=True,
    ),
    FamilySpec(
        "multipartite_genuine",
        ("dims",),
        "n ≥ 3, 3 ≤ d1 ≤ … ≤ dn",
        "Theorem 6",
        multipartite_genuine,
        variadic=True,
    ),
)


def family_catalog() -> list[FamilySpec]:
    return list(FAMILIES)


def find_family(name: str) -> FamilySpec:
    for spec in FAMILIES:
        if spec.name == name:
            return spec
    known = ", ".join(spec.name for spec in FAMILIES)
    raise ParameterError(f"unknown family {name!r} (known: {known})")


def build_family(name: str, params: Sequence[int], **variants: int) -> StateSet:
    """Look a family up by name and build it"""
    return find_family(name).build(params, **variants)
