from typing import Generic, Hashable, Iterable, TypeVar

T = TypeVar("T", bound=Hashable)


class UnionFindLeaf(Generic[T]):
    def __init__(self, value: T) -> None:
        self.value = value
        self.size = 1
        self.parent = self


class UnionFind(Generic[T]):
    """Equality classes with union by size and path halving"""

    def __init__(self, values: Iterable[T]) -> None:
        self.values = {value: UnionFindLeaf(value) for value in values}

    def find(self, value: T) -> UnionFindLeaf[T]:
        leaf = self.values[value]
        while leaf.parent is not leaf:
            leaf.parent = leaf.parent.parent
            leaf = leaf.parent
        return leaf

    def union(self, value1: T, value2: T) -> bool:
        """Merge two classes, False when they were already one"""
        root1 = self.find(value1)
        root2 = self.find(value2)
        if root1 is root2:
            return False
        if root1.size < root2.size:
            root1, root2 = root2, root1
        root2.parent = root1
        root1.size += root2.size
        return True

    def are_in_the_same_component(self, value1: T, value2: T) -> bool:
        return self.find(value1) is self.find(value2)

    def components(self) -> list[list[T]]:
        """Classes as sorted lists, ordered by their smallest member"""
        groups: dict[T, list[T]] = {}
        for value in self.values:
            groups.setdefault(self.find(value).value, []).append(value)
        return sorted((sorted(group) for group in groups.values()), key=lambda g: g[0])
