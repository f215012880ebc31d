import pytest

from locally_stable.errors import HypothesisError, ParameterError
from locally_stable.families.catalog import build_family, family_catalog, find_family


def test_catalog_entries():
    catalog = family_catalog()
    assert len(catalog) == 6
    assert "d ≥ 3" in find_family("bipartite_equal").hypothesis
    assert find_family("multipartite_equal").hypothesis == "d ≥ 2, n ≥ 3"
    assert {spec.theorem for spec in catalog} == {f"Theorem {i}" for i in range(1, 7)}


@pytest.mark.parametrize(
    "name, params, variants, size",
    [
        ("bipartite_equal", [5], {}, 6),
        ("bipartite_equal", [5], {"k": 3}, 6),
        ("bipartite_general", [3, 4], {}, 5),
        ("multipartite_equal", [3, 3], {}, 4),
        ("tripartite_general", [5, 7, 10], {}, 11),
        ("multipartite_general", [3, 4, 5, 6], {}, 7),
        ("multipartite_genuine", [3, 3, 4], {}, 5),
    ],
)
def test_build_family(name: str, params: list[int], variants: dict[str, int], size: int):
    assert len(build_family(name, params, **variants)) == size


def test_build_family_errors():
    with pytest.raises(ParameterError, match="unknown family"):
        build_family("bipartite", [3])
    with pytest.raises(ParameterError, match="takes 2 parameters"):
        build_family("bipartite_general", [3])
    with pytest.raises(ParameterError, match="no variant k"):
        build_family("bipartite_general", [3, 4], k=2)
    with pytest.raises(HypothesisError, match="d ≥ 3"):
        build_family("bipartite_equal", [2])
