from __future__ import annotations

import pytest

from tpclab.coloring import ColoringError, TotalColoring, canonical_assignments, elements, uniform
from tpclab.graph import make_path, make_star


def test_palette_bounds():
    with pytest.raises(ColoringError):
        TotalColoring(k=0)
    with pytest.raises(ColoringError):
        TotalColoring(k=2, vertex_colors=(1, 3))
    with pytest.raises(ColoringError):
        TotalColoring(k=2, edge_colors={(1, 0): 1})


def test_validate_catches_missing_and_extra():
    g = make_path(3)
    TotalColoring(k=3, vertex_colors=(1, 2, 3), edge_colors={(0, 1): 3, (1, 2): 1}).validate(g)
    with pytest.raises(ColoringError):
        TotalColoring(k=3, vertex_colors=(1, 2, 3), edge_colors={(0, 1): 3}).validate(g)
    with pytest.raises(ColoringError):
        TotalColoring(k=3, vertex_colors=(1, 2, 3), edge_colors={(0, 1): 3, (1, 2): 1, (0, 2): 1}).validate(g)
    TotalColoring(k=2, edge_colors={(0, 1): 1, (1, 2): 2}).validate(g, vertices=False)


def test_from_assignment_uses_canonical_order():
    g = make_path(3)
    assert elements(g) == [("v", 0), ("v", 1), ("v", 2), ("e", (0, 1)), ("e", (1, 2))]
    c = TotalColoring.from_assignment(g, 3, [1, 2, 3, 3, 1])
    assert c.vertex_colors == (1, 2, 3)
    assert c.edge_colors == {(0, 1): 3, (1, 2): 1}
    assert c.assignment(g) == [1, 2, 3, 3, 1]
    with pytest.raises(ColoringError):
        TotalColoring.from_assignment(g, 3, [1, 2])


def test_json_codec():
    c = TotalColoring(k=3, vertex_colors=(1, 2, 1), edge_colors={(0, 1): 3, (1, 2): 1})
    payload = c.to_json()
    assert payload == {"k": 3, "vertex_colors": [1, 2, 1], "edge_colors": {"0-1": 3, "1-2": 1}}
    assert TotalColoring.from_json(payload) == c
    with pytest.raises(ColoringError):
        TotalColoring.from_json({"vertex_colors": []})
    with pytest.raises(ColoringError):
        TotalColoring.from_json({"k": 2, "edge_colors": {"0:1": 1}})


def test_permuted_and_transported():
    c = TotalColoring(k=3, vertex_colors=(1, 2, 3), edge_colors={(0, 1): 3, (1, 2): 1})
    p = c.permuted({1: 2, 2: 3, 3: 1})
    assert p.vertex_colors == (2, 3, 1)
    assert p.edge_colors == {(0, 1): 1, (1, 2): 2}
    assert c.permuted([1, 2, 3]) == c
    with pytest.raises(ColoringError):
        c.permuted({1: 1, 2: 1, 3: 3})
    moved = c.transported([2, 1, 0])
    assert moved.vertex_colors == (3, 2, 1)
    assert moved.edge_colors == {(1, 2): 3, (0, 1): 1}


def test_restricted_and_uniform():
    star = make_star(3)
    c = uniform(star, color=2, k=2)
    assert c.colors_used() == {2}
    sub = star.spanning_subgraph([(0, 1)])
    assert c.restricted_to(sub).edge_colors == {(0, 1): 2}


@pytest.mark.parametrize(
    "count, k, exact, expected",
    [
        (3, 2, True, [(1, 1, 2), (1, 2, 1), (1, 2, 2)]),
        (3, 2, False, [(1, 1, 1), (1, 1, 2), (1, 2, 1), (1, 2, 2)]),
        (2, 3, True, []),
        (0, 0, True, [()]),
    ],
)
def test_canonical_assignments(count, k, exact, expected):
    assert list(canonical_assignments(count, k, exact=exact)) == expected


def test_canonical_assignments_counts_match_stirling():
    # S(5, 3) = 25
    assert sum(1 for _ in canonical_assignments(5, 3)) == 25
    assert list(canonical_assignments(3, 2, prefix=(1, 2))) == [(1, 2, 1), (1, 2, 2)]
