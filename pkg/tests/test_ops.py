from __future__ import annotations

import pytest

from tpclab.graph import Graph, make_complete, make_empty, make_path, make_star
from tpclab.ops import (
    EdgeKind,
    OpsError,
    Permutation,
    ProductKind,
    ProductVertexMap,
    all_permutations,
    cartesian,
    join,
    lexicographic,
    permutation_graph,
    strong,
)


def test_permutation_basics():
    alpha = Permutation((2, 0, 1))
    assert alpha(0) == 2
    assert alpha.inverse == Permutation((1, 2, 0))
    assert not alpha.is_identity
    assert Permutation.identity(3).is_identity
    assert Permutation.transposition(4, 0, 1).to_json() == [1, 0, 2, 3]
    assert len(list(all_permutations(4))) == 24
    with pytest.raises(OpsError):
        Permutation((0, 0, 1))
    with pytest.raises(OpsError):
        Permutation.from_json([0, "1"])


def test_join_layout():
    p = join(make_path(3), make_complete(1))
    assert p.kind is ProductKind.JOIN
    assert p.graph.n == 4
    assert p.graph.num_edges == 2 + 3
    assert p.labels.label(3) == ("h", 0)
    assert all(p.graph.has_edge(i, 3) for i in range(3))


def test_cartesian_layout():
    p = cartesian(make_path(2), make_path(2))
    assert p.graph == Graph.from_edges(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
    assert p.labels.index((1, 0)) == 2
    q = cartesian(make_path(3), make_star(3))
    assert q.graph.n == 12
    assert q.graph.num_edges == 3 * 3 + 2 * 4


def test_lexicographic_and_strong():
    lex = lexicographic(make_path(2), make_empty(2))
    assert lex.graph.num_edges == 4
    assert not lex.graph.has_edge(0, 1)
    assert lexicographic(make_path(2), make_complete(2)).graph == make_complete(4)
    s = strong(make_path(2), make_path(2))
    assert s.graph == make_complete(4)
    assert len(s.edges_of_kind(EdgeKind.NONCARTESIAN)) == 2
    assert len(s.edges_of_kind(EdgeKind.CARTESIAN)) == 4


def test_permutation_graph():
    p = permutation_graph(make_path(3), Permutation((1, 0, 2)))
    assert p.graph.n == 6
    assert p.graph.num_edges == 2 + 2 + 3
    assert p.edges_of_kind(EdgeKind.CROSS) == [(0, 4), (1, 3), (2, 5)]
    assert p.labels.label(4) == ("u", 1)
    identity = permutation_graph(make_path(3), Permutation.identity(3))
    assert identity.graph == Graph.from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)])
    with pytest.raises(OpsError):
        permutation_graph(make_path(3), Permutation.identity(4))


def test_label_map_json():
    labels = cartesian(make_path(2), make_path(3)).labels
    back = ProductVertexMap.from_json(labels.to_json())
    assert back == labels
    assert back.index((1, 2)) == 5
    with pytest.raises(OpsError):
        back.index((5, 5))
    with pytest.raises(OpsError):
        ProductVertexMap.from_json({"kind": "nope", "labels": []})


def test_product_json_carries_factors():
    payload = permutation_graph(make_path(2), Permutation((1, 0))).to_json()
    assert payload["factors"] == {"op": "permutation", "g": make_path(2).to_json(), "alpha": [1, 0]}
