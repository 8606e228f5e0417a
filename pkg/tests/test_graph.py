from __future__ import annotations

import pytest

from tpclab.graph import (
    Graph,
    GraphError,
    HamiltonianBudgetExceeded,
    bfs_layers,
    bridges,
    diameter,
    enumerate_connected_graphs,
    find_hamiltonian_path,
    is_biconnected,
    is_complete,
    is_connected,
    is_traceable,
    is_tree,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_empty,
    make_path,
    make_spider,
    make_star,
    max_bridges_at_vertex,
    max_degree,
    spanning_tree,
    tree_info,
)


def test_from_edges_normalizes_pairs():
    g = Graph.from_edges(3, [(2, 0), (1, 2)])
    assert g.edge_list == ((0, 2), (1, 2))
    assert g.adjacency[2] == (0, 1)
    assert g.has_edge(0, 2) and g.has_edge(2, 0)
    assert not g.has_edge(0, 1)


@pytest.mark.parametrize("edges", [[(0, 1), (1, 0)], [(1, 1)], [(0, 1, 2)]])
def test_from_edges_rejects_bad_input(edges):
    with pytest.raises(GraphError):
        Graph.from_edges(3, edges)


def test_json_round_trip_and_bad_payloads():
    g = make_cycle(5)
    assert Graph.from_json(g.to_json()) == g
    with pytest.raises(GraphError):
        Graph.from_json({"n": "3", "edges": []})
    with pytest.raises(GraphError):
        Graph.from_json({"n": 2, "edges": [[0, 2]]})


def test_generators():
    assert make_path(4).edge_list == ((0, 1), (1, 2), (2, 3))
    star = make_star(3)
    assert star.degree(0) == 3 and all(star.degree(v) == 1 for v in (1, 2, 3))
    assert make_complete(4).num_edges == 6
    assert make_complete_bipartite(2, 3).num_edges == 6
    assert make_empty(3).num_edges == 0
    spider = make_spider([2, 1, 1])
    assert spider.n == 5
    assert spider.edge_list == ((0, 1), (0, 3), (0, 4), (1, 2))


@pytest.mark.parametrize(
    "make",
    [lambda: make_path(0), lambda: make_star(0), lambda: make_cycle(2), lambda: make_spider([]), lambda: make_spider([1, 0])],
)
def test_generator_preconditions(make):
    with pytest.raises(GraphError):
        make()


def test_structure_queries():
    assert is_complete(make_complete(3))
    assert not is_complete(make_path(3))
    assert max_degree(make_star(4)) == 4
    assert is_tree(make_spider([1, 2]))
    assert not is_tree(make_cycle(4))
    assert is_biconnected(make_cycle(4))
    assert not is_biconnected(make_path(3))
    assert diameter(make_path(5)) == 4
    assert not is_connected(make_empty(2))


def test_bridges():
    tri_pendant = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    assert bridges(tri_pendant) == [(2, 3)]
    assert max_bridges_at_vertex(tri_pendant) == 1
    assert max_bridges_at_vertex(make_star(3)) == 3
    assert bridges(make_cycle(4)) == []


def test_hamiltonian_path():
    assert find_hamiltonian_path(make_path(4)) == (0, 1, 2, 3)
    assert find_hamiltonian_path(make_star(3)) is None
    assert find_hamiltonian_path(make_complete(1)) == (0,)
    path = find_hamiltonian_path(make_complete_bipartite(2, 3))
    assert path is not None and sorted(path) == list(range(5))
    assert is_traceable(make_cycle(6))
    assert not is_traceable(make_complete_bipartite(2, 4))


def test_hamiltonian_budget():
    with pytest.raises(HamiltonianBudgetExceeded):
        find_hamiltonian_path(make_complete_bipartite(3, 5), budget=5)


def test_bfs_layers_and_spanning_tree():
    layers = bfs_layers(make_cycle(5), 0)
    assert layers.layers == ((0,), (1, 4), (2, 3))
    assert layers.eccentricity == 2
    info = spanning_tree(make_complete(5), strategy="min_max_degree")
    assert is_tree(info.tree)
    assert max_degree(info.tree) == 2
    assert spanning_tree(make_complete(5)).tree == make_star(4)
    with pytest.raises(GraphError):
        spanning_tree(make_empty(3))


def test_tree_info():
    info = tree_info(make_spider([2, 1]), root=0)
    assert info.depth == {0: 0, 1: 1, 3: 1, 2: 2}
    assert info.children[0] == (1, 3)
    assert info.path_to_root(2) == [2, 1, 0]
    assert info.leaves() == [2, 3]
    with pytest.raises(GraphError):
        tree_info(make_cycle(3))


@pytest.mark.parametrize("n, count", [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21)])
def test_enumerate_connected_graphs_counts(n, count):
    graphs = list(enumerate_connected_graphs(n))
    assert len(graphs) == count
    assert all(g.n == n and is_connected(g) for g in graphs)


def test_enumerate_canonical_matches_atlas():
    assert len(list(enumerate_connected_graphs(4, method="canonical"))) == 6
    assert len(list(enumerate_connected_graphs(3, unique=False))) == 4


def test_enumerate_cap():
    with pytest.raises(GraphError):
        list(enumerate_connected_graphs(8))
