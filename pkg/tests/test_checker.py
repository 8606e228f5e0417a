from __future__ import annotations

import itertools

import pytest

from tpclab.checker import (
    CheckBudgetExceeded,
    CheckerError,
    PathFlavor,
    exists_path,
    exists_path_naive,
    first_failure,
    is_proper_path,
    is_total_proper_connected,
    is_total_proper_path,
    walk_feasibility,
)
from tpclab.coloring import TotalColoring, uniform
from tpclab.graph import make_cycle, make_empty, make_path, make_star


def periodic_path(n: int) -> TotalColoring:
    """1,2,3 repeating along v0 e01 v1 e12 ... of P_n."""
    g = make_path(n)
    values = []
    for i in range(n):
        values.append(("v", i, (2 * i) % 3 + 1))
    for i in range(n - 1):
        values.append(("e", (i, i + 1), (2 * i + 1) % 3 + 1))
    return TotalColoring(
        k=3,
        vertex_colors=tuple(c for kind, _, c in values if kind == "v"),
        edge_colors={e: c for kind, e, c in values if kind == "e"},
    )


@pytest.mark.parametrize("raw, flavor", [("total", PathFlavor.TOTAL), ("pc", PathFlavor.EDGE), ("vertex_proper", PathFlavor.VERTEX)])
def test_flavor_parse(raw, flavor):
    assert PathFlavor.parse(raw) is flavor


def test_flavor_parse_rejects_unknown():
    with pytest.raises(CheckerError):
        PathFlavor.parse("rainbow")


def test_single_edge_is_always_total_proper():
    g = make_path(2)
    assert is_total_proper_path(g, uniform(g), [0, 1])


def test_total_proper_path_conditions():
    g = make_path(3)
    good = TotalColoring(k=3, vertex_colors=(1, 2, 1), edge_colors={(0, 1): 1, (1, 2): 3})
    assert is_total_proper_path(g, good, [0, 1, 2])
    same_edges = TotalColoring(k=3, vertex_colors=(1, 2, 1), edge_colors={(0, 1): 3, (1, 2): 3})
    assert not is_total_proper_path(g, same_edges, [0, 1, 2])
    vertex_clash = TotalColoring(k=3, vertex_colors=(1, 3, 1), edge_colors={(0, 1): 1, (1, 2): 3})
    assert not is_total_proper_path(g, vertex_clash, [0, 1, 2])
    assert is_proper_path(g, vertex_clash, [0, 1, 2], PathFlavor.EDGE)


def test_internal_adjacent_vertices_must_differ():
    g = make_path(4)
    c = TotalColoring(k=3, vertex_colors=(1, 2, 2, 1), edge_colors={(0, 1): 1, (1, 2): 3, (2, 3): 1})
    assert not is_total_proper_path(g, c, [0, 1, 2, 3])
    assert is_proper_path(g, c, [0, 1, 2, 3], PathFlavor.EDGE)
    assert not is_proper_path(g, c, [0, 1, 2, 3], PathFlavor.VERTEX)


@pytest.mark.parametrize("path", [[0], [0, 1, 0], [0, 2], [0, 5]])
def test_non_paths_are_rejected(path):
    g = make_path(3)
    with pytest.raises(CheckerError):
        is_total_proper_path(g, uniform(g), path)


def test_periodic_path_is_connected():
    g = make_path(5)
    report = is_total_proper_connected(g, periodic_path(5))
    assert report.connected
    assert report.failures == ()
    assert report.witnesses[(0, 4)] == (0, 1, 2, 3, 4)
    for (u, v), w in report.witnesses.items():
        assert w[0] == u and w[-1] == v
        assert is_total_proper_path(g, periodic_path(5), w)


def test_uniform_coloring_fails_on_the_star():
    star = make_star(3)
    report = is_total_proper_connected(star, uniform(star))
    assert not report.connected
    assert set(report.failures) == {(1, 2), (1, 3), (2, 3)}
    assert first_failure(star, uniform(star)) == (1, 2)
    payload = report.to_json()
    assert payload["connected"] is False
    assert payload["failures"][0] == [1, 2]


def test_exists_path_finds_the_detour():
    # on C_5 the direct 0-2 route is blocked, the long way round is fine
    g = make_cycle(5)
    c = TotalColoring(
        k=3,
        vertex_colors=(1, 1, 2, 2, 3),
        edge_colors={(0, 1): 2, (1, 2): 2, (2, 3): 3, (3, 4): 1, (0, 4): 2},
    )
    assert exists_path(g, c, 0, 2) == (0, 4, 3, 2)
    assert exists_path_naive(g, c, 0, 2) == (0, 4, 3, 2)
    assert is_total_proper_path(g, c, [0, 4, 3, 2])


def test_exists_path_agrees_with_naive_on_all_p4_colorings():
    g = make_path(4)
    for values in itertools.product((1, 2), repeat=g.n + g.num_edges):
        c = TotalColoring.from_assignment(g, 2, list(values))
        fast = exists_path(g, c, 0, 3)
        slow = exists_path_naive(g, c, 0, 3)
        assert (fast is None) == (slow is None)
        assert walk_feasibility(g, c, 0, 3) or fast is None


def test_exists_path_errors():
    g = make_path(3)
    with pytest.raises(CheckerError):
        exists_path(g, uniform(g), 1, 1)
    with pytest.raises(CheckerError):
        exists_path(g, uniform(g), 0, 7)


def test_pair_budget():
    g = make_path(5)
    assert exists_path(g, periodic_path(5), 0, 1, budget=0) == (0, 1)
    with pytest.raises(CheckBudgetExceeded):
        exists_path(g, periodic_path(5), 0, 4, budget=0)


def test_connectivity_needs_connected_graph():
    g = make_empty(2)
    with pytest.raises(CheckerError):
        is_total_proper_connected(g, TotalColoring(k=1, vertex_colors=(1, 1)))


def test_edge_flavor_reads_edge_only_colorings():
    g = make_path(4)
    c = TotalColoring(k=2, edge_colors={(0, 1): 1, (1, 2): 2, (2, 3): 1})
    assert is_total_proper_connected(g, c, PathFlavor.EDGE).connected
    with pytest.raises(CheckerError):
        is_total_proper_connected(g, c, PathFlavor.TOTAL)


def test_vertex_flavor_reads_vertex_only_colorings():
    g = make_path(4)
    assert is_total_proper_connected(g, TotalColoring(k=2, vertex_colors=(1, 1, 2, 1)), PathFlavor.VERTEX).connected
    assert not is_total_proper_connected(g, TotalColoring(k=1, vertex_colors=(1, 1, 1, 1)), PathFlavor.VERTEX).connected


def test_parallel_check_matches_sequential():
    g = make_path(5)
    c = periodic_path(5)
    assert is_total_proper_connected(g, c, workers=2).to_json() == is_total_proper_connected(g, c).to_json()
