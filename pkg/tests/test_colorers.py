from __future__ import annotations

import pytest

from tpclab.checker import is_total_proper_connected
from tpclab.colorers import (
    THEOREMS,
    ColorerError,
    ColoringDraft,
    apply_theorem,
    color_by_search,
    color_cartesian_near_star,
    color_cartesian_star,
    color_cartesian_traceable,
    color_complete_bipartite,
    color_join_general,
    color_join_with_k1,
    color_lexicographic,
    color_permutation_star,
    color_permutation_traceable,
    color_spanning_tree,
    color_strong,
    color_traceable,
    color_tree,
    search_coloring,
    third,
)
from tpclab.colorers.search import tree_coloring
from tpclab.graph import (
    Graph,
    enumerate_connected_graphs,
    is_complete,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_empty,
    make_path,
    make_spider,
    make_star,
    spanning_tree,
)
from tpclab.ops import Permutation, all_permutations, cartesian, join, lexicographic, permutation_graph, strong


def assert_three(outcome, expected: Graph) -> None:
    assert outcome.graph == expected
    assert outcome.k == 3
    assert outcome.verified
    assert outcome.coloring.colors_used() <= {1, 2, 3}
    assert is_total_proper_connected(expected, outcome.coloring).connected


def non_complete(n_min: int, n_max: int) -> list[Graph]:
    return [g for n in range(n_min, n_max + 1) for g in enumerate_connected_graphs(n) if not is_complete(g)]


# ---------------------------------------------------------------------------
# Draft machinery
# ---------------------------------------------------------------------------


def test_third():
    assert third(1, 2) == 3
    assert third(3, 1) == 2
    assert third(2, 2) == 1


def test_paint_trail_is_periodic():
    g = make_path(4)
    draft = ColoringDraft(g)
    assert draft.paint_trail([0, 1, 2, 3], phase=0) == 0
    assert draft.vertex == [1, 3, 2, 1]
    assert [draft.get_edge(i, i + 1) for i in range(3)] == [2, 1, 3]


def test_paint_trail_keeps_existing_colors_and_counts_clashes():
    g = make_path(3)
    draft = ColoringDraft(g)
    draft.set_vertex(1, 2)
    assert draft.paint_trail([0, 1, 2], phase=0) == 1
    assert draft.get_vertex(1) == 2
    assert draft.conflicts == 1


def test_paint_trail_picks_the_phase_that_fits():
    g = make_path(3)
    draft = ColoringDraft(g)
    draft.set_edge(0, 1, 1)
    assert draft.paint_trail([0, 1, 2]) == 0
    assert draft.get_edge(0, 1) == 1


def test_set_edge_rejects_non_edges():
    with pytest.raises(ColorerError):
        ColoringDraft(make_path(3)).set_edge(0, 2, 1)


def test_fill_and_coloring():
    g = make_star(2)
    draft = ColoringDraft(g)
    with pytest.raises(ColorerError):
        draft.coloring()
    draft.set_edge(0, 1, 1)
    draft.fill()
    c = draft.coloring()
    assert c.vertex_colors[0] == 2
    assert c.edge_colors[(0, 2)] == 3


# ---------------------------------------------------------------------------
# Basic families
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("g", [make_path(5), make_cycle(5), make_complete_bipartite(2, 3)])
def test_color_traceable(g):
    assert_three(color_traceable(g), g)


def test_complete_graphs_get_one_color():
    outcome = color_traceable(make_complete(4))
    assert outcome.k == 1
    assert not outcome.repaired
    assert color_join_general(make_complete(2), make_complete(2)).k == 1


def test_color_traceable_needs_a_path():
    with pytest.raises(ColorerError):
        color_traceable(make_star(3))


@pytest.mark.parametrize("t", [make_star(3), make_spider([2, 1, 1]), make_path(6), make_spider([1, 1, 1, 1, 2])])
def test_color_tree_uses_max_degree_plus_one(t):
    outcome = color_tree(t)
    assert outcome.k == max(len(a) for a in t.adjacency) + 1
    assert outcome.construction == "tree"
    assert is_total_proper_connected(t, outcome.coloring).connected


def test_color_tree_preconditions():
    with pytest.raises(ColorerError):
        color_tree(make_cycle(4))
    with pytest.raises(ColorerError):
        color_tree(make_path(2))
    assert tree_coloring(make_star(3), 3) is None


@pytest.mark.parametrize("m, n", [(2, 2), (2, 3), (2, 5), (3, 3), (3, 5)])
def test_color_complete_bipartite(m, n):
    assert_three(color_complete_bipartite(m, n), make_complete_bipartite(m, n))


def test_color_complete_bipartite_preconditions():
    with pytest.raises(ColorerError):
        color_complete_bipartite(1, 3)
    with pytest.raises(ColorerError):
        color_complete_bipartite(3, 2)


def test_spanning_tree_bound():
    g = Graph.from_edges(6, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (3, 4)])
    outcome = color_spanning_tree(g)
    assert outcome.construction == "spanning-tree"
    assert outcome.k == 4
    assert is_total_proper_connected(g, outcome.coloring).connected
    tree = spanning_tree(g, strategy="min_max_degree").tree
    assert not outcome.repaired
    assert outcome.coloring.restricted_to(tree) == color_tree(tree).coloring


def test_color_by_search():
    g = make_cycle(6)
    outcome = color_by_search(g)
    assert outcome.construction == "search-k3"
    assert_three(outcome, g)


def test_search_coloring_edge_cases():
    assert search_coloring(make_path(3), 2) is None
    assert search_coloring(make_empty(2), 3) is None
    assert search_coloring(make_complete(3), 3).colors_used() == {1}


# ---------------------------------------------------------------------------
# Joins
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("g", non_complete(3, 4))
def test_join_with_k1_is_explicit(g):
    outcome = color_join_with_k1(g)
    assert_three(outcome, join(g, make_complete(1)).graph)
    assert not outcome.repaired
    assert outcome.coloring.vertex_colors[g.n] == 3


def test_join_with_k1_rejects_disconnected_input():
    with pytest.raises((ColorerError, ValueError)):
        color_join_with_k1(make_empty(3))


def test_join_with_k1_colors_on_p3():
    outcome = color_join_with_k1(make_path(3))
    assert not outcome.repaired
    c = outcome.coloring
    assert list(c.vertex_colors) == [1, 2, 1, 3]
    assert dict(c.edge_colors) == {(0, 1): 3, (1, 2): 3, (0, 3): 2, (1, 3): 1, (2, 3): 2}


@pytest.mark.parametrize(
    "g, h",
    [
        (make_path(2), make_path(3)),
        (make_path(3), make_path(2)),
        (make_path(3), make_path(3)),
        (make_complete(1), make_path(3)),
        (make_star(3), make_path(2)),
        (make_cycle(4), make_path(3)),
    ],
)
def test_join_general(g, h):
    assert_three(color_join_general(g, h), join(g, h).graph)


# ---------------------------------------------------------------------------
# Cartesian products
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("g, h", [(make_path(2), make_path(2)), (make_path(3), make_cycle(4)), (make_cycle(3), make_path(4))])
def test_cartesian_traceable(g, h):
    assert_three(color_cartesian_traceable(g, h), cartesian(g, h).graph)


@pytest.mark.parametrize("n, s", [(2, 3), (3, 3), (4, 4)])
def test_cartesian_star_is_explicit(n, s):
    outcome = color_cartesian_star(make_path(n), make_star(s))
    assert_three(outcome, cartesian(make_path(n), make_star(s)).graph)
    assert not outcome.repaired


@pytest.mark.parametrize("n", range(2, 8))
def test_cartesian_near_star(n):
    h = make_spider([2, 1, 1])
    outcome = color_cartesian_near_star(make_path(n), h)
    assert_three(outcome, cartesian(make_path(n), h).graph)
    assert not outcome.repaired


def test_cartesian_star_table_on_p2_k13():
    c = color_cartesian_star(make_path(2), make_star(3)).coloring

    def at(i, j):
        return (i - 1) * 4 + j

    assert [c.vertex_colors[at(1, j)] for j in range(4)] == [1, 3, 2, 2]
    assert [c.vertex_colors[at(2, j)] for j in range(4)] == [1, 2, 3, 3]
    assert [c.edge_color(at(1, j), at(2, j)) for j in range(4)] == [2, 1, 1, 1]
    assert [c.edge_color(at(1, 0), at(1, j)) for j in (1, 2, 3)] == [2, 3, 3]
    assert [c.edge_color(at(2, 0), at(2, j)) for j in (1, 2, 3)] == [3, 2, 2]


# spider [2, 1, 1]: center x = 0, y = 1, z = 2, leaves 3 and 4; layer i starts at 5 * (i - 1)
def test_cartesian_near_star_two_layers():
    c = color_cartesian_near_star(make_path(2), make_spider([2, 1, 1])).coloring
    assert (c.vertex_colors[0], c.vertex_colors[1], c.edge_color(0, 1)) == (3, 1, 2)
    assert [c.vertex_colors[v] for v in (3, 4, 5, 6, 8, 9)] == [2, 2, 3, 2, 1, 1]
    assert [c.edge_color(0, 3), c.edge_color(3, 8), c.edge_color(5, 8), c.edge_color(5, 6), c.edge_color(1, 6), c.edge_color(1, 2), c.edge_color(6, 7)] == [1, 3, 2, 1, 3, 3, 3]


def test_cartesian_near_star_three_layers_extend_two():
    outcome = color_cartesian_near_star(make_path(3), make_spider([2, 1, 1]))
    assert not outcome.repaired
    c = outcome.coloring
    assert list(c.vertex_colors) == [3, 1, 2, 2, 2, 3, 2, 3, 1, 1, 3, 2, 1, 3, 3]
    layers = [[c.edge_color(5 * i, 5 * i + 1), c.edge_color(5 * i + 1, 5 * i + 2), c.edge_color(5 * i, 5 * i + 3)] for i in range(3)]
    assert layers == [[2, 3, 1], [1, 3, 2], [1, 3, 2]]
    rungs = [[c.edge_color(hv + 5 * i, hv + 5 * i + 5) for hv in range(4)] for i in range(2)]
    assert rungs == [[1, 3, 1, 3], [1, 1, 2, 2]]

def test_cartesian_star_needs_traceable_g():
    with pytest.raises(ColorerError):
        color_cartesian_star(make_star(3), make_star(3))


# ---------------------------------------------------------------------------
# Permutation graphs
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("alpha", list(all_permutations(3)), ids=lambda a: "".join(map(str, a.image)))
def test_permutation_traceable(alpha):
    g = make_path(3)
    assert_three(color_permutation_traceable(g, alpha), permutation_graph(g, alpha).graph)


def test_permutation_traceable_on_a_cycle():
    g = make_cycle(5)
    alpha = Permutation((3, 0, 4, 1, 2))
    assert_three(color_permutation_traceable(g, alpha), permutation_graph(g, alpha).graph)


@pytest.mark.parametrize("m", [3, 4, 5])
def test_permutation_star(m):
    star = make_star(m)
    identity = color_permutation_star(m, "identity")
    assert_three(identity, permutation_graph(star, Permutation.identity(m + 1)).graph)
    swapped = color_permutation_star(m, "transposition01")
    assert_three(swapped, permutation_graph(star, Permutation.transposition(m + 1, 0, 1)).graph)
    assert not swapped.repaired


def test_permutation_star_preconditions():
    with pytest.raises(ColorerError):
        color_permutation_star(2, "identity")
    with pytest.raises(ColorerError):
        color_permutation_star(3, "rotation")


def test_permutation_star_transposition_classes():
    # v_i = i, v'_i = 4 + i
    c = color_permutation_star(3, "transposition01").coloring

    def cls(color):
        vs = {("v", v) for v, col in enumerate(c.vertex_colors) if col == color}
        return vs | {("e", e) for e, col in c.edge_colors.items() if col == color}

    assert cls(1) == {("v", 0), ("v", 4), ("e", (2, 6)), ("e", (3, 7))}
    assert cls(2) == {("v", 6), ("v", 1), ("v", 3), ("e", (0, 5)), ("e", (0, 2)), ("e", (4, 5)), ("e", (4, 7))}
    assert len(cls(3)) == len(c.vertex_colors) + len(c.edge_colors) - 11 == 7


# ---------------------------------------------------------------------------
# Lexicographic and strong products
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("g", [make_path(2), make_path(3), make_star(3), make_cycle(4), make_path(4)])
@pytest.mark.parametrize("h", [make_empty(2), make_empty(3), make_complete(2), make_path(3)], ids=["E2", "E3", "K2", "P3"])
def test_lexicographic(g, h):
    target = lexicographic(g, h).graph
    if is_complete(target):
        pytest.skip("complete product")
    outcome = color_lexicographic(g, h)
    assert_three(outcome, target)
    assert not outcome.repaired


@pytest.mark.parametrize(
    "g, h",
    [
        (make_path(2), make_path(3)),
        (make_path(3), make_path(3)),
        (make_star(3), make_path(3)),
        (make_path(3), make_complete(3)),
    ],
)
def test_strong(g, h):
    assert_three(color_strong(g, h), strong(g, h).graph)


# ---------------------------------------------------------------------------
# Theorem registry
# ---------------------------------------------------------------------------


def test_apply_theorem_with_product():
    product = cartesian(make_path(3), make_star(3))
    outcome = apply_theorem("cart-star", product.graph, product)
    assert outcome.construction == "cart-star"


def test_apply_theorem_perm_star_recognizes_the_swap():
    product = permutation_graph(make_star(3), Permutation.transposition(4, 0, 1))
    assert apply_theorem("perm-star", product.graph, product).construction == "perm-star"
    other = permutation_graph(make_star(3), Permutation((0, 2, 1, 3)))
    with pytest.raises(ColorerError):
        apply_theorem("perm-star", other.graph, other)


def test_apply_theorem_errors():
    g = make_path(4)
    with pytest.raises(ColorerError):
        apply_theorem("rainbow", g)
    with pytest.raises(ColorerError):
        apply_theorem("cart-star", g)
    product = join(make_path(3), make_complete(1))
    with pytest.raises(ColorerError):
        apply_theorem("lex", product.graph, product)


def test_every_plain_theorem_runs_on_a_plain_graph():
    g = make_spider([2, 2, 1])
    for name in ("tree", "search", "spanning-tree"):
        outcome = apply_theorem(name, g)
        assert outcome.graph == g
    assert set(THEOREMS) >= {"join", "cart-trace", "cart-star", "cart-near-star", "perm-trace", "perm-star", "lex", "strong"}


def test_apply_theorem_join_k1_and_complete_bipartite():
    product = join(make_cycle(4), make_complete(1))
    assert apply_theorem("join-k1", product.graph, product).coloring.k == 3
    wide = join(make_cycle(4), make_path(2))
    with pytest.raises(ColorerError):
        apply_theorem("join-k1", wide.graph, wide)
    outcome = apply_theorem("complete-bipartite", make_complete_bipartite(2, 3))
    assert outcome.construction == "complete-bipartite"
    with pytest.raises(ColorerError):
        apply_theorem("complete-bipartite", make_path(4))
