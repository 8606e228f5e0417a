#!/usr/bin/env python3
"""
Colorers for traceable graphs, trees, complete bipartite graphs, and the
spanning-tree upper bound.
"""

from __future__ import annotations

from tpclab.colorers.base import (
    ColorerOutcome,
    ColoringDraft,
    complete_outcome,
    finalize,
    require,
)
from tpclab.colorers.search import search_coloring
from tpclab.graph import (
    Graph,
    find_hamiltonian_path,
    is_complete,
    is_connected,
    is_tree,
    make_complete_bipartite,
    max_degree,
    spanning_tree,
)


def color_traceable(g: Graph) -> ColorerOutcome:
    """Color the elements along a Hamiltonian path with the repeating sequence 1,2,3."""
    if is_complete(g):
        return complete_outcome(g)
    path = find_hamiltonian_path(g)
    require(path is not None, "color_traceable: graph has no Hamiltonian path")
    draft = ColoringDraft(g)
    draft.paint_trail(path, phase=0)
    return finalize(g, draft, "traceable")


def color_tree(t: Graph) -> ColorerOutcome:
    require(is_tree(t), "color_tree: input is not a tree")
    require(t.n >= 3, "color_tree: tree needs at least 3 vertices")
    k = max_degree(t) + 1
    coloring = search_coloring(t, k)
    require(coloring is not None, f"color_tree: no {k}-coloring found")
    return ColorerOutcome(coloring=coloring, construction="tree", repaired=False, graph=t)


def bipartite_pattern(m: int, n: int) -> ColoringDraft:
    """Explicit 3-coloring draft of K_{m,n}, 2 <= m <= n.

    With n <= m+1 the graph is traceable and a Hamiltonian path carries the
    periodic coloring. Otherwise the path b_0 a_0 b_1 ... a_{m-1} b_m is
    colored periodically and each further b joins it: its edge to a_0 copies
    the color of b_0 a_0, its edge to any other a_i copies a_i b_{i+1}.
    """
    g = make_complete_bipartite(m, n)
    draft = ColoringDraft(g)
    a = list(range(m))
    b = list(range(m, m + n))
    if n == m:
        path = [x for pair in zip(a, b) for x in pair]
        draft.paint_trail(path, phase=0)
        return draft
    path = [b[0]]
    for i in range(m):
        path += [a[i], b[i + 1]]
    draft.paint_trail(path, phase=0)
    for extra in b[m + 1:]:
        draft.set_edge(extra, a[0], draft.get_edge(b[0], a[0]))
        for i in range(1, m):
            draft.set_edge(extra, a[i], draft.get_edge(a[i], b[i + 1]))
    return draft


def color_complete_bipartite(m: int, n: int) -> ColorerOutcome:
    require(m >= 2, f"color_complete_bipartite needs m >= 2, got {m}")
    require(m <= n, f"color_complete_bipartite needs m <= n, got m={m}, n={n}")
    draft = bipartite_pattern(m, n)
    g = draft.g
    draft.fill()
    seed = draft.coloring()
    coloring = search_coloring(g, 3, seed=seed)
    require(coloring is not None, f"color_complete_bipartite: no 3-coloring of K_{m},{n} found")
    return ColorerOutcome(
        coloring=coloring,
        construction="complete-bipartite",
        repaired=coloring != seed,
        graph=g,
    )


def color_spanning_tree(g: Graph) -> ColorerOutcome:
    """Color a low-degree spanning tree T with Delta(T)+1 colors, then extend."""
    require(is_connected(g), "color_spanning_tree: graph must be connected")
    if is_complete(g):
        return complete_outcome(g)
    info = spanning_tree(g, strategy="min_max_degree")
    base = color_tree(info.tree)
    draft = ColoringDraft(g, base.k)
    draft.load(base.coloring)
    return finalize(g, draft, "spanning-tree", spanning=info.tree)


def color_by_search(g: Graph, k_max: int | None = None) -> ColorerOutcome:
    """Smallest palette, from 3 up, for which search_coloring succeeds."""
    require(is_connected(g), "color_by_search: graph must be connected")
    if is_complete(g):
        return complete_outcome(g)
    top = k_max if k_max is not None else max_degree(spanning_tree(g, strategy="min_max_degree").tree) + 1
    for k in range(3, max(3, top) + 1):
        coloring = search_coloring(g, k)
        if coloring is not None:
            return ColorerOutcome(coloring=coloring, construction=f"search-k{k}", repaired=False, graph=g)
    return color_spanning_tree(g)
