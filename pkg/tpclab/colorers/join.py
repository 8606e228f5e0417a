#!/usr/bin/env python3
"""
Join colorers.

G + K_1 is 3-colored from a BFS tree of G: vertex colors alternate 1/2 by
layer parity, the apex takes 3, apex edges take the color that differs from
the layer's vertices, and tree edges take 3. Joins of two nontrivial graphs
are colored through their spanning complete bipartite graph.
"""

from __future__ import annotations

from tpclab.colorers.base import (
    ColorerOutcome,
    ColoringDraft,
    complete_outcome,
    finalize,
    require,
)
from tpclab.colorers.basic import color_complete_bipartite
from tpclab.graph import Graph, bfs_layers, is_connected, make_complete, spanning_tree
from tpclab.ops import join


def color_join_with_k1(g: Graph) -> ColorerOutcome:
    require(is_connected(g), "color_join_with_k1: graph must be connected")
    product = join(g, make_complete(1))
    target = product.graph
    if g.n < 3 or target.num_edges == target.n * (target.n - 1) // 2:
        return complete_outcome(target)
    apex = g.n
    info = spanning_tree(g, strategy="bfs", root=0)
    level = bfs_layers(info.tree, 0).level
    draft = ColoringDraft(target)
    draft.set_vertex(apex, 3)
    spanning_edges = list(info.tree.edges)
    for v in range(g.n):
        odd = level[v] % 2 == 1
        draft.set_vertex(v, 2 if odd else 1)
        draft.set_edge(apex, v, 1 if odd else 2)
        spanning_edges.append((v, apex))
    for u, v in info.tree.edges:
        draft.set_edge(u, v, 3)
    spanning = Graph.from_edges(target.n, spanning_edges)
    return finalize(target, draft, "join-k1", spanning=spanning)


def color_join_general(g: Graph, h: Graph) -> ColorerOutcome:
    require(is_connected(g) and is_connected(h), "color_join_general: factors must be connected")
    product = join(g, h)
    target = product.graph
    if target.num_edges == target.n * (target.n - 1) // 2:
        return complete_outcome(target)
    if h.n == 1:
        return color_join_with_k1(g)
    if g.n == 1:
        swapped = color_join_with_k1(h)
        # join(h, K_1) puts h on [0, |h|) and the apex at |h|; here K_1 comes first
        mapping = [j + 1 for j in range(h.n)] + [0]
        return ColorerOutcome(
            coloring=swapped.coloring.transported(mapping),
            construction=swapped.construction,
            repaired=swapped.repaired,
            graph=target,
        )
    m, n = sorted((g.n, h.n))
    bipartite = color_complete_bipartite(m, n)
    if g.n <= h.n:
        mapping = list(range(g.n + h.n))
    else:
        # K_{|H|,|G|} has H on [0, |H|) and G after it
        mapping = [g.n + i for i in range(h.n)] + list(range(g.n))
    coloring = bipartite.coloring.transported(mapping)
    spanning = Graph.from_edges(target.n, coloring.edge_colors.keys())
    draft = ColoringDraft(target)
    draft.load(coloring)
    outcome = finalize(target, draft, "join-bipartite", spanning=spanning)
    if bipartite.repaired and not outcome.repaired:
        return ColorerOutcome(outcome.coloring, outcome.construction, True, target)
    return outcome
