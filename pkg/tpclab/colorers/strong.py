#!/usr/bin/env python3
"""
Strong product colorer.

Vertex (u, v) gets potential depth_T(u) + depth_S(v) mod 3 for BFS trees T
of G and S of H rooted at their lowest vertices. An edge whose endpoints
differ in potential takes the remaining color, so every walk that keeps
stepping the potential the same way is total proper. The diagonal
(u, s)(p(u), s*), with s the root of S and s* its lowest neighbor, joins two
vertices of equal potential; it copies the color of (p(u), s).
"""

from __future__ import annotations

from tpclab.colorers.base import (
    ColorerOutcome,
    ColoringDraft,
    complete_outcome,
    finalize,
    require,
    third,
)
from tpclab.graph import Graph, is_complete, is_connected, spanning_tree
from tpclab.ops import strong


def color_strong(g: Graph, h: Graph) -> ColorerOutcome:
    require(is_connected(g) and is_connected(h), "color_strong needs connected factors")
    require(g.n >= 2 and h.n >= 2, "color_strong needs two nontrivial factors")
    product = strong(g, h)
    target = product.graph
    if is_complete(target):
        return complete_outcome(target)
    tree_g = spanning_tree(g, strategy="bfs", root=0)
    tree_h = spanning_tree(h, strategy="bfs", root=0)
    dg, dh = tree_g.depth, tree_h.depth
    s = tree_h.root
    s_star = min(tree_h.children[s])

    def at(u: int, v: int) -> int:
        return u * h.n + v

    draft = ColoringDraft(target)
    for u in range(g.n):
        for v in range(h.n):
            draft.set_vertex(at(u, v), (dg[u] + dh[v]) % 3 + 1)
    spanning_edges: list[tuple[int, int]] = []
    # T x S with its diagonals: every product edge whose projections are tree edges or equal
    for x, y in target.edge_list:
        (u1, v1), (u2, v2) = divmod(x, h.n), divmod(y, h.n)
        on_g = u1 == u2 or tree_g.tree.has_edge(u1, u2)
        on_h = v1 == v2 or tree_h.tree.has_edge(v1, v2)
        if not (on_g and on_h):
            continue
        spanning_edges.append((x, y))
        cx, cy = draft.get_vertex(x), draft.get_vertex(y)
        if cx != cy:
            draft.set_edge(x, y, third(cx, cy))
    for u, par in tree_g.parent.items():
        draft.set_edge(at(u, s), at(par, s_star), draft.get_vertex(at(par, s)))
    spanning = Graph.from_edges(target.n, spanning_edges)
    return finalize(target, draft, "strong", spanning=spanning)
