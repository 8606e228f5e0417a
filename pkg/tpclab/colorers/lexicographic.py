#!/usr/bin/env python3
"""
Lexicographic product colorer.

Colors are potentials in Z_3 shown as 1..3. With T a spanning tree of G
rooted at a leaf r, copy h_1 gets potential depth mod 3 and copy h_2
(without r) gets -depth, so root paths in h_1 continue across the edge
(r,h_1)(t,h_2) into h_2. The other copies h_i reuse the colors of h_1 and
h_2 on their edges toward the parent. A handful of edges around r, t and
a second neighbor a of t connect the copies of r and of t among themselves.
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
from tpclab.colorers.basic import color_complete_bipartite
from tpclab.graph import Graph, is_complete, is_connected, make_empty, spanning_tree, tree_info
from tpclab.ops import lexicographic


def _potential(phi: int) -> int:
    return phi % 3 + 1


def color_lexicographic(g: Graph, h: Graph) -> ColorerOutcome:
    require(is_connected(g) and g.n >= 2, "color_lexicographic needs a connected nontrivial G")
    require(h.n >= 2, "color_lexicographic needs a nontrivial H")
    product = lexicographic(g, h)
    target = product.graph
    if is_complete(target):
        return complete_outcome(target)
    m = h.n

    def at(gv: int, i: int) -> int:
        return gv * m + (i - 1)

    if g.n == 2:
        base = color_complete_bipartite(m, m)
        draft = ColoringDraft(target)
        draft.load(base.coloring)
        spanning = Graph.from_edges(target.n, base.coloring.edge_colors.keys())
        return finalize(target, draft, "lex", spanning=spanning)

    bfs = spanning_tree(g, strategy="bfs", root=0)
    r = min(v for v in range(g.n) if bfs.tree.degree(v) == 1)
    info = tree_info(bfs.tree, r)
    t = info.children[r][0]
    a = min(c for c in info.children[t])
    depth = info.depth
    parent = info.parent
    draft = ColoringDraft(target)

    for gv in range(g.n):
        draft.set_vertex(at(gv, 1), _potential(depth[gv]))
        if gv != r:
            draft.set_vertex(at(gv, 2), _potential(-depth[gv]))
    for gv, par in parent.items():
        draft.set_edge(at(gv, 1), at(par, 1), third(draft.get_vertex(at(gv, 1)), draft.get_vertex(at(par, 1))))
        if par != r:
            draft.set_edge(at(gv, 2), at(par, 2), third(draft.get_vertex(at(gv, 2)), draft.get_vertex(at(par, 2))))
    beta = third(draft.get_vertex(at(r, 1)), draft.get_vertex(at(t, 2)))
    draft.set_edge(at(r, 1), at(t, 2), beta)

    for gv, par in parent.items():
        if gv == t:
            continue
        for i in range(1, m + 1):
            for via in (1, 2):
                if i != via:
                    draft.set_edge(at(gv, i), at(par, via), draft.get_edge(at(gv, via), at(par, via)))

    t_to_r = draft.get_edge(at(t, 1), at(r, 1))
    for i in range(2, m + 1):
        draft.set_edge(at(t, 1), at(r, i), t_to_r)
    for j in range(3, m + 1):
        draft.set_edge(at(r, 1), at(t, j), beta)
        draft.set_edge(at(t, 2), at(r, j), beta)
    t2 = draft.get_vertex(at(t, 2))
    for s in range(4, m + 1):
        draft.set_edge(at(r, 3), at(t, s), t2)
    draft.set_edge(at(r, 2), at(t, 2), draft.get_vertex(at(r, 1)))
    if m >= 3:
        for i in range(3, m + 1):
            draft.set_edge(at(a, 2), at(t, i), t2)
        hinge = draft.get_edge(at(a, 2), at(t, 2))
        draft.set_vertex(at(r, 3), hinge)
        draft.set_vertex(at(t, 3), hinge)
        for j in range(3, m + 1):
            draft.set_edge(at(t, 3), at(r, j), draft.get_vertex(at(a, 2)))

    # every rule above stays inside T∘E_m, which spans the product
    spanning = lexicographic(bfs.tree, make_empty(m)).graph
    return finalize(target, draft, "lex", spanning=spanning)
