#!/usr/bin/env python3
"""
Permutation graph colorers.

In P_alpha(G) copy A holds v_i = i and copy B holds u_i = n + i; the cross
edge at i joins v_i and u_{alpha(i)}.
"""

from __future__ import annotations

from tpclab.colorers.base import (
    ColorerOutcome,
    ColoringDraft,
    finalize,
    require,
)
from tpclab.colorers.cartesian import color_cartesian_star
from tpclab.graph import Graph, find_hamiltonian_path, make_path, make_star
from tpclab.ops import Permutation, permutation_graph


def color_permutation_traceable(g: Graph, alpha: Permutation) -> ColorerOutcome:
    """3-coloring of P_alpha(G) for traceable G of order >= 2.

    With the path v_1..v_n of G, write j' for the path position of the B copy
    reached by the cross edge at v_j. If n' is an end of the path the graph
    has a Hamiltonian path. Otherwise, with i = n', the trails
    v_1..v_n u_i..u_1 and v_1..v_n u_i..u_n are colored periodically, the
    cross edge at v_1 continues v_1..v_n backwards, and every other cross
    edge at v_j copies the color of v_{j-1} v_j.
    """
    require(g.n >= 2, "color_permutation_traceable needs |G| >= 2")
    path = find_hamiltonian_path(g)
    require(path is not None, "color_permutation_traceable: G is not traceable")
    product = permutation_graph(g, alpha)
    target = product.graph
    n = g.n
    pos = {v: j for j, v in enumerate(path, start=1)}

    def vv(j: int) -> int:
        return path[j - 1]

    def uu(t: int) -> int:
        return n + path[t - 1]

    partner = {j: pos[alpha(vv(j))] for j in range(1, n + 1)}
    i = partner[n]
    draft = ColoringDraft(target)
    spine = [vv(j) for j in range(1, n + 1)]
    cross = [(vv(j), uu(partner[j])) for j in range(1, n + 1)]
    b_path = [(uu(t), uu(t + 1)) for t in range(1, n)]
    spanning = Graph.from_edges(target.n, list(zip(spine, spine[1:])) + b_path + cross)

    if i in (1, n):
        tail = range(1, n + 1) if i == 1 else range(n, 0, -1)
        draft.paint_trail(spine + [uu(t) for t in tail], phase=0)
        return finalize(target, draft, "perm-trace", spanning=spanning)

    draft.paint_trail(spine + [uu(t) for t in range(i, 0, -1)], phase=0)
    draft.paint_trail(spine + [uu(t) for t in range(i, n + 1)])
    draft.paint_trail([uu(partner[1])] + spine)
    for j in range(2, n):
        draft.set_edge(vv(j), uu(partner[j]), draft.get_edge(vv(j - 1), vv(j)))
    return finalize(target, draft, "perm-trace", spanning=spanning)


def _star_transposition(draft: ColoringDraft, m: int) -> None:
    n = m + 1

    def v(i: int) -> int:
        return i

    def vp(i: int) -> int:
        return n + i

    for x in range(n):
        draft.set_vertex(v(x), 3)
        draft.set_vertex(vp(x), 3)
    for u, w in draft.g.edge_list:
        draft.set_edge(u, w, 3)
    # color 1
    draft.set_vertex(v(0), 1)
    draft.set_vertex(vp(0), 1)
    for i in range(2, m + 1):
        draft.set_edge(v(i), vp(i), 1)
    # color 2
    draft.set_vertex(vp(2), 2)
    for i in range(1, m + 1):
        if i != 2:
            draft.set_vertex(v(i), 2)
            draft.set_edge(vp(0), vp(i), 2)
    draft.set_edge(v(0), vp(1), 2)
    draft.set_edge(v(0), v(2), 2)


def color_permutation_star(leaves: int, variant: str) -> ColorerOutcome:
    """P_alpha(K_{1,m}) with alpha the identity or the swap of the center and leaf 1."""
    require(leaves >= 3, "color_permutation_star needs at least 3 leaves")
    star = make_star(leaves)
    n = leaves + 1
    if variant == "identity":
        target = permutation_graph(star, Permutation.identity(n)).graph
        outcome = color_cartesian_star(make_path(2), star)
        require(outcome.graph == target, "color_permutation_star: identity layout mismatch")
        return outcome
    require(variant in ("transposition01", "transposition"), f"color_permutation_star: unknown variant {variant!r}")
    target = permutation_graph(star, Permutation.transposition(n, 0, 1)).graph
    draft = ColoringDraft(target)
    _star_transposition(draft, leaves)
    return finalize(target, draft, "perm-star")
