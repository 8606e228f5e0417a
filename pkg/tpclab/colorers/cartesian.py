#!/usr/bin/env python3
"""
Cartesian product colorers.

All three constructions use three colors and work on a spanning subgraph:
- traceable factors: a boustrophedon Hamiltonian path of P_n x P_m
- a traceable G with a dominating-vertex H: the explicit pattern on
  P_n x K_{1,s}
- a traceable G with Delta(H) = |H|-2: the explicit two-layer pattern, then
  one trail per leaf column down the z column and back up the leaf column,
  with each further layer x-y-z painted in phase with the z column
"""

from __future__ import annotations

from typing import Callable

from tpclab.colorers.base import (
    ColorerOutcome,
    ColoringDraft,
    finalize,
    require,
)
from tpclab.colorers.basic import color_traceable
from tpclab.graph import Graph, find_hamiltonian_path, is_connected, max_degree
from tpclab.ops import cartesian


def _hampath(g: Graph, what: str) -> tuple[int, ...]:
    path = find_hamiltonian_path(g)
    require(path is not None, f"{what} is not traceable")
    return path


def _flat(h: Graph, gv: int, hv: int) -> int:
    return gv * h.n + hv


def color_cartesian_traceable(g: Graph, h: Graph) -> ColorerOutcome:
    require(g.n >= 2 and h.n >= 2, "color_cartesian_traceable needs two nontrivial factors")
    pg = _hampath(g, "color_cartesian_traceable: G")
    ph = _hampath(h, "color_cartesian_traceable: H")
    target = cartesian(g, h).graph
    path: list[int] = []
    for i, gv in enumerate(pg):
        row = ph if i % 2 == 0 else tuple(reversed(ph))
        path.extend(_flat(h, gv, hv) for hv in row)
    draft = ColoringDraft(target)
    draft.paint_trail(path, phase=0)
    spanning = Graph.from_edges(target.n, zip(path, path[1:]))
    return finalize(target, draft, "cart-trace", spanning=spanning)


def color_cartesian_star(g: Graph, h: Graph) -> ColorerOutcome:
    """G traceable, H with a vertex adjacent to all others."""
    require(g.n >= 2, "color_cartesian_star needs |G| >= 2")
    require(is_connected(h) and max_degree(h) == h.n - 1, "color_cartesian_star needs Delta(H) = |H|-1")
    if h.n == 1:
        return color_traceable(cartesian(g, h).graph)
    if h.n < 4:
        return color_cartesian_traceable(g, h)
    pg = _hampath(g, "color_cartesian_star: G")
    target = cartesian(g, h).graph
    s = h.n - 1
    hub = min(v for v in range(h.n) if h.degree(v) == s)
    leaves = [v for v in range(h.n) if v != hub]
    draft = ColoringDraft(target)
    spanning_edges: list[tuple[int, int]] = []
    for i, gv in enumerate(pg, start=1):
        odd = i % 2 == 1
        draft.set_vertex(_flat(h, gv, hub), 1)
        for j, hv in enumerate(leaves, start=1):
            vertex_two = (odd and j >= 2) or (not odd and j == 1)
            draft.set_vertex(_flat(h, gv, hv), 2 if vertex_two else 3)
            spoke_two = (odd and j == 1) or (not odd and j >= 2)
            draft.set_edge(_flat(h, gv, hub), _flat(h, gv, hv), 2 if spoke_two else 3)
            spanning_edges.append((_flat(h, gv, hub), _flat(h, gv, hv)))
    for gv, gw in zip(pg, pg[1:]):
        for j, hv in enumerate([hub] + leaves):
            draft.set_edge(_flat(h, gv, hv), _flat(h, gw, hv), 2 if j == 0 else 1)
            spanning_edges.append((_flat(h, gv, hv), _flat(h, gw, hv)))
    spanning = Graph.from_edges(target.n, spanning_edges)
    return finalize(target, draft, "cart-star", spanning=spanning)


def _near_star_roles(h: Graph) -> tuple[int, int, int, list[int]]:
    """Center x, the vertex z it misses, the neighbor y of both, and the other leaves."""
    x = min(v for v in range(h.n) if h.degree(v) == h.n - 2)
    z = next(v for v in range(h.n) if v != x and not h.has_edge(x, v))
    y = min(v for v in h.neighbors(x) if h.has_edge(v, z))
    rest = [v for v in range(h.n) if v not in (x, y, z)]
    return x, y, z, rest


def _near_star_pair(draft: ColoringDraft, col: Callable[[int, int], int], x: int, y: int, z: int, rest: list[int]) -> None:
    # two layers; every other leaf w of the star repeats the same pattern
    for w in rest:
        draft.set_vertex(col(1, y), 1)
        draft.set_edge(col(1, x), col(1, w), 1)
        draft.set_vertex(col(2, w), 1)
        draft.set_edge(col(2, x), col(2, y), 1)
        draft.set_edge(col(1, x), col(1, y), 2)
        draft.set_vertex(col(1, w), 2)
        draft.set_edge(col(2, x), col(2, w), 2)
        draft.set_vertex(col(2, y), 2)
        draft.set_vertex(col(1, x), 3)
        draft.set_edge(col(1, w), col(2, w), 3)
        draft.set_vertex(col(2, x), 3)
        draft.set_edge(col(1, y), col(2, y), 3)
        draft.set_edge(col(1, z), col(1, y), 3)
        draft.set_edge(col(2, z), col(2, y), 3)


def _near_star_spine(draft: ColoringDraft, col: Callable[[int, int], int], n: int, x: int, y: int, z: int, rest: list[int]) -> None:
    """(n,x) (n,y), down the z column, (1,y) (1,x), then up each leaf column.

    The phase puts color 1 on (1,y), as in the two-layer pattern.
    """
    for w in rest:
        trail = [col(n, x), col(n, y)] + [col(i, z) for i in range(n, 0, -1)]
        trail += [col(1, y), col(1, x)] + [col(i, w) for i in range(1, n + 1)]
        draft.paint_trail(trail, phase=(n + 2) % 3)


def _near_star_layer(draft: ColoringDraft, col: Callable[[int, int], int], i: int, x: int, y: int, z: int, rest: list[int]) -> None:
    # (i,w) (i,x) (i,y) (i,z) (i-1,z): the phase follows the z column
    for w in rest:
        draft.paint_trail([col(i, w), col(i, x), col(i, y), col(i, z), col(i - 1, z)])


def color_cartesian_near_star(g: Graph, h: Graph) -> ColorerOutcome:
    """G traceable, connected H with Delta(H) = |H|-2."""
    require(g.n >= 2, "color_cartesian_near_star needs |G| >= 2")
    require(
        is_connected(h) and h.n >= 4 and max_degree(h) == h.n - 2,
        "color_cartesian_near_star needs a connected H with Delta(H) = |H|-2",
    )
    if h.n == 4:
        return color_cartesian_traceable(g, h)
    pg = _hampath(g, "color_cartesian_near_star: G")
    target = cartesian(g, h).graph
    x, y, z, rest = _near_star_roles(h)
    n = g.n

    def col(i: int, hv: int) -> int:
        return _flat(h, pg[i - 1], hv)

    spanning_edges = []
    for i in range(1, n + 1):
        spanning_edges += [(col(i, x), col(i, y)), (col(i, y), col(i, z))]
        spanning_edges += [(col(i, x), col(i, w)) for w in rest]
        if i < n:
            spanning_edges += [(col(i, hv), col(i + 1, hv)) for hv in range(h.n)]
    spanning = Graph.from_edges(target.n, spanning_edges)
    draft = ColoringDraft(target)

    if n == 2:
        _near_star_pair(draft, col, x, y, z, rest)
        return finalize(target, draft, "cart-near-star", spanning=spanning)

    if n == 3:
        # the two-layer pattern stays; layer 3 closes the trail through both columns
        _near_star_pair(draft, col, x, y, z, rest)
        _near_star_spine(draft, col, n, x, y, z, rest)
        _near_star_layer(draft, col, 3, x, y, z, rest)
        return finalize(target, draft, "cart-near-star", spanning=spanning)

    _near_star_spine(draft, col, n, x, y, z, rest)
    for i in range(2, n + 1):
        _near_star_layer(draft, col, i, x, y, z, rest)
    if n % 3 == 0:
        # layer n reaches (n-1,x) and (n-1,y) by ending on these two rungs
        draft.set_edge(col(n - 1, x), col(n - 2, x), draft.get_edge(col(n - 2, x), col(n - 2, y)))
        draft.set_edge(col(n - 1, y), col(n - 2, y), draft.get_edge(col(n - 2, y), col(n - 2, z)))
    return finalize(target, draft, "cart-near-star", spanning=spanning)
