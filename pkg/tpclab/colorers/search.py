#!/usr/bin/env python3
"""
search_coloring: the fallback and repair engine.

Strategies, in order:
1. complete graph: everything colored 1
2. k < 3 on a non-complete graph: impossible (some path has an internal
   vertex, which needs three distinct colors with its two path edges)
3. trees: greedy assignment of the local constraints, exact for trees
4. a seed: deterministic local search starting from the seed
5. a Hamiltonian path colored periodically, then a low-degree spanning tree
6. exhaustive palette search when the element count is small
7. local search from a filled blank draft

Every returned coloring has passed the exact check.
"""

from __future__ import annotations

from collections import deque

from tpclab.checker import failing_pairs, first_failure
from tpclab.colorers.base import ColoringDraft
from tpclab.coloring import TotalColoring
from tpclab.graph import (
    Graph,
    HamiltonianBudgetExceeded,
    find_hamiltonian_path,
    is_complete,
    is_connected,
    is_tree,
    max_degree,
    spanning_tree,
    tree_info,
)
from tpclab.helpers import edge_key, log, smallest_missing
from tpclab.palette import PaletteSearch
from tpclab.settings import get_settings

# per-pair node budget used while scoring candidate moves
SCORE_PAIR_BUDGET = 20_000
TABU_TENURE = 7


def tree_coloring(t: Graph, k: int) -> TotalColoring | None:
    """Greedy coloring of a tree under its local constraints.

    On a tree the only path between two vertices is fixed, so total proper
    connectivity is exactly: edges at a vertex of degree >= 2 are distinct and
    differ from that vertex, and adjacent vertices of degree >= 2 differ.
    A vertex of degree d >= 2 therefore needs d + 1 colors around it.
    """
    if t.n <= 2:
        return TotalColoring(k=k, vertex_colors=(1,) * t.n, edge_colors={e: 1 for e in t.edges})
    top = max_degree(t)
    if k < top + 1:
        return None
    root = min(v for v in range(t.n) if t.degree(v) == top)
    info = tree_info(t, root)
    vertex = [0] * t.n
    edge: dict[tuple[int, int], int] = {}
    for layer in sorted(set(info.depth.values())):
        for x in sorted(v for v, d in info.depth.items() if d == layer):
            par = info.parent.get(x)
            pe = edge[edge_key(x, par)] if par is not None else 0
            pc = vertex[par] if par is not None and t.degree(par) >= 2 else 0
            vertex[x] = smallest_missing((pe, pc), k)
            used = {vertex[x], pe}
            for child in info.children[x]:
                color = smallest_missing(used, k)
                edge[edge_key(x, child)] = color
                used.add(color)
    return TotalColoring(k=k, vertex_colors=tuple(vertex), edge_colors=edge)


def hamiltonian_coloring(g: Graph, path: tuple[int, ...], k: int = 3) -> TotalColoring:
    draft = ColoringDraft(g, k)
    draft.paint_trail(path, phase=0)
    draft.fill()
    return draft.coloring()


def _passes(g: Graph, c: TotalColoring) -> bool:
    return first_failure(g, c) is None


def _neighbourhood_elements(g: Graph, pair: tuple[int, int]) -> list[tuple[str, object]]:
    near: set[int] = set()
    frontier = deque((v, 0) for v in pair)
    while frontier:
        v, d = frontier.popleft()
        if v in near:
            continue
        near.add(v)
        if d < 2:
            frontier.extend((w, d + 1) for w in g.adjacency[v])
    out: list[tuple[str, object]] = [("v", v) for v in sorted(near)]
    out.extend(("e", e) for e in g.edge_list if e[0] in near or e[1] in near)
    return out


def local_search(g: Graph, k: int, start: TotalColoring, budget: int) -> TotalColoring | None:
    """First-improvement local search with tabu sideways moves.

    Moves recolor one element near the first unconnected pair; the score is
    the number of pairs without a path found under a small per-pair budget.
    """
    vertex = list(start.vertex_colors)
    edge = dict(start.edge_colors)

    def current() -> TotalColoring:
        return TotalColoring(k=k, vertex_colors=tuple(vertex), edge_colors=dict(edge))

    failures = failing_pairs(g, current(), budget=SCORE_PAIR_BUDGET)
    evaluations = 0
    tabu: deque[tuple[str, object]] = deque(maxlen=TABU_TENURE)
    while evaluations < budget:
        if not failures:
            candidate = current()
            return candidate if _passes(g, candidate) else None
        improvement = None
        sideways = None
        for element in _neighbourhood_elements(g, failures[0]):
            kind, item = element
            old = vertex[item] if kind == "v" else edge[item]
            for color in range(1, k + 1):
                if color == old:
                    continue
                if kind == "v":
                    vertex[item] = color
                else:
                    edge[item] = color
                evaluations += 1
                trial = failing_pairs(g, current(), budget=SCORE_PAIR_BUDGET)
                if kind == "v":
                    vertex[item] = old
                else:
                    edge[item] = old
                if len(trial) < len(failures):
                    improvement = (element, color, trial)
                    break
                if sideways is None and len(trial) == len(failures) and element not in tabu:
                    sideways = (element, color, trial)
                if evaluations >= budget:
                    break
            if improvement is not None or evaluations >= budget:
                break
        move = improvement or sideways
        if move is None:
            return None
        (kind, item), color, failures = move
        if kind == "v":
            vertex[item] = color
        else:
            edge[item] = color
        if improvement is None:
            tabu.append((kind, item))
    return None


def _tree_extension(g: Graph, k: int) -> TotalColoring | None:
    info = spanning_tree(g, strategy="min_max_degree")
    base = tree_coloring(info.tree, k)
    if base is None:
        return None
    draft = ColoringDraft(g, k)
    draft.load(base)
    draft.fill()
    return draft.coloring()


def search_coloring(
    g: Graph,
    k: int,
    seed: TotalColoring | None = None,
    budget: int | None = None,
) -> TotalColoring | None:
    """A verified k-coloring of g, or None when none was found within budget."""
    settings = get_settings().search
    budget = budget if budget is not None else settings.local_budget
    if not is_connected(g) or k < 1:
        return None
    if is_complete(g):
        return TotalColoring(k=k, vertex_colors=(1,) * g.n, edge_colors={e: 1 for e in g.edges})
    if k < 3:
        return None
    if is_tree(g):
        return tree_coloring(g, k)

    if seed is not None:
        seed_draft = ColoringDraft(g, k)
        seed_draft.load(seed.with_palette(k))
        seed_draft.fill()
        found = local_search(g, k, seed_draft.coloring(), budget)
        if found is not None:
            return found
        log(f"search_coloring: seeded local search gave up on n={g.n}, k={k}")

    try:
        path = find_hamiltonian_path(g)
    except HamiltonianBudgetExceeded:
        path = None
    if path is not None:
        candidate = hamiltonian_coloring(g, path, k)
        if _passes(g, candidate):
            return candidate

    candidate = _tree_extension(g, k)
    if candidate is not None and _passes(g, candidate):
        return candidate

    if g.n + g.num_edges <= settings.exhaustive_cap:
        result = PaletteSearch(g, k, exact=False).run()
        return result.witness

    blank = ColoringDraft(g, k)
    blank.fill()
    return local_search(g, k, blank.coloring(), budget)
