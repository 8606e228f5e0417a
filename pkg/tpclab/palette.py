#!/usr/bin/env python3
"""
Exhaustive palette search.

Walks every assignment of colors in [1..k] to the colorable elements of a
graph (vertices first, then edges) and returns the first one whose colored
graph passes the connectivity check of the requested flavor.

Two reductions keep this usable at desk scale, and each can be switched off
for cross-checks:
- symmetry: restricted-growth strings, one representative per color renaming
- pruning: after each assignment the partial coloring is checked with every
  unassigned element unconstrained; a failure there rules out the subtree

The enumeration can be split into independent prefix blocks. Blocks are
merged in canonical order, so the result and the count of colorings tried
match a sequential run exactly.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from tpclab.checker import ColorView, PathFlavor, view_passes
from tpclab.coloring import TotalColoring, canonical_assignments, elements
from tpclab.graph import Graph


@dataclass(frozen=True)
class SearchResult:
    witness: TotalColoring | None
    colorings_tried: int


class PaletteSearch:
    def __init__(
        self,
        g: Graph,
        k: int,
        flavor: PathFlavor = PathFlavor.TOTAL,
        *,
        exact: bool = True,
        symmetry: bool = True,
        prune: bool = True,
        pair_budget: int | None = None,
    ) -> None:
        self.g = g
        self.k = k
        self.flavor = flavor
        self.exact = exact
        self.symmetry = symmetry
        self.prune = prune
        self.pair_budget = pair_budget
        self.order = elements(g, vertices=flavor.uses_vertices, edges=flavor.uses_edges)
        self.count = len(self.order)

    def _view(self, values: list[int]) -> ColorView:
        vertex = [0] * self.g.n
        edge: dict[tuple[int, int], int] = {}
        for (kind, item), color in zip(self.order, values):
            if kind == "v":
                vertex[item] = color
            else:
                edge[item] = color
        return ColorView.partial(self.g, vertex, edge)

    def _passes(self, values: list[int]) -> bool:
        return view_passes(self.g, self._view(values), budget=self.pair_budget)

    def _coloring(self, values: list[int]) -> TotalColoring:
        return TotalColoring.from_assignment(
            self.g,
            self.k,
            values,
            vertices=self.flavor.uses_vertices,
            edges=self.flavor.uses_edges,
        )

    def prefixes(self, depth: int) -> list[tuple[int, ...]]:
        depth = min(depth, self.count)
        if self.symmetry:
            return list(canonical_assignments(depth, self.k, exact=False))
        return list(itertools.product(range(1, self.k + 1), repeat=depth))

    def run(self, prefix: tuple[int, ...] = ()) -> SearchResult:
        values = list(prefix)
        tried = 0
        if self.symmetry and values and values[0] != 1:
            return SearchResult(None, 0)
        if self.prune and values and not self._passes(values):
            return SearchResult(None, 0)

        def rec(top: int) -> list[int] | None:
            nonlocal tried
            i = len(values)
            if self.exact and self.symmetry and top + (self.count - i) < self.k:
                return None
            if i == self.count:
                if self.exact and len(set(values)) != self.k:
                    return None
                tried += 1
                return list(values) if self._passes(values) else None
            limit = min(top + 1, self.k) if self.symmetry else self.k
            for color in range(1, limit + 1):
                values.append(color)
                if not self.prune or len(values) == self.count or self._passes(values):
                    found = rec(max(top, color))
                    if found is not None:
                        return found
                values.pop()
            return None

        found = rec(max(values, default=0))
        return SearchResult(self._coloring(found) if found is not None else None, tried)


def _run_block(args: tuple[PaletteSearch, tuple[int, ...]]) -> SearchResult:
    search, prefix = args
    return search.run(prefix)


def first_passing(search: PaletteSearch, *, workers: int = 1, depth: int = 4) -> SearchResult:
    """First passing coloring in canonical order, optionally over a process pool."""
    if search.count == 0:
        return SearchResult(None, 0)
    if workers <= 1:
        return search.run()
    blocks = [(search, p) for p in search.prefixes(depth)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_run_block, blocks))
    tried = 0
    for result in results:
        tried += result.colorings_tried
        if result.witness is not None:
            return SearchResult(result.witness, tried)
    return SearchResult(None, tried)
