#!/usr/bin/env python3
"""
Shared machinery for the constructive colorers.

- `ColoringDraft`: a partial total coloring that constructions write into
- `paint_trail`: periodic 1,2,3 coloring along a vertex sequence
- `fill`: deterministic completion of unassigned elements
- `finalize`: fill, verify on the spanning subgraph, repair if needed,
  extend to the target graph and wrap the result in a verified outcome
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

from tpclab import ledger
from tpclab.checker import CheckReport, first_failure, is_total_proper_connected
from tpclab.coloring import TotalColoring
from tpclab.graph import Graph
from tpclab.helpers import edge_key, log, smallest_missing
from tpclab.settings import get_settings


class ColorerError(ValueError):
    pass


def third(a: int, b: int) -> int:
    """The color of {1,2,3} missing from {a, b} (smallest one when a == b)."""
    return smallest_missing((a, b), 3)


@dataclass(frozen=True)
class ColorerOutcome:
    coloring: TotalColoring
    construction: str
    repaired: bool
    graph: Graph
    verified: bool = True
    report: CheckReport | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        self.coloring.validate(self.graph)
        if not self.verified:
            return
        if self.graph.n > get_settings().colorers.verify_max_vertices:
            log(f"{self.construction}: n={self.graph.n} above verification limit, returning unverified")
            object.__setattr__(self, "verified", False)
            return
        report = is_total_proper_connected(self.graph, self.coloring)
        if not report.connected:
            raise ColorerError(
                f"{self.construction}: coloring fails on {len(report.failures)} pairs, first {report.failures[0]}"
            )
        object.__setattr__(self, "report", report)

    @property
    def k(self) -> int:
        return self.coloring.k

    def to_json(self) -> dict[str, Any]:
        return {
            "construction": self.construction,
            "repaired": self.repaired,
            "verified": self.verified,
            "coloring": self.coloring.to_json(),
        }


class ColoringDraft:
    """Mutable partial coloring; 0 marks an unassigned element."""

    def __init__(self, g: Graph, k: int = 3) -> None:
        self.g = g
        self.k = k
        self.vertex = [0] * g.n
        self.edge: dict[tuple[int, int], int] = {}
        self.conflicts = 0

    def get_vertex(self, v: int) -> int:
        return self.vertex[v]

    def get_edge(self, u: int, v: int) -> int:
        return self.edge.get(edge_key(u, v), 0)

    def _require_edge(self, u: int, v: int) -> tuple[int, int]:
        key = edge_key(u, v)
        if key not in self.g.edges:
            raise ColorerError(f"({u}, {v}) is not an edge of the graph being colored")
        return key

    def set_vertex(self, v: int, color: int) -> None:
        self.vertex[v] = color

    def set_edge(self, u: int, v: int, color: int) -> None:
        self.edge[self._require_edge(u, v)] = color

    def _trail_elements(self, seq: Sequence[int], closed: bool) -> list[tuple[str, Any]]:
        out: list[tuple[str, Any]] = []
        for i, v in enumerate(seq):
            out.append(("v", v))
            if i + 1 < len(seq):
                out.append(("e", self._require_edge(v, seq[i + 1])))
        if closed:
            out.append(("e", self._require_edge(seq[-1], seq[0])))
        return out

    def _current(self, element: tuple[str, Any]) -> int:
        kind, item = element
        return self.vertex[item] if kind == "v" else self.edge.get(item, 0)

    def paint_trail(self, seq: Sequence[int], *, closed: bool = False, phase: int | None = None) -> int:
        """Color the trail's elements with the period 1,2,3 and return the conflicts met.

        The phase is the one of 0..2 with the fewest clashes against colors
        already present (lowest on ties). Existing colors are kept; a clash is
        counted instead. An open trail's two end vertices are only painted if
        still unassigned and never count as clashes.
        """
        items = self._trail_elements(seq, closed)
        free = set() if closed else {0, len(items) - 1}

        def clashes(p: int) -> int:
            planned: dict[tuple[str, Any], int] = {}
            count = 0
            for t, element in enumerate(items):
                if t in free:
                    continue
                want = (t + p) % 3 + 1
                have = planned.get(element) or self._current(element)
                if have and have != want:
                    count += 1
                planned.setdefault(element, want)
            return count

        if phase is None:
            phase = min(range(3), key=lambda p: (clashes(p), p))
        met = 0
        for t, element in enumerate(items):
            want = (t + phase) % 3 + 1
            have = self._current(element)
            if have:
                if have != want and t not in free:
                    met += 1
                continue
            kind, item = element
            if kind == "v":
                self.vertex[item] = want
            else:
                self.edge[item] = want
        self.conflicts += met
        return met

    def fill(self, graph: Graph | None = None) -> None:
        """Vertices take the smallest color absent from their colored edges,
        then edges take the smallest color differing from both endpoints."""
        graph = graph or self.g
        for v in range(graph.n):
            if self.vertex[v]:
                continue
            used = {self.edge[e] for e in (edge_key(v, w) for w in graph.adjacency[v]) if self.edge.get(e)}
            self.vertex[v] = smallest_missing(used, self.k)
        for u, v in graph.edge_list:
            if not self.edge.get((u, v)):
                self.edge[(u, v)] = smallest_missing((self.vertex[u], self.vertex[v]), self.k)

    def load(self, coloring: TotalColoring) -> None:
        self.vertex = list(coloring.vertex_colors)
        self.edge.update(coloring.edge_colors)

    def coloring(self, graph: Graph | None = None) -> TotalColoring:
        graph = graph or self.g
        missing = [e for e in graph.edge_list if not self.edge.get(e)]
        if missing or not all(self.vertex):
            raise ColorerError("Draft still has unassigned elements")
        return TotalColoring(
            k=self.k,
            vertex_colors=tuple(self.vertex),
            edge_colors={e: self.edge[e] for e in graph.edge_list},
        )


def complete_outcome(g: Graph, construction: str = "complete") -> ColorerOutcome:
    return ColorerOutcome(
        coloring=TotalColoring(k=1, vertex_colors=(1,) * g.n, edge_colors={e: 1 for e in g.edges}),
        construction=construction,
        repaired=False,
        graph=g,
    )


def finalize(
    target: Graph,
    draft: ColoringDraft,
    construction: str,
    *,
    spanning: Graph | None = None,
) -> ColorerOutcome:
    """Complete a draft and return the verified outcome.

    The draft is filled on `spanning` (the target itself when absent) and
    checked there; a failing check is handed to `search_coloring` seeded with
    the draft. The remaining target edges are then filled, which cannot
    break any path found in the spanning subgraph.
    """
    from tpclab.colorers.search import search_coloring

    sub = spanning or target
    draft.fill(sub)
    if draft.conflicts:
        log(f"{construction}: {draft.conflicts} trail conflicts on n={target.n}")
    repaired = False
    if sub.n <= get_settings().colorers.verify_max_vertices:
        partial = draft.coloring(sub)
        failure = first_failure(sub, partial)
        if failure is not None:
            log(f"{construction}: pair {failure} unconnected on n={sub.n}, repairing by search")
            fixed = search_coloring(sub, draft.k, seed=partial)
            ledger.record_repair(construction, target.to_json(), fixed is not None)
            if fixed is None:
                raise ColorerError(f"{construction}: repair search found no {draft.k}-coloring")
            draft.load(fixed)
            repaired = True
    draft.fill(target)
    return ColorerOutcome(
        coloring=draft.coloring(target),
        construction=construction,
        repaired=repaired,
        graph=target,
    )


def require(condition: bool, message: str) -> None:
    if not condition:
        raise ColorerError(message)