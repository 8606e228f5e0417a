#!/usr/bin/env python3
"""
Total-proper connectivity checker.

Path predicates for the three flavors:
- total:  adjacent edges differ, internal adjacent vertices differ, and each
          internal vertex differs from its two path edges
- edge:   adjacent edges differ
- vertex: internal adjacent vertices differ

All three reduce to one transition rule over colors where an unused part of
the coloring is read as 0, and 0 never conflicts with anything. Partial
colorings (0 = not yet assigned) go through the same rule, which makes a
failed check on a partial coloring a proof that no completion can pass.

Pair search is exact: a polynomial walk pre-pass rejects pairs with no total
proper walk, then an iterative-deepening DFS over simple paths (ascending
neighbours) finds a shortest witness or exhausts the pair.
"""

from __future__ import annotations

from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import StrEnum
from typing import Any, Iterable, Mapping, Sequence

import networkx as nx

from tpclab.coloring import TotalColoring
from tpclab.graph import Graph, is_connected
from tpclab.helpers import BudgetExhausted, edge_key, edge_token
from tpclab.settings import get_settings


class CheckerError(ValueError):
    pass


class CheckBudgetExceeded(BudgetExhausted):
    pass


class PathFlavor(StrEnum):
    TOTAL = "total"
    EDGE = "edge"
    VERTEX = "vertex"

    @classmethod
    def parse(cls, value: str | PathFlavor) -> PathFlavor:
        aliases = {"total_proper": "total", "edge_proper": "edge", "vertex_proper": "vertex", "pc": "edge", "pvc": "vertex", "tpc": "total"}
        raw = str(value).strip().lower()
        try:
            return cls(aliases.get(raw, raw))
        except ValueError as exc:
            raise CheckerError(f"Unknown path flavor: {value!r}") from exc

    @property
    def uses_vertices(self) -> bool:
        return self is not PathFlavor.EDGE

    @property
    def uses_edges(self) -> bool:
        return self is not PathFlavor.VERTEX


@dataclass(frozen=True)
class ColorView:
    """Flat color arrays read by the search; 0 means unconstrained."""

    vertex: tuple[int, ...]
    edge: Mapping[tuple[int, int], int]

    @classmethod
    def of(cls, g: Graph, c: TotalColoring, flavor: PathFlavor) -> ColorView:
        if flavor.uses_vertices:
            if len(c.vertex_colors) != g.n:
                raise CheckerError(f"{flavor} check needs a color on each of the {g.n} vertices")
            vertex = c.vertex_colors
        else:
            vertex = (0,) * g.n
        if flavor.uses_edges:
            missing = g.edges - c.edge_colors.keys()
            if missing:
                raise CheckerError(f"{flavor} check needs every edge colored; missing {sorted(missing)[:3]}")
            edge = {e: c.edge_colors[e] for e in g.edges}
        else:
            edge = {e: 0 for e in g.edges}
        return cls(vertex=tuple(vertex), edge=edge)

    @classmethod
    def partial(cls, g: Graph, vertex: Sequence[int], edge: Mapping[tuple[int, int], int]) -> ColorView:
        return cls(vertex=tuple(vertex), edge={e: edge.get(e, 0) for e in g.edges})

    def ec(self, u: int, v: int) -> int:
        return self.edge[edge_key(u, v)]


def _differ(a: int, b: int) -> bool:
    return a == 0 or b == 0 or a != b


def _may_continue(cx: int, pe: int, pv: int, ce: int) -> bool:
    """Can a path that entered x by an edge colored `pe` leave by one colored `ce`?

    `pv` is the color of the vertex before x when that vertex is internal, 0 otherwise.
    """
    return _differ(ce, pe) and _differ(cx, pe) and _differ(cx, ce) and _differ(cx, pv)


def _path_ok(view: ColorView, path: Sequence[int]) -> bool:
    pe = pv = 0
    for i in range(1, len(path) - 1):
        x = path[i]
        cin = view.ec(path[i - 1], x)
        cout = view.ec(x, path[i + 1])
        pe = cin
        if not _may_continue(view.vertex[x], pe, pv, cout):
            return False
        pv = view.vertex[x]
    return True


def _require_path(g: Graph, path: Sequence[int]) -> None:
    if len(path) < 2:
        raise CheckerError("A path needs at least two vertices")
    if len(set(path)) != len(path):
        raise CheckerError(f"Path repeats a vertex: {list(path)}")
    for v in path:
        if not 0 <= v < g.n:
            raise CheckerError(f"Path vertex {v} outside [0, {g.n})")
    for a, b in zip(path, path[1:]):
        if not g.has_edge(a, b):
            raise CheckerError(f"Consecutive path vertices {a},{b} are not adjacent")


def is_proper_path(g: Graph, c: TotalColoring, path: Sequence[int], flavor: PathFlavor = PathFlavor.TOTAL) -> bool:
    _require_path(g, path)
    return _path_ok(ColorView.of(g, c, PathFlavor.parse(flavor)), path)


def is_total_proper_path(g: Graph, c: TotalColoring, path: Sequence[int]) -> bool:
    return is_proper_path(g, c, path, PathFlavor.TOTAL)


def _walk_feasible(g: Graph, view: ColorView, u: int, v: int) -> bool:
    if g.has_edge(u, v):
        return True
    # state: (vertex, entering edge color, previous internal vertex color)
    seen: set[tuple[int, int, int]] = set()
    queue: deque[tuple[int, int, int]] = deque()
    for y in g.adjacency[u]:
        state = (y, view.ec(u, y), 0)
        if state not in seen:
            seen.add(state)
            queue.append(state)
    while queue:
        x, pe, pv = queue.popleft()
        if x == v:
            return True
        cx = view.vertex[x]
        for y in g.adjacency[x]:
            ce = view.ec(x, y)
            if not _may_continue(cx, pe, pv, ce):
                continue
            state = (y, ce, cx)
            if state not in seen:
                seen.add(state)
                queue.append(state)
    return False


def walk_feasibility(g: Graph, c: TotalColoring, u: int, v: int, flavor: PathFlavor = PathFlavor.TOTAL) -> bool:
    """True if a proper walk joins u and v. False proves no proper path exists."""
    return _walk_feasible(g, ColorView.of(g, c, PathFlavor.parse(flavor)), u, v)


class _PairSearch:
    def __init__(self, g: Graph, view: ColorView, target: int, budget: int) -> None:
        self.g = g
        self.view = view
        self.target = target
        self.budget = budget
        self.explored = 0
        self.dist = nx.single_source_shortest_path_length(g.to_networkx(), target)

    def run(self, source: int, max_len: int) -> tuple[int, ...] | None:
        visited = [False] * self.g.n
        visited[source] = True
        path = [source]
        found = self._extend(source, 0, 0, visited, path, max_len, first=True)
        return tuple(found) if found else None

    def _extend(self, x: int, pe: int, pv: int, visited: list[bool], path: list[int], max_len: int, first: bool) -> list[int] | None:
        self.explored += 1
        if self.explored > self.budget:
            raise CheckBudgetExceeded(
                f"Pair search from {path[0]} to {self.target} exceeded {self.budget} nodes"
            )
        cx = self.view.vertex[x]
        steps = len(path) - 1
        for y in self.g.adjacency[x]:
            if visited[y]:
                continue
            if steps + 1 + self.dist.get(y, self.g.n) > max_len:
                continue
            ce = self.view.ec(x, y)
            if not first and not _may_continue(cx, pe, pv, ce):
                continue
            if y == self.target:
                path.append(y)
                return path
            visited[y] = True
            path.append(y)
            found = self._extend(y, ce, 0 if first else cx, visited, path, max_len, first=False)
            if found:
                return found
            path.pop()
            visited[y] = False
        return None


def _search_pair(g: Graph, view: ColorView, u: int, v: int, budget: int, shortest: bool) -> tuple[tuple[int, ...] | None, int]:
    if g.has_edge(u, v):
        return (u, v), 1
    if not _walk_feasible(g, view, u, v):
        return None, 0
    search = _PairSearch(g, view, v, budget)
    if u not in search.dist:
        return None, 0
    lengths = range(search.dist[u], g.n) if shortest else [g.n - 1]
    for max_len in lengths:
        found = search.run(u, max_len)
        if found:
            return found, search.explored
    return None, search.explored


def exists_path(
    g: Graph,
    c: TotalColoring,
    u: int,
    v: int,
    flavor: PathFlavor = PathFlavor.TOTAL,
    *,
    budget: int | None = None,
) -> tuple[int, ...] | None:
    """Shortest proper u-v path of the given flavor, or None if there is none.

    Raises CheckBudgetExceeded when the pair needs more than `budget` DFS nodes.
    """
    if u == v:
        raise CheckerError("exists_path needs two distinct vertices")
    for x in (u, v):
        if not 0 <= x < g.n:
            raise CheckerError(f"Vertex {x} outside [0, {g.n})")
    budget = budget if budget is not None else get_settings().checker.pair_budget
    view = ColorView.of(g, c, PathFlavor.parse(flavor))
    found, _ = _search_pair(g, view, u, v, budget, shortest=True)
    return found


def exists_path_naive(
    g: Graph,
    c: TotalColoring,
    u: int,
    v: int,
    flavor: PathFlavor = PathFlavor.TOTAL,
) -> tuple[int, ...] | None:
    """Reference search: scan every simple path between u and v."""
    view = ColorView.of(g, c, PathFlavor.parse(flavor))
    for path in nx.all_simple_paths(g.to_networkx(), u, v):
        if _path_ok(view, path):
            return tuple(path)
    return None


@dataclass(frozen=True)
class CheckReport:
    connected: bool
    flavor: PathFlavor
    witnesses: Mapping[tuple[int, int], tuple[int, ...]] = field(default_factory=dict)
    failures: tuple[tuple[int, int], ...] = ()
    nodes_explored: int = 0

    def to_json(self) -> dict[str, Any]:
        return {
            "connected": self.connected,
            "flavor": str(self.flavor),
            "failures": [list(p) for p in self.failures],
            "witnesses": {edge_token(p): list(w) for p, w in sorted(self.witnesses.items())},
            "nodes_explored": self.nodes_explored,
        }


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def _check_chunk(args: tuple[Graph, ColorView, list[tuple[int, int]], int]) -> list[tuple[tuple[int, int], tuple[int, ...] | None, int]]:
    g, view, pairs, budget = args
    out = []
    for u, v in pairs:
        found, explored = _search_pair(g, view, u, v, budget, shortest=True)
        out.append(((u, v), found, explored))
    return out


def is_total_proper_connected(
    g: Graph,
    c: TotalColoring,
    flavor: PathFlavor = PathFlavor.TOTAL,
    *,
    budget: int | None = None,
    workers: int | None = None,
) -> CheckReport:
    """Check every vertex pair; the report lists a witness or a failure for each."""
    flavor = PathFlavor.parse(flavor)
    if not is_connected(g):
        raise CheckerError("is_total_proper_connected needs a connected graph")
    settings = get_settings().checker
    budget = budget if budget is not None else settings.pair_budget
    workers = workers if workers is not None else settings.workers
    view = ColorView.of(g, c, flavor)
    pairs = _pairs(g.n)

    if workers > 1 and len(pairs) > workers:
        size = -(-len(pairs) // workers)
        chunks = [(g, view, pairs[i : i + size], budget) for i in range(0, len(pairs), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = [item for chunk in pool.map(_check_chunk, chunks) for item in chunk]
    else:
        results = _check_chunk((g, view, pairs, budget))

    witnesses: dict[tuple[int, int], tuple[int, ...]] = {}
    failures: list[tuple[int, int]] = []
    explored = 0
    for pair, found, count in results:
        explored += count
        if found is None:
            failures.append(pair)
        else:
            witnesses[pair] = found
    return CheckReport(
        connected=not failures,
        flavor=flavor,
        witnesses=witnesses,
        failures=tuple(failures),
        nodes_explored=explored,
    )


def view_passes(g: Graph, view: ColorView, *, budget: int | None = None, pairs: Iterable[tuple[int, int]] | None = None) -> bool:
    """Short-circuit check used by the oracle and the search engines."""
    return first_failure_view(g, view, budget=budget, pairs=pairs) is None


def first_failure_view(
    g: Graph,
    view: ColorView,
    *,
    budget: int | None = None,
    pairs: Iterable[tuple[int, int]] | None = None,
) -> tuple[int, int] | None:
    budget = budget if budget is not None else get_settings().checker.pair_budget
    for u, v in pairs if pairs is not None else _pairs(g.n):
        found, _ = _search_pair(g, view, u, v, budget, shortest=False)
        if found is None:
            return (u, v)
    return None


def first_failure(g: Graph, c: TotalColoring, flavor: PathFlavor = PathFlavor.TOTAL, *, budget: int | None = None) -> tuple[int, int] | None:
    return first_failure_view(g, ColorView.of(g, c, PathFlavor.parse(flavor)), budget=budget)


def failing_pairs(g: Graph, c: TotalColoring, *, budget: int) -> list[tuple[int, int]]:
    """Approximate failure list: pairs whose search runs out of `budget` count as failing."""
    view = ColorView.of(g, c, PathFlavor.TOTAL)
    out = []
    for u, v in _pairs(g.n):
        try:
            found, _ = _search_pair(g, view, u, v, budget, shortest=False)
        except CheckBudgetExceeded:
            found = None
        if found is None:
            out.append((u, v))
    return out
