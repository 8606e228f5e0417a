#!/usr/bin/env python3
"""
Graph core for tpclab.

A `Graph` is an immutable simple undirected graph on vertices 0..n-1 with
edges stored as normalized pairs (u, v), u < v. Generators, traversal and
structure queries go through networkx; the Hamiltonian path search is our own
budgeted backtracking so that its iteration order is fixed.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Iterable, Iterator, Literal, Mapping, Sequence

import networkx as nx
import numpy as np

from tpclab.helpers import BudgetExhausted, edge_key
from tpclab.settings import get_settings


class GraphError(ValueError):
    pass


class HamiltonianBudgetExceeded(BudgetExhausted):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise GraphError(f"Graph needs at least one vertex, got n={self.n!r}")
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"Self-loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise GraphError(f"Edge ({u}, {v}) is not a normalized pair inside [0, {self.n})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        normalized: set[tuple[int, int]] = set()
        for pair in edges:
            if len(pair) != 2:
                raise GraphError(f"Edge must have two endpoints: {pair!r}")
            u, v = int(pair[0]), int(pair[1])
            if u == v:
                raise GraphError(f"Self-loop at vertex {u}")
            key = edge_key(u, v)
            if key in normalized:
                raise GraphError(f"Parallel edge {key}")
            normalized.add(key)
        return cls(n, frozenset(normalized))

    @classmethod
    def from_networkx(cls, nxg: nx.Graph, order: Sequence[Any] | None = None) -> Graph:
        nodes = list(order) if order is not None else sorted(nxg.nodes)
        if len(nodes) != nxg.number_of_nodes():
            raise GraphError("Node order must list every node exactly once")
        index = {node: i for i, node in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[a], index[b]) for a, b in nxg.edges))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def edge_list(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edges))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and edge_key(u, v) in self.edges

    def spanning_subgraph(self, edges: Iterable[tuple[int, int]]) -> Graph:
        sub = frozenset(edge_key(u, v) for u, v in edges)
        missing = sub - self.edges
        if missing:
            raise GraphError(f"Not edges of the graph: {sorted(missing)[:3]}")
        return Graph(self.n, sub)

    def is_spanning_subgraph_of(self, other: Graph) -> bool:
        return self.n == other.n and self.edges <= other.edges

    def to_networkx(self) -> nx.Graph:
        nxg = nx.Graph()
        nxg.add_nodes_from(range(self.n))
        nxg.add_edges_from(self.edge_list)
        return nxg

    def to_json(self) -> dict[str, Any]:
        return {"n": self.n, "edges": [list(e) for e in self.edge_list]}

    @classmethod
    def from_json(cls, payload: Mapping[str, Any]) -> Graph:
        if not isinstance(payload, Mapping):
            raise GraphError("Graph JSON must be an object")
        n = payload.get("n")
        edges = payload.get("edges", [])
        if isinstance(n, bool) or not isinstance(n, int):
            raise GraphError(f"Graph JSON `n` must be an integer, got {n!r}")
        if not isinstance(edges, list):
            raise GraphError("Graph JSON `edges` must be a list")
        return cls.from_edges(n, edges)


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------


def make_path(n: int) -> Graph:
    if n < 1:
        raise GraphError("make_path needs n >= 1")
    return Graph.from_networkx(nx.path_graph(n))


def make_star(leaves: int) -> Graph:
    """K_{1,leaves} with vertex 0 as the center."""
    if leaves < 1:
        raise GraphError("make_star needs at least one leaf")
    return Graph.from_networkx(nx.star_graph(leaves))


def make_complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("make_complete needs n >= 1")
    return Graph.from_networkx(nx.complete_graph(n))


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"make_cycle needs n >= 3, got {n}")
    return Graph.from_networkx(nx.cycle_graph(n))


def make_complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n}: part A = [0, m), part B = [m, m+n)."""
    if m < 1 or n < 1:
        raise GraphError("make_complete_bipartite needs both parts non-empty")
    return Graph.from_networkx(nx.complete_bipartite_graph(m, n))


def make_empty(n: int) -> Graph:
    if n < 1:
        raise GraphError("make_empty needs n >= 1")
    return Graph(n, frozenset())


def make_spider(legs: Sequence[int]) -> Graph:
    """Center 0 with one path per entry of `legs`, numbered leg by leg."""
    if not legs or any(length < 1 for length in legs):
        raise GraphError("make_spider needs at least one leg, every leg of length >= 1")
    edges: list[tuple[int, int]] = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges)


# ---------------------------------------------------------------------------
# Queries
# ---------------------------------------------------------------------------


def is_complete(g: Graph) -> bool:
    return g.num_edges == g.n * (g.n - 1) // 2


def max_degree(g: Graph) -> int:
    return max(len(a) for a in g.adjacency)


def is_connected(g: Graph) -> bool:
    return nx.is_connected(g.to_networkx())


def is_tree(g: Graph) -> bool:
    return g.num_edges == g.n - 1 and is_connected(g)


def is_biconnected(g: Graph) -> bool:
    return g.n >= 3 and nx.is_biconnected(g.to_networkx())


def diameter(g: Graph) -> int:
    require_connected(g)
    return nx.diameter(g.to_networkx())


def bridges(g: Graph) -> list[tuple[int, int]]:
    return sorted(edge_key(u, v) for u, v in nx.bridges(g.to_networkx()))


def max_bridges_at_vertex(g: Graph) -> int:
    counts = [0] * g.n
    for u, v in bridges(g):
        counts[u] += 1
        counts[v] += 1
    return max(counts)


def require_connected(g: Graph, what: str = "graph") -> None:
    if not is_connected(g):
        raise GraphError(f"{what} must be connected")


# ---------------------------------------------------------------------------
# Hamiltonian paths
# ---------------------------------------------------------------------------


def _unvisited_reachable(g: Graph, current: int, visited: list[bool], remaining: int) -> bool:
    seen = {current}
    queue = deque([current])
    reached = 0
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if not visited[y] and y not in seen:
                seen.add(y)
                reached += 1
                queue.append(y)
    return reached == remaining


def find_hamiltonian_path(g: Graph, budget: int | None = None) -> tuple[int, ...] | None:
    """Deterministic backtracking search for a Hamiltonian path.

    Starts are tried in ascending order (only the lowest degree-1 vertex when
    one exists), neighbours are extended in ascending order. Branches are cut
    when the unvisited vertices stop being reachable from the path head, or
    when two unvisited vertices could only be the final vertex.
    Raises HamiltonianBudgetExceeded when more than `budget` nodes are expanded.
    """
    if g.n == 1:
        return (0,)
    if not is_connected(g):
        return None
    budget = budget if budget is not None else get_settings().hamiltonian.node_budget

    leaves = [v for v in range(g.n) if g.degree(v) == 1]
    if len(leaves) > 2:
        return None
    starts = leaves[:1] if leaves else list(range(g.n))

    visited = [False] * g.n
    path: list[int] = []
    explored = 0

    def extend(v: int) -> bool:
        nonlocal explored
        explored += 1
        if explored > budget:
            raise HamiltonianBudgetExceeded(
                f"Hamiltonian path search exceeded {budget} nodes on n={g.n}"
            )
        if len(path) == g.n:
            return True
        remaining = g.n - len(path)
        if not _unvisited_reachable(g, v, visited, remaining):
            return False
        forced_ends = 0
        for w in range(g.n):
            if visited[w]:
                continue
            avail = sum(1 for y in g.adjacency[w] if not visited[y] or y == v)
            if avail <= 1:
                forced_ends += 1
                if forced_ends > 1:
                    return False
        for w in g.adjacency[v]:
            if visited[w]:
                continue
            visited[w] = True
            path.append(w)
            if extend(w):
                return True
            path.pop()
            visited[w] = False
        return False

    for s in starts:
        visited[s] = True
        path.append(s)
        if extend(s):
            return tuple(path)
        path.pop()
        visited[s] = False
    return None


def is_traceable(g: Graph) -> bool:
    return find_hamiltonian_path(g) is not None


# ---------------------------------------------------------------------------
# BFS layers and spanning trees
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BfsLayers:
    source: int
    layers: tuple[tuple[int, ...], ...]

    @cached_property
    def level(self) -> dict[int, int]:
        return {v: i for i, layer in enumerate(self.layers) for v in layer}

    @property
    def eccentricity(self) -> int:
        return len(self.layers) - 1


def _check_vertex(g: Graph, v: int) -> None:
    if not (0 <= v < g.n):
        raise GraphError(f"Vertex {v} outside [0, {g.n})")


def bfs_layers(g: Graph, source: int) -> BfsLayers:
    _check_vertex(g, source)
    require_connected(g)
    layers = tuple(tuple(sorted(layer)) for layer in nx.bfs_layers(g.to_networkx(), source))
    return BfsLayers(source=source, layers=layers)


@dataclass(frozen=True)
class TreeInfo:
    tree: Graph
    root: int
    parent: Mapping[int, int] = field(compare=False)

    @cached_property
    def depth(self) -> dict[int, int]:
        return dict(bfs_layers(self.tree, self.root).level)

    @cached_property
    def children(self) -> dict[int, tuple[int, ...]]:
        kids: dict[int, list[int]] = {v: [] for v in range(self.tree.n)}
        for child, par in self.parent.items():
            kids[par].append(child)
        return {v: tuple(sorted(c)) for v, c in kids.items()}

    def path_to_root(self, v: int) -> list[int]:
        out = [v]
        while out[-1] != self.root:
            out.append(self.parent[out[-1]])
        return out

    def leaves(self) -> list[int]:
        return [v for v in range(self.tree.n) if v != self.root and not self.children[v]]


def _tree_info(tree_edges: Iterable[tuple[int, int]], n: int, root: int) -> TreeInfo:
    tree = Graph.from_edges(n, tree_edges)
    parent = dict(nx.bfs_predecessors(tree.to_networkx(), root))
    return TreeInfo(tree=tree, root=root, parent=parent)


def _reduce_max_degree(g: Graph, tree_edges: set[tuple[int, int]]) -> set[tuple[int, int]]:
    """Local improvement: swap a tree edge at a max-degree vertex for a non-tree edge."""
    while True:
        deg = [0] * g.n
        for u, v in tree_edges:
            deg[u] += 1
            deg[v] += 1
        top = max(deg)
        if top <= 2:
            return tree_edges
        tree_nx = nx.Graph()
        tree_nx.add_nodes_from(range(g.n))
        tree_nx.add_edges_from(sorted(tree_edges))
        swapped = False
        for a, b in g.edge_list:
            if (a, b) in tree_edges or deg[a] > top - 2 or deg[b] > top - 2:
                continue
            route = nx.shortest_path(tree_nx, a, b)
            for i in range(1, len(route) - 1):
                w = route[i]
                if deg[w] == top:
                    tree_edges.discard(edge_key(route[i - 1], w))
                    tree_edges.add((a, b))
                    swapped = True
                    break
            if swapped:
                break
        if not swapped:
            return tree_edges


def spanning_tree(
    g: Graph,
    strategy: Literal["bfs", "min_max_degree"] = "bfs",
    root: int = 0,
) -> TreeInfo:
    _check_vertex(g, root)
    require_connected(g)
    if strategy not in ("bfs", "min_max_degree"):
        raise GraphError(f"Unknown spanning tree strategy: {strategy!r}")
    tree_edges = {edge_key(child, par) for child, par in nx.bfs_predecessors(g.to_networkx(), root)}
    if strategy == "min_max_degree":
        tree_edges = _reduce_max_degree(g, tree_edges)
    return _tree_info(tree_edges, g.n, root)


def tree_info(t: Graph, root: int = 0) -> TreeInfo:
    if not is_tree(t):
        raise GraphError("tree_info needs a tree")
    return _tree_info(t.edges, t.n, root)


# ---------------------------------------------------------------------------
# Enumeration of small connected graphs
# ---------------------------------------------------------------------------


def canonical_form(g: Graph) -> bytes:
    """Minimum upper-triangle adjacency string over all vertex permutations."""
    adj = np.zeros((g.n, g.n), dtype=np.uint8)
    for u, v in g.edges:
        adj[u, v] = adj[v, u] = 1
    upper = np.triu_indices(g.n, k=1)
    best: bytes | None = None
    for perm in itertools.permutations(range(g.n)):
        p = np.asarray(perm)
        key = adj[np.ix_(p, p)][upper].tobytes()
        if best is None or key < best:
            best = key
    return best if best is not None else b""


def unique_up_to_isomorphism(graphs: Iterable[Graph]) -> Iterator[Graph]:
    seen: set[tuple[int, bytes]] = set()
    for g in graphs:
        key = (g.n, canonical_form(g))
        if key in seen:
            continue
        seen.add(key)
        yield g


def _labelled_connected_graphs(n: int) -> Iterator[Graph]:
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        if len(edges) < n - 1:
            continue
        g = Graph.from_edges(n, edges)
        if is_connected(g):
            yield g


def enumerate_connected_graphs(
    n: int,
    unique: bool = True,
    method: Literal["atlas", "canonical"] = "atlas",
) -> Iterator[Graph]:
    """Stream connected graphs on n vertices.

    unique=False yields every labelled connected graph. unique=True yields one
    graph per isomorphism class, either from the networkx graph atlas (fast,
    n <= 7) or by canonical-form filtering of the labelled stream.
    """
    cap = get_settings().enumeration.max_vertices
    if n < 1:
        raise GraphError("enumerate_connected_graphs needs n >= 1")
    if n > cap:
        raise GraphError(f"enumerate_connected_graphs: n={n} exceeds configured cap {cap}")
    if not unique:
        yield from _labelled_connected_graphs(n)
        return
    if method == "canonical":
        yield from unique_up_to_isomorphism(_labelled_connected_graphs(n))
        return
    if n > 7:
        raise GraphError("The graph atlas only covers n <= 7; use method='canonical'")
    for nxg in nx.graph_atlas_g():
        if nxg.number_of_nodes() == n and nx.is_connected(nxg):
            yield Graph.from_networkx(nxg)
