#!/usr/bin/env python3
"""
Graph operations: join, Cartesian, lexicographic and strong products, and
permutation graphs.

Every operation returns a `Product` carrying the flat `Graph`, a label map
between composite labels and flat indices, and (for strong products and
permutation graphs) a tag per edge.

Flat layouts:
- products: (g, h) -> g * |H| + h
- join: G on [0, |G|), H on [|G|, |G|+|H|); labels ("g", i) / ("h", j)
- permutation graph: copy A ("v", i) on [0, n), copy B ("u", i) on [n, 2n);
  the cross edge at i joins ("v", i) and ("u", alpha(i))
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import StrEnum
from functools import cached_property
from typing import Any, Hashable, Iterator, Mapping, Sequence

import networkx as nx

from tpclab.graph import Graph
from tpclab.helpers import edge_key


class OpsError(ValueError):
    pass


class ProductKind(StrEnum):
    JOIN = "join"
    CARTESIAN = "cartesian"
    LEXICOGRAPHIC = "lexicographic"
    STRONG = "strong"
    PERMUTATION = "permutation"


class EdgeKind(StrEnum):
    CARTESIAN = "cartesian"
    NONCARTESIAN = "noncartesian"
    INHERITED = "inherited"
    CROSS = "cross"


@dataclass(frozen=True)
class Permutation:
    image: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.image) != list(range(len(self.image))):
            raise OpsError(f"Not a permutation of [0, {len(self.image)}): {list(self.image)}")

    def __len__(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i]

    @cached_property
    def inverse(self) -> Permutation:
        inv = [0] * len(self.image)
        for i, a in enumerate(self.image):
            inv[a] = i
        return Permutation(tuple(inv))

    @property
    def is_identity(self) -> bool:
        return all(i == a for i, a in enumerate(self.image))

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> Permutation:
        image = list(range(n))
        image[a], image[b] = image[b], image[a]
        return cls(tuple(image))

    @classmethod
    def from_json(cls, payload: Any) -> Permutation:
        if not isinstance(payload, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in payload):
            raise OpsError(f"Permutation JSON must be a list of integers, got {payload!r}")
        return cls(tuple(payload))

    def to_json(self) -> list[int]:
        return list(self.image)


def all_permutations(n: int) -> Iterator[Permutation]:
    for image in itertools.permutations(range(n)):
        yield Permutation(image)


@dataclass(frozen=True)
class ProductVertexMap:
    kind: ProductKind
    backward: tuple[Hashable, ...]

    @cached_property
    def forward(self) -> dict[Hashable, int]:
        return {label: i for i, label in enumerate(self.backward)}

    def __post_init__(self) -> None:
        if len(set(self.backward)) != len(self.backward):
            raise OpsError("Label map is not injective")

    def index(self, label: Hashable) -> int:
        try:
            return self.forward[label]
        except KeyError as exc:
            raise OpsError(f"Unknown composite label {label!r}") from exc

    def label(self, v: int) -> Hashable:
        return self.backward[v]

    def to_json(self) -> dict[str, Any]:
        return {"kind": str(self.kind), "labels": [list(lab) for lab in self.backward]}

    @classmethod
    def from_json(cls, payload: Mapping[str, Any]) -> ProductVertexMap:
        try:
            kind = ProductKind(payload["kind"])
            labels = tuple(tuple(lab) for lab in payload["labels"])
        except (KeyError, TypeError, ValueError) as exc:
            raise OpsError(f"Invalid label map JSON: {exc}") from exc
        return cls(kind=kind, backward=labels)


@dataclass(frozen=True)
class Product:
    graph: Graph
    labels: ProductVertexMap
    factors: tuple[Graph, ...]
    alpha: Permutation | None = None
    edge_kinds: Mapping[tuple[int, int], EdgeKind] = field(default_factory=dict, compare=False)

    @property
    def kind(self) -> ProductKind:
        return self.labels.kind

    def edges_of_kind(self, kind: EdgeKind) -> list[tuple[int, int]]:
        return sorted(e for e, k in self.edge_kinds.items() if k == kind)

    def to_json(self) -> dict[str, Any]:
        factors: dict[str, Any] = {"op": str(self.kind), "g": self.factors[0].to_json()}
        if len(self.factors) > 1:
            factors["h"] = self.factors[1].to_json()
        if self.alpha is not None:
            factors["alpha"] = self.alpha.to_json()
        return {"graph": self.graph.to_json(), "labels": self.labels.to_json(), "factors": factors}


def _flatten(nxg: nx.Graph, order: Sequence[Hashable]) -> Graph:
    return Graph.from_networkx(nxg, order=order)


def _grid_order(g: Graph, h: Graph) -> list[tuple[int, int]]:
    return [(a, b) for a in range(g.n) for b in range(h.n)]


def join(g: Graph, h: Graph) -> Product:
    left = nx.relabel_nodes(g.to_networkx(), {i: ("g", i) for i in range(g.n)})
    right = nx.relabel_nodes(h.to_networkx(), {j: ("h", j) for j in range(h.n)})
    order = [("g", i) for i in range(g.n)] + [("h", j) for j in range(h.n)]
    joined = nx.full_join(left, right)
    return Product(
        graph=_flatten(joined, order),
        labels=ProductVertexMap(ProductKind.JOIN, tuple(order)),
        factors=(g, h),
    )


def cartesian(g: Graph, h: Graph) -> Product:
    order = _grid_order(g, h)
    return Product(
        graph=_flatten(nx.cartesian_product(g.to_networkx(), h.to_networkx()), order),
        labels=ProductVertexMap(ProductKind.CARTESIAN, tuple(order)),
        factors=(g, h),
    )


def lexicographic(g: Graph, h: Graph) -> Product:
    order = _grid_order(g, h)
    return Product(
        graph=_flatten(nx.lexicographic_product(g.to_networkx(), h.to_networkx()), order),
        labels=ProductVertexMap(ProductKind.LEXICOGRAPHIC, tuple(order)),
        factors=(g, h),
    )


def strong(g: Graph, h: Graph) -> Product:
    order = _grid_order(g, h)
    graph = _flatten(nx.strong_product(g.to_networkx(), h.to_networkx()), order)
    kinds: dict[tuple[int, int], EdgeKind] = {}
    for u, v in graph.edge_list:
        (a, b), (c, d) = order[u], order[v]
        kinds[(u, v)] = EdgeKind.CARTESIAN if a == c or b == d else EdgeKind.NONCARTESIAN
    return Product(
        graph=graph,
        labels=ProductVertexMap(ProductKind.STRONG, tuple(order)),
        factors=(g, h),
        edge_kinds=kinds,
    )


def permutation_graph(g: Graph, alpha: Permutation) -> Product:
    if len(alpha) != g.n:
        raise OpsError(f"Permutation has size {len(alpha)} but the graph has {g.n} vertices")
    n = g.n
    copy_a = nx.relabel_nodes(g.to_networkx(), {i: ("v", i) for i in range(n)})
    copy_b = nx.relabel_nodes(g.to_networkx(), {i: ("u", i) for i in range(n)})
    union = nx.union(copy_a, copy_b)
    union.add_edges_from((("v", i), ("u", alpha(i))) for i in range(n))
    order = [("v", i) for i in range(n)] + [("u", i) for i in range(n)]
    graph = _flatten(union, order)
    cross = {edge_key(i, n + alpha(i)) for i in range(n)}
    kinds = {e: EdgeKind.CROSS if e in cross else EdgeKind.INHERITED for e in graph.edge_list}
    return Product(
        graph=graph,
        labels=ProductVertexMap(ProductKind.PERMUTATION, tuple(order)),
        factors=(g,),
        alpha=alpha,
        edge_kinds=kinds,
    )


OPERATIONS = {
    "join": join,
    "cartesian": cartesian,
    "lex": lexicographic,
    "lexicographic": lexicographic,
    "strong": strong,
}
