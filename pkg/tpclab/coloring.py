#!/usr/bin/env python3
"""
Total colorings.

A `TotalColoring` assigns a color in [1..k] to vertices and edges. Either part
may be empty: edge-only colorings witness pc, vertex-only colorings witness
pvc. Colorable elements are ordered vertices first, then edges in ascending
order; the canonical enumerator walks restricted-growth strings over that
order so every color relabelling is visited once.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterator, Mapping, Sequence

from tpclab.graph import Graph
from tpclab.helpers import edge_key, edge_token, parse_edge_token


class ColoringError(ValueError):
    pass


Element = tuple[str, int] | tuple[str, tuple[int, int]]


def elements(g: Graph, *, vertices: bool = True, edges: bool = True) -> list[Element]:
    out: list[Element] = []
    if vertices:
        out.extend(("v", v) for v in range(g.n))
    if edges:
        out.extend(("e", e) for e in g.edge_list)
    return out


@dataclass(frozen=True)
class TotalColoring:
    k: int
    vertex_colors: tuple[int, ...] = ()
    edge_colors: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ColoringError(f"Palette size must be >= 1, got {self.k}")
        for c in self.vertex_colors:
            if not 1 <= c <= self.k:
                raise ColoringError(f"Vertex color {c} outside [1..{self.k}]")
        for e, c in self.edge_colors.items():
            if e != edge_key(*e):
                raise ColoringError(f"Edge key {e} is not normalized")
            if not 1 <= c <= self.k:
                raise ColoringError(f"Edge color {c} outside [1..{self.k}] on {e}")

    def vertex_color(self, v: int) -> int:
        return self.vertex_colors[v]

    def edge_color(self, u: int, v: int) -> int:
        return self.edge_colors[edge_key(u, v)]

    def colors_used(self) -> set[int]:
        return set(self.vertex_colors) | set(self.edge_colors.values())

    def validate(self, g: Graph, *, vertices: bool = True, edges: bool = True) -> None:
        """Every required element of `g` is colored and nothing else is."""
        if vertices and len(self.vertex_colors) != g.n:
            raise ColoringError(f"Coloring has {len(self.vertex_colors)} vertex colors for {g.n} vertices")
        if self.vertex_colors and len(self.vertex_colors) != g.n:
            raise ColoringError("Vertex colors do not match the graph order")
        if edges:
            missing = g.edges - self.edge_colors.keys()
            if missing:
                raise ColoringError(f"Uncolored edges: {sorted(missing)[:5]}")
        extra = self.edge_colors.keys() - g.edges
        if extra:
            raise ColoringError(f"Colored pairs that are not edges: {sorted(extra)[:5]}")

    def permuted(self, sigma: Mapping[int, int] | Sequence[int]) -> TotalColoring:
        """Rename colors; `sigma` maps old color to new (sequence is 0-indexed by color-1)."""
        if isinstance(sigma, Mapping):
            table = dict(sigma)
        else:
            table = {i + 1: c for i, c in enumerate(sigma)}
        if sorted(table) != list(range(1, self.k + 1)) or sorted(table.values()) != list(range(1, self.k + 1)):
            raise ColoringError("Color permutation must be a bijection on [1..k]")
        return TotalColoring(
            k=self.k,
            vertex_colors=tuple(table[c] for c in self.vertex_colors),
            edge_colors={e: table[c] for e, c in self.edge_colors.items()},
        )

    def restricted_to(self, sub: Graph) -> TotalColoring:
        return TotalColoring(
            k=self.k,
            vertex_colors=self.vertex_colors,
            edge_colors={e: c for e, c in self.edge_colors.items() if e in sub.edges},
        )

    def transported(self, mapping: Sequence[int]) -> TotalColoring:
        """Relabel vertices: old vertex v becomes mapping[v]."""
        n = len(mapping)
        if self.vertex_colors and len(self.vertex_colors) != n:
            raise ColoringError("Vertex mapping does not cover the colored vertices")
        vc = [0] * n
        for v, c in enumerate(self.vertex_colors):
            vc[mapping[v]] = c
        return TotalColoring(
            k=self.k,
            vertex_colors=tuple(vc) if self.vertex_colors else (),
            edge_colors={edge_key(mapping[u], mapping[v]): c for (u, v), c in self.edge_colors.items()},
        )

    def with_palette(self, k: int) -> TotalColoring:
        return TotalColoring(k=k, vertex_colors=self.vertex_colors, edge_colors=dict(self.edge_colors))

    def to_json(self) -> dict[str, Any]:
        return {
            "k": self.k,
            "vertex_colors": list(self.vertex_colors),
            "edge_colors": {edge_token(e): c for e, c in sorted(self.edge_colors.items())},
        }

    @classmethod
    def from_json(cls, payload: Mapping[str, Any]) -> TotalColoring:
        if not isinstance(payload, Mapping):
            raise ColoringError("Coloring JSON must be an object")
        try:
            k = int(payload["k"])
            vertex_colors = tuple(int(c) for c in payload.get("vertex_colors", []))
            edge_colors = {parse_edge_token(t): int(c) for t, c in dict(payload.get("edge_colors", {})).items()}
        except (KeyError, TypeError, ValueError) as exc:
            raise ColoringError(f"Invalid coloring JSON: {exc}") from exc
        return cls(k=k, vertex_colors=vertex_colors, edge_colors=edge_colors)

    @classmethod
    def from_assignment(cls, g: Graph, k: int, values: Sequence[int], *, vertices: bool = True, edges: bool = True) -> TotalColoring:
        """Build from colors listed in canonical element order."""
        order = elements(g, vertices=vertices, edges=edges)
        if len(values) != len(order):
            raise ColoringError(f"Expected {len(order)} colors, got {len(values)}")
        vc = tuple(values[: g.n]) if vertices else ()
        offset = g.n if vertices else 0
        ec = {e: values[offset + i] for i, e in enumerate(g.edge_list)} if edges else {}
        return cls(k=k, vertex_colors=vc, edge_colors=ec)

    def assignment(self, g: Graph) -> list[int]:
        return list(self.vertex_colors) + [self.edge_colors[e] for e in g.edge_list if e in self.edge_colors]


def uniform(g: Graph, color: int = 1, k: int = 1) -> TotalColoring:
    return TotalColoring(k=k, vertex_colors=(color,) * g.n, edge_colors={e: color for e in g.edges})


def canonical_assignments(
    count: int,
    k: int,
    *,
    exact: bool = True,
    prefix: Sequence[int] = (),
) -> Iterator[tuple[int, ...]]:
    """Restricted-growth strings of length `count` over [1..k].

    Element i may use at most 1 + max(colors before i), so the first element is
    always 1 and each color relabelling class appears exactly once. With
    `exact`, only strings using all k colors are produced.
    """
    if count == 0:
        if not prefix and (not exact or k == 0):
            yield ()
        return
    values = list(prefix)
    top = max(values, default=0)

    def rec(i: int, top: int) -> Iterator[tuple[int, ...]]:
        if exact and top + (count - i) < k:
            return
        if i == count:
            yield tuple(values)
            return
        for c in range(1, min(top + 1, k) + 1):
            values.append(c)
            yield from rec(i + 1, max(top, c))
            values.pop()

    yield from rec(len(values), top)
