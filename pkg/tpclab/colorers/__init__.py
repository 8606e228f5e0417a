#!/usr/bin/env python3
"""
Constructive total colorings, one module per graph family.

`THEOREMS` maps the CLI's `--theorem` names to adapters that take the flat
graph plus the product it came from (None for a plain graph).
"""

from __future__ import annotations

from typing import Callable

from tpclab.colorers.base import ColorerError, ColorerOutcome, ColoringDraft, finalize, third
from tpclab.colorers.basic import (
    color_by_search,
    color_complete_bipartite,
    color_spanning_tree,
    color_traceable,
    color_tree,
)
from tpclab.colorers.cartesian import (
    color_cartesian_near_star,
    color_cartesian_star,
    color_cartesian_traceable,
)
from tpclab.colorers.join import color_join_general, color_join_with_k1
from tpclab.colorers.lexicographic import color_lexicographic
from tpclab.colorers.permutation import color_permutation_star, color_permutation_traceable
from tpclab.colorers.search import search_coloring
from tpclab.colorers.strong import color_strong
from tpclab.graph import Graph, make_complete_bipartite, make_star
from tpclab.ops import Permutation, Product, ProductKind

TheoremAdapter = Callable[[Graph, Product | None], ColorerOutcome]


def _factors(product: Product | None, kind: ProductKind, theorem: str) -> tuple[Graph, ...]:
    if product is None or product.kind != kind:
        raise ColorerError(f"--theorem {theorem} needs a {kind} product bundle")
    return product.factors


def _binary(kind: ProductKind, theorem: str, fn: Callable[[Graph, Graph], ColorerOutcome]) -> TheoremAdapter:
    def adapter(graph: Graph, product: Product | None) -> ColorerOutcome:
        g, h = _factors(product, kind, theorem)
        return fn(g, h)

    return adapter


def _join_k1(graph: Graph, product: Product | None) -> ColorerOutcome:
    g, h = _factors(product, ProductKind.JOIN, "join-k1")
    if h.n != 1:
        raise ColorerError(f"--theorem join-k1 needs K_1 as the second factor, got {h.n} vertices")
    return color_join_with_k1(g)


def _complete_bipartite(graph: Graph, product: Product | None) -> ColorerOutcome:
    n = graph.degree(0) if graph.n else 0
    m = graph.n - n
    if m < 1 or n < 1 or graph != make_complete_bipartite(m, n):
        raise ColorerError("--theorem complete-bipartite needs K_{m,n} as generated by gen --kind bipartite")
    return color_complete_bipartite(m, n)


def _perm_trace(graph: Graph, product: Product | None) -> ColorerOutcome:
    (g,) = _factors(product, ProductKind.PERMUTATION, "perm-trace")
    assert product is not None and product.alpha is not None
    return color_permutation_traceable(g, product.alpha)


def _perm_star(graph: Graph, product: Product | None) -> ColorerOutcome:
    (g,) = _factors(product, ProductKind.PERMUTATION, "perm-star")
    assert product is not None and product.alpha is not None
    leaves = g.n - 1
    if g != make_star(leaves):
        raise ColorerError("--theorem perm-star needs the star K_{1,m} with center 0")
    if product.alpha.is_identity:
        variant = "identity"
    elif product.alpha == Permutation.transposition(g.n, 0, 1):
        variant = "transposition01"
    else:
        raise ColorerError("--theorem perm-star covers the identity and the swap of vertices 0 and 1")
    return color_permutation_star(leaves, variant)


def _plain(fn: Callable[[Graph], ColorerOutcome]) -> TheoremAdapter:
    def adapter(graph: Graph, product: Product | None) -> ColorerOutcome:
        return fn(graph)

    return adapter


THEOREMS: dict[str, TheoremAdapter] = {
    "join": _binary(ProductKind.JOIN, "join", color_join_general),
    "join-k1": _join_k1,
    "cart-trace": _binary(ProductKind.CARTESIAN, "cart-trace", color_cartesian_traceable),
    "cart-star": _binary(ProductKind.CARTESIAN, "cart-star", color_cartesian_star),
    "cart-near-star": _binary(ProductKind.CARTESIAN, "cart-near-star", color_cartesian_near_star),
    "perm-trace": _perm_trace,
    "perm-star": _perm_star,
    "lex": _binary(ProductKind.LEXICOGRAPHIC, "lex", color_lexicographic),
    "strong": _binary(ProductKind.STRONG, "strong", color_strong),
    "tree": _plain(color_tree),
    "traceable": _plain(color_traceable),
    "search": _plain(color_by_search),
    "spanning-tree": _plain(color_spanning_tree),
    "complete-bipartite": _complete_bipartite,
}


def apply_theorem(name: str, graph: Graph, product: Product | None = None) -> ColorerOutcome:
    try:
        adapter = THEOREMS[name]
    except KeyError as exc:
        raise ColorerError(f"Unknown theorem {name!r}; choose from {', '.join(THEOREMS)}") from exc
    outcome = adapter(graph, product)
    if outcome.graph != graph:
        raise ColorerError(f"--theorem {name}: colored graph does not match the input graph")
    return outcome


__all__ = [
    "THEOREMS",
    "ColorerError",
    "ColorerOutcome",
    "ColoringDraft",
    "apply_theorem",
    "color_by_search",
    "color_cartesian_near_star",
    "color_cartesian_star",
    "color_cartesian_traceable",
    "color_complete_bipartite",
    "color_join_general",
    "color_join_with_k1",
    "color_lexicographic",
    "color_permutation_star",
    "color_permutation_traceable",
    "color_spanning_tree",
    "color_strong",
    "color_traceable",
    "color_tree",
    "finalize",
    "search_coloring",
    "third",
]
