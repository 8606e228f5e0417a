#!/usr/bin/env python3
"""
Exact connection numbers for tiny graphs.

brute_force walks palettes k = 1, 2, ... and enumerates every coloring of
the flavor's elements with exactly k colors (canonical color introduction,
partial-check pruning). The first palette with a passing coloring is the
value; every smaller palette has been exhausted by then.

A verified hint coloring with k colors may stand in for the enumeration at
palette k, so larger instances only pay for exhausting palettes below it.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Iterator

import networkx as nx

from tpclab import ledger
from tpclab.checker import PathFlavor, first_failure
from tpclab.colorers import ColorerError, color_permutation_traceable, search_coloring
from tpclab.colorers.search import tree_coloring
from tpclab.coloring import TotalColoring, uniform
from tpclab.graph import (
    Graph,
    bridges,
    enumerate_connected_graphs,
    is_biconnected,
    is_complete,
    is_connected,
    is_traceable,
    is_tree,
    max_bridges_at_vertex,
    max_degree,
)
from tpclab.helpers import BudgetExhausted, log
from tpclab.ops import Permutation, all_permutations, permutation_graph
from tpclab.palette import PaletteSearch, first_passing
from tpclab.settings import get_settings


class OracleError(ValueError):
    pass


class HuntBudgetExceeded(BudgetExhausted):
    pass


@dataclass(frozen=True)
class TpcResult:
    value: int
    flavor: PathFlavor
    witness: TotalColoring | None
    colorings_tried: int
    elapsed: float = field(default=0.0, compare=False)

    def to_json(self) -> dict[str, Any]:
        return {
            "value": self.value,
            "flavor": str(self.flavor),
            "witness": self.witness.to_json() if self.witness is not None else None,
            "colorings_tried": self.colorings_tried,
        }


def element_count(g: Graph, flavor: PathFlavor) -> int:
    flavor = PathFlavor.parse(flavor)
    return (g.n if flavor.uses_vertices else 0) + (g.num_edges if flavor.uses_edges else 0)


def _hint_passes(g: Graph, hint: TotalColoring, flavor: PathFlavor) -> bool:
    try:
        hint.validate(g, vertices=flavor.uses_vertices, edges=flavor.uses_edges)
    except ValueError:
        return False
    return len(hint.colors_used()) == hint.k and first_failure(g, hint, flavor) is None


def brute_force(
    g: Graph,
    flavor: PathFlavor | str = PathFlavor.TOTAL,
    *,
    cap: int | None = None,
    hint: TotalColoring | None = None,
    workers: int | None = None,
) -> TpcResult:
    flavor = PathFlavor.parse(flavor)
    if not is_connected(g):
        raise OracleError("brute force needs a connected graph")
    settings = get_settings().oracle
    cap = cap if cap is not None else settings.element_cap
    workers = workers if workers is not None else settings.workers
    started = time.perf_counter()

    if is_complete(g):
        if flavor is PathFlavor.VERTEX:
            return TpcResult(0, flavor, None, 0, time.perf_counter() - started)
        witness = uniform(g)
        if flavor is PathFlavor.EDGE:
            witness = TotalColoring(k=1, edge_colors=dict(witness.edge_colors))
        return TpcResult(1, flavor, witness, 0, time.perf_counter() - started)

    count = element_count(g, flavor)
    if hint is not None and not _hint_passes(g, hint, flavor):
        log(f"oracle: hint with k={hint.k} does not pass the {flavor} check, ignoring it")
        hint = None
    if hint is None and count > cap:
        raise OracleError(f"{count} colorable elements exceed the oracle cap {cap}")

    tried = 0
    for k in range(1, count + 1):
        if hint is not None and k == hint.k:
            log(f"oracle: palettes below {k} exhausted, hint accepted")
            return _finish(g, TpcResult(k, flavor, hint, tried, time.perf_counter() - started))
        result = first_passing(PaletteSearch(g, k, flavor, exact=True), workers=workers)
        tried += result.colorings_tried
        log(f"oracle: {flavor} k={k} tried={result.colorings_tried} found={result.witness is not None}")
        if result.witness is not None:
            return _finish(g, TpcResult(k, flavor, result.witness, tried, time.perf_counter() - started))
    raise OracleError("no palette up to the element count passed")


def _finish(g: Graph, result: TpcResult) -> TpcResult:
    ledger.record_oracle(str(result.flavor), g.to_json(), result.value)
    return result


def brute_force_tpc(g: Graph, **kwargs: Any) -> TpcResult:
    return brute_force(g, PathFlavor.TOTAL, **kwargs)


def brute_force_pc(g: Graph, **kwargs: Any) -> TpcResult:
    return brute_force(g, PathFlavor.EDGE, **kwargs)


def brute_force_pvc(g: Graph, **kwargs: Any) -> TpcResult:
    return brute_force(g, PathFlavor.VERTEX, **kwargs)


# ---------------------------------------------------------------------------
# Verifiers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Verdict:
    name: str
    holds: bool
    values: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        return {"name": self.name, "holds": self.holds, "values": dict(self.values)}


def verify_inequality_star(g: Graph) -> bool:
    tpc = brute_force_tpc(g).value
    pc = brute_force_pc(g).value
    pvc = brute_force_pvc(g).value
    return tpc >= max(pc, pvc)


def verify_bridge_bound(g: Graph) -> bool:
    if g.n < 3:
        raise OracleError("the bridge bound needs at least 3 vertices")
    if not bridges(g):
        return True
    hint = tree_coloring(g, max_degree(g) + 1) if is_tree(g) else None
    return brute_force_tpc(g, hint=hint).value >= max_bridges_at_vertex(g) + 1


def verify_monotonicity(g: Graph, h_spanning: Graph) -> bool:
    if not h_spanning.is_spanning_subgraph_of(g):
        raise OracleError("second graph is not a spanning subgraph of the first")
    if not is_connected(h_spanning):
        raise OracleError("spanning subgraph must be connected")
    return brute_force_tpc(g).value <= brute_force_tpc(h_spanning).value


def verify_two_connected_bound(g: Graph) -> Verdict:
    if not is_biconnected(g):
        raise OracleError("verify_two_connected_bound needs a 2-connected graph")
    value = brute_force_tpc(g).value
    return Verdict("two-connected-bound", value <= 4, {"tpc": value})


def verify_tree_value(t: Graph) -> Verdict:
    if not is_tree(t) or t.n < 3:
        raise OracleError("verify_tree_value needs a tree on at least 3 vertices")
    expected = max_degree(t) + 1
    value = brute_force_tpc(t, hint=tree_coloring(t, expected)).value
    return Verdict("tree-value", value == expected, {"tpc": value, "expected": expected})


def verify_complete_characterization(g: Graph) -> Verdict:
    value = brute_force_tpc(g).value
    complete = is_complete(g)
    return Verdict("complete-characterization", (value == 1) == complete, {"tpc": value, "complete": complete})


# ---------------------------------------------------------------------------
# Permutation graphs with tpc = 4
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HuntCase:
    graph: Graph
    alpha: Permutation
    verdict: str
    value: int | None = None

    def to_json(self) -> dict[str, Any]:
        return {
            "graph": self.graph.to_json(),
            "alpha": self.alpha.to_json(),
            "verdict": self.verdict,
            "value": self.value,
        }


@dataclass(frozen=True)
class HuntReport:
    candidates: tuple[HuntCase, ...]
    undecided: tuple[HuntCase, ...]
    examined: int
    partial: bool

    def to_json(self) -> dict[str, Any]:
        return {
            "candidates": [c.to_json() for c in self.candidates],
            "undecided": [c.to_json() for c in self.undecided],
            "examined": self.examined,
            "partial": self.partial,
        }


def _distinct_permutation_graphs(n: int) -> Iterator[tuple[Graph, Permutation, Graph]]:
    """(G, alpha, P_alpha(G)) with one representative per isomorphism class of P_alpha(G) for each G."""
    for g in enumerate_connected_graphs(n, unique=True):
        seen: dict[str, list[nx.Graph]] = {}
        for alpha in all_permutations(n):
            p = permutation_graph(g, alpha).graph
            nxp = p.to_networkx()
            bucket = seen.setdefault(nx.weisfeiler_lehman_graph_hash(nxp), [])
            if any(nx.is_isomorphic(nxp, other) for other in bucket):
                continue
            bucket.append(nxp)
            yield g, alpha, p


def _decide(g: Graph, alpha: Permutation, p: Graph) -> HuntCase:
    if is_complete(p):
        return HuntCase(g, alpha, "complete", 1)
    three = None
    if is_traceable(g):
        try:
            three = color_permutation_traceable(g, alpha).coloring
        except ColorerError:
            three = None
    if three is None:
        three = search_coloring(p, 3)
    if three is not None:
        # a non-complete graph needs at least 3 colors
        return HuntCase(g, alpha, "three", 3)
    if element_count(p, PathFlavor.TOTAL) <= get_settings().oracle.element_cap:
        value = brute_force_tpc(p).value
        return HuntCase(g, alpha, "candidate" if value == 4 else "exact", value)
    return HuntCase(g, alpha, "undecided")


def hunt_permutation_tpc4(n_max: int | None = None, budget: float | None = None) -> HuntReport:
    settings = get_settings().hunt
    n_max = n_max if n_max is not None else settings.n_max
    budget = budget if budget is not None else settings.budget_seconds
    if n_max < 2:
        raise OracleError("hunt needs n_max >= 2")
    deadline = time.monotonic() + budget
    candidates: list[HuntCase] = []
    undecided: list[HuntCase] = []
    examined = 0
    partial = False
    for n in range(2, n_max + 1):
        for g, alpha, p in _distinct_permutation_graphs(n):
            if time.monotonic() > deadline:
                partial = True
                break
            case = _decide(g, alpha, p)
            examined += 1
            if case.verdict == "candidate":
                candidates.append(case)
                ledger.record_hunt_candidate(g.to_json(), alpha.to_json(), case.verdict)
            elif case.verdict == "undecided":
                undecided.append(case)
                ledger.record_hunt_candidate(g.to_json(), alpha.to_json(), case.verdict)
        log(f"hunt: n={n} examined={examined} candidates={len(candidates)} undecided={len(undecided)}")
        if partial:
            log(f"hunt: budget of {budget:.0f}s exhausted, results are partial")
            break
    return HuntReport(tuple(candidates), tuple(undecided), examined, partial)
