#!/usr/bin/env python3
"""
Batch checks over the small-graph corpus.

Suites:
- paper-values: exact oracle values for complete graphs, stars, trees and
  small complete bipartite graphs
- colorer-sweep: every family colorer on its input grid, plus oracle
  confirmation of value 3 on the small instances
- inequality-sweep: tpc >= max(pc, pvc) on connected graphs up to 4 vertices
- checker-exactness: the pruned path search against all-simple-paths
  enumeration, and invariance under color renaming
- structural: spanning-subgraph monotonicity, bridge bound, 2-connected bound
- all: every suite above in order

Reports hold no timings, so two runs print identical JSON; timings go to
the log.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Any, Callable, Iterator

import networkx as nx

from tpclab import ledger
from tpclab.checker import PathFlavor, exists_path, exists_path_naive, first_failure
from tpclab.colorers import (
    ColorerError,
    ColorerOutcome,
    color_cartesian_near_star,
    color_cartesian_star,
    color_cartesian_traceable,
    color_join_general,
    color_join_with_k1,
    color_lexicographic,
    color_permutation_star,
    color_permutation_traceable,
    color_strong,
)
from tpclab.coloring import TotalColoring
from tpclab.graph import (
    Graph,
    bridges,
    enumerate_connected_graphs,
    is_biconnected,
    is_complete,
    is_traceable,
    is_tree,
    make_complete,
    make_complete_bipartite,
    make_empty,
    make_path,
    make_spider,
    make_star,
    spanning_tree,
)
from tpclab.helpers import edge_key, log
from tpclab.ops import all_permutations, join, lexicographic, strong
from tpclab.oracle import (
    OracleError,
    brute_force_tpc,
    element_count,
    verify_bridge_bound,
    verify_inequality_star,
    verify_monotonicity,
    verify_tree_value,
    verify_two_connected_bound,
)
from tpclab.settings import get_settings

COLORINGS_PER_GRAPH = 20
MONOTONICITY_PAIRS = 50
BRIDGED_NON_TREES = 10


@dataclass(frozen=True)
class Criterion:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict[str, Any]:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    criteria: tuple[Criterion, ...]

    @property
    def passed(self) -> int:
        return sum(1 for c in self.criteria if c.passed)

    @property
    def failed(self) -> int:
        return len(self.criteria) - self.passed

    def to_json(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "failed": self.failed,
            "criteria": [c.to_json() for c in self.criteria],
        }


def graph_name(g: Graph) -> str:
    return nx.to_graph6_bytes(g.to_networkx(), header=False).decode().strip()


def _connected(n_max: int, n_min: int = 1) -> Iterator[Graph]:
    for n in range(n_min, n_max + 1):
        yield from enumerate_connected_graphs(n, unique=True)


def _value(name: str, got: int, want: int) -> Criterion:
    return Criterion(name, got == want, f"got {got}, want {want}")


def _colorer(name: str, run: Callable[[], ColorerOutcome], *, explicit: bool = False) -> tuple[Criterion, ColorerOutcome | None]:
    try:
        outcome = run()
    except ColorerError as exc:
        return Criterion(name, False, str(exc)), None
    ok = outcome.k == 3 and outcome.verified and not (explicit and outcome.repaired)
    detail = f"k={outcome.k} construction={outcome.construction} repaired={outcome.repaired}"
    return Criterion(name, ok, detail), outcome


def _oracle_three(name: str, outcome: ColorerOutcome | None) -> Criterion:
    if outcome is None:
        return Criterion(name, False, "no coloring to confirm")
    try:
        value = brute_force_tpc(outcome.graph, hint=outcome.coloring).value
    except OracleError as exc:
        return Criterion(name, False, str(exc))
    return _value(name, value, 3)


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------


def paper_values() -> list[Criterion]:
    out = [_value(f"tpc(K_{n})", brute_force_tpc(make_complete(n)).value, 1) for n in (3, 4)]
    out += [_value(f"tpc(K_1,{m})", brute_force_tpc(make_star(m)).value, m + 1) for m in (2, 3)]
    for g in _connected(7, n_min=3):
        if is_tree(g):
            verdict = verify_tree_value(g)
            out.append(Criterion(f"tree {graph_name(g)}", verdict.holds, f"{verdict.values}"))
    out += [_value(f"tpc(K_2,{n})", brute_force_tpc(make_complete_bipartite(2, n)).value, 3) for n in (2, 3)]
    return out


def _join_grid() -> list[Criterion]:
    out = []
    for g in _connected(5, n_min=3):
        if not is_complete(g):
            out.append(_colorer(f"join-k1 {graph_name(g)}", lambda g=g: color_join_with_k1(g), explicit=True)[0])
    small = list(_connected(3, n_min=2))
    for g, h in itertools.product(small, small):
        if not is_complete(join(g, h).graph):
            out.append(_colorer(f"join {graph_name(g)} {graph_name(h)}", lambda g=g, h=h: color_join_general(g, h))[0])
    return out


def _cartesian_grid() -> list[Criterion]:
    out = []
    traceable = [g for g in _connected(4, n_min=2) if is_traceable(g)]
    for g, h in itertools.product(traceable, traceable):
        name = f"cart-trace {graph_name(g)} {graph_name(h)}"
        out.append(_colorer(name, lambda g=g, h=h: color_cartesian_traceable(g, h))[0])
    for n, s in itertools.product((2, 3, 4), (3, 4)):
        name = f"cart-star P_{n} K_1,{s}"
        out.append(_colorer(name, lambda n=n, s=s: color_cartesian_star(make_path(n), make_star(s)), explicit=True)[0])
    spider = make_spider([2, 1, 1])
    for n in range(2, 8):
        name = f"cart-near-star P_{n} spider"
        out.append(_colorer(name, lambda n=n: color_cartesian_near_star(make_path(n), spider), explicit=True)[0])
    return out


def _permutation_grid() -> list[Criterion]:
    out = []
    for n in (3, 4):
        for alpha in all_permutations(n):
            name = f"perm-trace P_{n} {alpha.to_json()}"
            criterion, outcome = _colorer(name, lambda n=n, alpha=alpha: color_permutation_traceable(make_path(n), alpha))
            out.append(criterion)
            if n == 3:
                out.append(_oracle_three(f"oracle {name}", outcome))
    for m in (3, 4, 5):
        out.append(_colorer(f"perm-star identity m={m}", lambda m=m: color_permutation_star(m, "identity"))[0])
        out.append(
            _colorer(
                f"perm-star transposition m={m}",
                lambda m=m: color_permutation_star(m, "transposition01"),
                explicit=True,
            )[0]
        )
    return out


def _lexicographic_grid() -> list[Criterion]:
    out = []
    factors = {"E2": make_empty(2), "E3": make_empty(3), "K2": make_complete(2), "P3": make_path(3)}
    for g in _connected(4, n_min=2):
        for label, h in factors.items():
            if is_complete(lexicographic(g, h).graph):
                continue
            name = f"lex {graph_name(g)} {label}"
            criterion, outcome = _colorer(name, lambda g=g, h=h: color_lexicographic(g, h), explicit=True)
            out.append(criterion)
            if g.n * h.n <= 8:
                out.append(_oracle_three(f"oracle {name}", outcome))
    return out


def _strong_grid() -> list[Criterion]:
    out = []
    small = list(_connected(3, n_min=2))
    pairs = list(itertools.product(small, small)) + [(make_star(3), make_path(3))]
    for g, h in pairs:
        if is_complete(strong(g, h).graph):
            continue
        name = f"strong {graph_name(g)} {graph_name(h)}"
        criterion, outcome = _colorer(name, lambda g=g, h=h: color_strong(g, h))
        out.append(criterion)
        if g.n * h.n <= 6:
            out.append(_oracle_three(f"oracle {name}", outcome))
    return out


def colorer_sweep() -> list[Criterion]:
    return _join_grid() + _cartesian_grid() + _permutation_grid() + _lexicographic_grid() + _strong_grid()


def inequality_sweep() -> list[Criterion]:
    return [Criterion(f"tpc>=max(pc,pvc) {graph_name(g)}", verify_inequality_star(g)) for g in _connected(4)]


def pseudo_coloring(g: Graph, index: int) -> TotalColoring:
    """Deterministic 3-coloring number `index` of g's vertices and edges."""
    values = [(i * (2 * index + 1) + index * (i // 3) + index) % 3 + 1 for i in range(g.n + g.num_edges)]
    return TotalColoring.from_assignment(g, 3, values)


def checker_exactness(n_max: int | None = None) -> list[Criterion]:
    n_max = n_max if n_max is not None else get_settings().enumeration.max_vertices
    rename = {1: 2, 2: 3, 3: 1}
    out = []
    for g in _connected(n_max, n_min=2):
        disagreements = 0
        invariance_breaks = 0
        for index in range(COLORINGS_PER_GRAPH):
            c = pseudo_coloring(g, index)
            for u, v in itertools.combinations(range(g.n), 2):
                fast = exists_path(g, c, u, v) is not None
                slow = exists_path_naive(g, c, u, v) is not None
                disagreements += fast != slow
            if (first_failure(g, c) is None) != (first_failure(g, c.permuted(rename)) is None):
                invariance_breaks += 1
        out.append(
            Criterion(
                f"checker {graph_name(g)}",
                disagreements == 0 and invariance_breaks == 0,
                f"disagreements={disagreements} invariance_breaks={invariance_breaks}",
            )
        )
    return out


def monotonicity_pairs(limit: int = MONOTONICITY_PAIRS) -> list[tuple[Graph, Graph]]:
    """Connected graphs on 2..5 vertices, each paired with its BFS tree and
    then with itself minus one non-bridge edge, first `limit` pairs."""
    cap = get_settings().oracle.element_cap
    graphs = [g for g in _connected(5, n_min=2) if is_complete(g) or element_count(g, PathFlavor.TOTAL) <= cap]
    pairs = [(g, spanning_tree(g, strategy="bfs").tree) for g in graphs]
    for g, tree in list(pairs):
        cut = {edge_key(u, v) for u, v in bridges(g)}
        for e in g.edge_list:
            if e in cut:
                continue
            sub = g.spanning_subgraph(f for f in g.edge_list if f != e)
            if sub != tree:
                pairs.append((g, sub))
                break
    return pairs[:limit]


def structural() -> list[Criterion]:
    cap = get_settings().oracle.element_cap
    out = [
        Criterion(f"monotone {graph_name(g)} over {graph_name(sub)}", verify_monotonicity(g, sub))
        for g, sub in monotonicity_pairs()
    ]
    bridged = 0
    for g in _connected(6, n_min=3):
        if is_tree(g):
            out.append(Criterion(f"bridge-bound tree {graph_name(g)}", verify_bridge_bound(g)))
        elif bridged < BRIDGED_NON_TREES and bridges(g) and element_count(g, PathFlavor.TOTAL) <= cap:
            out.append(Criterion(f"bridge-bound {graph_name(g)}", verify_bridge_bound(g)))
            bridged += 1
    for g in _connected(5, n_min=3):
        if is_biconnected(g) and (is_complete(g) or element_count(g, PathFlavor.TOTAL) <= cap):
            verdict = verify_two_connected_bound(g)
            out.append(Criterion(f"two-connected {graph_name(g)}", verdict.holds, f"{verdict.values}"))
    return out


SUITES: dict[str, Callable[[], list[Criterion]]] = {
    "paper-values": paper_values,
    "colorer-sweep": colorer_sweep,
    "inequality-sweep": inequality_sweep,
    "checker-exactness": checker_exactness,
    "structural": structural,
}


def run_suite(name: str) -> list[SuiteReport]:
    if name == "all":
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise ValueError(f"Unknown suite {name!r}; choose from {', '.join([*SUITES, 'all'])}")
    reports = []
    for suite_name in names:
        started = time.perf_counter()
        report = SuiteReport(suite_name, tuple(SUITES[suite_name]()))
        log(f"suite {suite_name}: passed={report.passed} failed={report.failed} in {time.perf_counter() - started:.1f}s")
        for criterion in report.criteria:
            if not criterion.passed:
                log(f"  FAIL {criterion.name}: {criterion.detail}")
        ledger.record_suite(suite_name, report.passed, report.failed)
        reports.append(report)
    return reports
