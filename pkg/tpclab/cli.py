#!/usr/bin/env python3
"""
tpclab command line.

Every verb reads and writes JSON bundles so verbs compose through pipes:

    {"graph": {...}, "labels": {...}, "factors": {"op": ..., "g": ..., "h": ..., "alpha": [...]},
     "coloring": {...}}

Only `graph` is required. Results go to stdout, logs to stderr.

Exit codes: 0 ok, 1 verdict failure (check fails, suite member fails),
2 usage or domain error, 3 budget exhausted.

Usage:
  tpclab gen --kind star --leaves 3 | tpclab tpc
  tpclab gen --kind path --n 4 | tpclab product --op cartesian --with star:3 \\
      | tpclab color --theorem cart-star | tpclab check
  tpclab hunt-perm --n-max 4 --budget 120
  tpclab suite all
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any

from tpclab import ledger
from tpclab.checker import PathFlavor, is_total_proper_connected
from tpclab.colorers import THEOREMS, apply_theorem
from tpclab.coloring import TotalColoring
from tpclab.export import to_dot
from tpclab.graph import (
    Graph,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_empty,
    make_path,
    make_spider,
    make_star,
)
from tpclab.helpers import BudgetExhausted, log
from tpclab.ops import (
    Permutation,
    Product,
    ProductKind,
    ProductVertexMap,
    cartesian,
    join,
    lexicographic,
    permutation_graph,
    strong,
)
from tpclab.oracle import HuntBudgetExceeded, brute_force, hunt_permutation_tpc4
from tpclab.settings import SettingsError, load_settings, set_settings
from tpclab.suite import SUITES, run_suite

GRAPH_KINDS = ("path", "star", "complete", "cycle", "bipartite", "empty", "spider")
OPS = ("join", "cartesian", "lex", "strong", "perm")


class UsageError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Bundles
# ---------------------------------------------------------------------------


def _int_list(raw: str, what: str) -> list[int]:
    try:
        return [int(x) for x in raw.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(f"{what} must be comma-separated integers, got {raw!r}") from exc


def make_graph(kind: str, *, n: int | None = None, leaves: int | None = None, m: int | None = None, legs: str | None = None) -> Graph:
    def need(value: int | None, flag: str) -> int:
        if value is None:
            raise UsageError(f"--kind {kind} needs {flag}")
        return value

    if kind == "path":
        return make_path(need(n, "--n"))
    if kind == "star":
        return make_star(need(leaves, "--leaves"))
    if kind == "complete":
        return make_complete(need(n, "--n"))
    if kind == "cycle":
        return make_cycle(need(n, "--n"))
    if kind == "bipartite":
        return make_complete_bipartite(need(m, "--m"), need(n, "--n"))
    if kind == "empty":
        return make_empty(need(n, "--n"))
    if kind == "spider":
        if not legs:
            raise UsageError("--kind spider needs --legs")
        return make_spider(_int_list(legs, "--legs"))
    raise UsageError(f"Unknown graph kind {kind!r}; choose from {', '.join(GRAPH_KINDS)}")


def parse_factor(spec: str) -> Graph:
    """`kind:args` as used by `product --with`: path:4, star:3, complete:3, cycle:5,
    bipartite:2,3, empty:2, spider:2,1,1."""
    kind, _, raw = spec.partition(":")
    kind = kind.strip()
    values = _int_list(raw, f"--with {spec}")
    if kind == "star":
        return make_graph(kind, leaves=values[0] if values else None)
    if kind == "bipartite":
        if len(values) != 2:
            raise UsageError("--with bipartite:M,N needs two sizes")
        return make_graph(kind, m=values[0], n=values[1])
    if kind == "spider":
        return make_graph(kind, legs=raw)
    return make_graph(kind, n=values[0] if values else None)


def build_product(op: str, g: Graph, h: Graph | None = None, alpha: Permutation | None = None) -> Product:
    if op in ("perm", str(ProductKind.PERMUTATION)):
        return permutation_graph(g, alpha if alpha is not None else Permutation.identity(g.n))
    if h is None:
        raise UsageError(f"--op {op} needs a second factor")
    if op == str(ProductKind.JOIN):
        return join(g, h)
    if op == str(ProductKind.CARTESIAN):
        return cartesian(g, h)
    if op in ("lex", str(ProductKind.LEXICOGRAPHIC)):
        return lexicographic(g, h)
    if op == str(ProductKind.STRONG):
        return strong(g, h)
    raise UsageError(f"Unknown operation {op!r}; choose from {', '.join(OPS)}")


def read_bundle(path: str | None) -> dict[str, Any]:
    raw = Path(path).read_text() if path else sys.stdin.read()
    if not raw.strip():
        raise UsageError("no input: pass --graph FILE or pipe a bundle on stdin")
    try:
        payload = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise UsageError(f"input is not JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise UsageError("input JSON must be an object")
    if "graph" not in payload:
        # a bare graph
        payload = {"graph": payload}
    return payload


def bundle_graph(bundle: dict[str, Any]) -> Graph:
    return Graph.from_json(bundle["graph"])


def bundle_product(bundle: dict[str, Any], graph: Graph) -> Product | None:
    factors = bundle.get("factors")
    if not factors:
        return None
    try:
        op = str(factors["op"])
        g = Graph.from_json(factors["g"])
    except KeyError as exc:
        raise UsageError(f"factors block misses {exc}") from exc
    h = Graph.from_json(factors["h"]) if factors.get("h") is not None else None
    alpha = Permutation.from_json(factors["alpha"]) if factors.get("alpha") is not None else None
    product = build_product(op, g, h, alpha)
    if product.graph != graph:
        raise UsageError("factors do not rebuild the bundle's graph")
    return product


def bundle_labels(bundle: dict[str, Any]) -> ProductVertexMap | None:
    labels = bundle.get("labels")
    return ProductVertexMap.from_json(labels) if labels else None


def bundle_coloring(bundle: dict[str, Any], path: str | None) -> TotalColoring:
    if path:
        payload = json.loads(Path(path).read_text())
        if isinstance(payload, dict) and "coloring" in payload:
            payload = payload["coloring"]
    else:
        payload = bundle.get("coloring")
    if payload is None:
        raise UsageError("no coloring: pass --coloring FILE or a bundle with a `coloring` block")
    return TotalColoring.from_json(payload)


def emit(payload: Any) -> None:
    print(json.dumps(payload, ensure_ascii=False, sort_keys=True))


# ---------------------------------------------------------------------------
# Verbs
# ---------------------------------------------------------------------------


def cmd_gen(args: argparse.Namespace) -> int:
    g = make_graph(args.kind, n=args.n, leaves=args.leaves, m=args.m, legs=args.legs)
    emit({"graph": g.to_json()})
    return 0


def cmd_product(args: argparse.Namespace) -> int:
    bundle = read_bundle(args.graph)
    g = bundle_graph(bundle)
    h = parse_factor(args.with_) if args.with_ else None
    alpha = Permutation.from_json(_int_list(args.alpha, "--alpha")) if args.alpha else None
    if args.op != "perm" and alpha is not None:
        raise UsageError("--alpha only applies to --op perm")
    product = build_product(args.op, g, h, alpha)
    if args.labels_out:
        Path(args.labels_out).write_text(json.dumps(product.labels.to_json(), ensure_ascii=False) + "\n")
    log(f"product {product.kind}: n={product.graph.n} m={product.graph.num_edges}")
    emit(product.to_json())
    return 0


def cmd_color(args: argparse.Namespace) -> int:
    bundle = read_bundle(args.graph)
    graph = bundle_graph(bundle)
    outcome = apply_theorem(args.theorem, graph, bundle_product(bundle, graph))
    if outcome.repaired:
        log(f"color {args.theorem}: construction {outcome.construction} needed repair")
    bundle["coloring"] = outcome.coloring.to_json()
    bundle["construction"] = outcome.construction
    bundle["repaired"] = outcome.repaired
    emit(bundle)
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    bundle = read_bundle(args.graph)
    graph = bundle_graph(bundle)
    coloring = bundle_coloring(bundle, args.coloring)
    flavor = PathFlavor.parse(args.flavor)
    coloring.validate(graph, vertices=flavor.uses_vertices, edges=flavor.uses_edges)
    report = is_total_proper_connected(graph, coloring, flavor)
    emit(report.to_json())
    if not report.connected:
        log(f"check: {len(report.failures)} pairs without a {flavor} proper path, first {report.failures[0]}")
        return 1
    return 0


def cmd_tpc(args: argparse.Namespace) -> int:
    bundle = read_bundle(args.graph)
    result = brute_force(bundle_graph(bundle), args.flavor, cap=args.cap)
    log(f"tpc: {result.flavor} value={result.value} in {result.elapsed:.2f}s")
    emit(result.to_json())
    return 0


def cmd_hunt(args: argparse.Namespace) -> int:
    report = hunt_permutation_tpc4(args.n_max, args.budget)
    emit(report.to_json())
    if report.partial:
        raise HuntBudgetExceeded(f"hunt stopped after {report.examined} graphs; results are partial")
    return 0


def cmd_export_dot(args: argparse.Namespace) -> int:
    bundle = read_bundle(args.graph)
    graph = bundle_graph(bundle)
    coloring = bundle_coloring(bundle, args.coloring) if args.coloring or bundle.get("coloring") else None
    text = to_dot(graph, coloring, bundle_labels(bundle), name=args.name)
    if args.out:
        Path(args.out).write_text(text)
        log(f"export-dot: wrote {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_suite(args: argparse.Namespace) -> int:
    reports = run_suite(args.name)
    emit([r.to_json() for r in reports])
    return 1 if any(r.failed for r in reports) else 0


def cmd_ledger(args: argparse.Namespace) -> int:
    for event in ledger.read_events(args.limit, args.type):
        print(json.dumps(event, ensure_ascii=False))
    return 0


COMMANDS = {
    "gen": cmd_gen,
    "product": cmd_product,
    "color": cmd_color,
    "check": cmd_check,
    "tpc": cmd_tpc,
    "hunt-perm": cmd_hunt,
    "export-dot": cmd_export_dot,
    "suite": cmd_suite,
    "ledger": cmd_ledger,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tpclab", description="Total proper connection colorings")
    parser.add_argument("--config", help="YAML config (default: $TPCLAB_CONFIG or config/tpclab.yaml)")
    sub = parser.add_subparsers(dest="cmd", required=True)

    gen = sub.add_parser("gen", help="Emit a generated graph")
    gen.add_argument("--kind", required=True, choices=GRAPH_KINDS)
    gen.add_argument("--n", type=int)
    gen.add_argument("--m", type=int, help="First part size for --kind bipartite")
    gen.add_argument("--leaves", type=int)
    gen.add_argument("--legs", help="Comma-separated leg lengths for --kind spider")

    product = sub.add_parser("product", help="Combine the input graph with a second factor")
    product.add_argument("--graph", help="Input bundle (default: stdin)")
    product.add_argument("--op", required=True, choices=OPS)
    product.add_argument("--with", dest="with_", help="Second factor as kind:args, e.g. star:3")
    product.add_argument("--alpha", help="Permutation for --op perm, e.g. 1,0,2")
    product.add_argument("--labels-out", help="Also write the label map to this file")

    color = sub.add_parser("color", help="Color a bundle with a constructive theorem")
    color.add_argument("--graph", help="Input bundle (default: stdin)")
    color.add_argument("--theorem", required=True, choices=list(THEOREMS))

    check = sub.add_parser("check", help="Check proper connectivity of a colored bundle")
    check.add_argument("--graph", help="Input bundle (default: stdin)")
    check.add_argument("--coloring", help="Coloring file (default: the bundle's coloring)")
    check.add_argument("--flavor", default="total", choices=[str(f) for f in PathFlavor])

    tpc = sub.add_parser("tpc", help="Exact connection number by brute force")
    tpc.add_argument("--graph", help="Input bundle (default: stdin)")
    tpc.add_argument("--flavor", default="total", choices=[str(f) for f in PathFlavor])
    tpc.add_argument("--cap", type=int, help="Element cap (default: oracle.element_cap)")

    hunt = sub.add_parser("hunt-perm", help="Search small permutation graphs with tpc = 4")
    hunt.add_argument("--n-max", type=int)
    hunt.add_argument("--budget", type=float, help="Seconds")

    dot = sub.add_parser("export-dot", help="Render a bundle as DOT")
    dot.add_argument("--graph", help="Input bundle (default: stdin)")
    dot.add_argument("--coloring", help="Coloring file (default: the bundle's coloring)")
    dot.add_argument("--name", default="G")
    dot.add_argument("--out", help="Write to file instead of stdout")

    suite = sub.add_parser("suite", help="Run an acceptance suite")
    suite.add_argument("name", choices=[*SUITES, "all"])

    recent = sub.add_parser("ledger", help="Print recent ledger events")
    recent.add_argument("--limit", type=int, default=20)
    recent.add_argument("--type", help="Only events of this type")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.config:
            set_settings(load_settings(Path(args.config)))
        return COMMANDS[args.cmd](args)
    except BudgetExhausted as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError, SettingsError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
