#!/usr/bin/env python3
"""
DOT rendering of graphs, products and colorings, through networkx's pydot bridge.
"""

from __future__ import annotations

from typing import Hashable

import networkx as nx
import pydot

from tpclab.coloring import TotalColoring
from tpclab.graph import Graph
from tpclab.ops import ProductVertexMap

PALETTE = {
    1: "red",
    2: "blue",
    3: "green",
    4: "orange",
    5: "purple",
    6: "brown",
    7: "magenta",
    8: "cyan",
}
FALLBACK = "gray"


def color_name(color: int) -> str:
    return PALETTE.get(color, FALLBACK)


def _label(labels: ProductVertexMap | None, v: int) -> str:
    if labels is None:
        return str(v)
    lab: Hashable = labels.label(v)
    if isinstance(lab, tuple):
        return "(" + ",".join(str(x) for x in lab) + ")"
    return str(lab)


def to_pydot(
    g: Graph,
    coloring: TotalColoring | None = None,
    labels: ProductVertexMap | None = None,
    name: str = "G",
) -> pydot.Dot:
    nxg = nx.Graph(name=name)
    nxg.graph["node"] = {"shape": "circle", "style": "filled", "fillcolor": "white"}
    for v in range(g.n):
        attrs = {"label": f'"{_label(labels, v)}"'}
        if coloring is not None and coloring.vertex_colors:
            c = coloring.vertex_color(v)
            attrs = {"label": f'"{_label(labels, v)}\\n{c}"', "color": color_name(c), "fillcolor": color_name(c)}
        nxg.add_node(v, **attrs)
    for u, v in g.edge_list:
        if coloring is not None and (u, v) in coloring.edge_colors:
            c = coloring.edge_color(u, v)
            nxg.add_edge(u, v, color=color_name(c), label=f'"{c}"')
        else:
            nxg.add_edge(u, v)
    return nx.nx_pydot.to_pydot(nxg)


def to_dot(
    g: Graph,
    coloring: TotalColoring | None = None,
    labels: ProductVertexMap | None = None,
    name: str = "G",
) -> str:
    return to_pydot(g, coloring, labels, name).to_string()
