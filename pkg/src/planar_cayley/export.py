"""Serialisation of coloured graphs to JSON, DOT and GraphML."""

from __future__ import annotations

import io
import json

import networkx as nx

from .embedding import RotationSystem
from .graph import ColoredGraph

FORMATS = ("dot", "graphml", "json")

_PALETTE = ("red", "blue", "darkgreen", "orange", "purple", "brown")


def graph_to_json(g: ColoredGraph, rotation: RotationSystem | None = None) -> dict:
    """Plain-data form of a coloured graph.

    Each dart is listed once per direction it can be traversed, so an
    involution edge appears as two darts with ``dir`` 0.
    """
    out = {
        "alphabet": [{"symbol": c.symbol, "involution": c.involution} for c in g.colors],
        "root": g.root,
        "vertices": list(range(len(g))),
        "darts": [{"tail": d.tail, "head": d.head, "color": d.color, "dir": d.dir} for d in g.darts()],
        "boundary": sorted(g.boundary),
    }
    if rotation is not None:
        out["rotation"] = [
            [{"color": g.letters[li][0], "dir": 0 if g.letters[li][0] in g.involutions else g.letters[li][1]} for li in cyc]
            for cyc in rotation.order
        ]
    return out


def dumps_json(data: object) -> str:
    """Deterministic JSON text: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def to_json(g: ColoredGraph, rotation: RotationSystem | None = None) -> str:
    return dumps_json(graph_to_json(g, rotation))


def to_dot(g: ColoredGraph, name: str = "G") -> str:
    """DOT text; arrowheads are drawn only on non-involution edges."""
    colour = {s: _PALETTE[i % len(_PALETTE)] for i, s in enumerate(g.symbols)}
    lines = [f'digraph "{name}" {{', "  node [shape=point];"]
    for v in range(len(g)):
        attrs = ' [shape=circle, label="1"]' if v == g.root else ""
        lines.append(f"  {v}{attrs};")
    for u, v, s in g.edges():
        arrow = "none" if s in g.involutions else "forward"
        lines.append(f'  {u} -> {v} [label="{s}", gen="{s}", color="{colour[s]}", dir={arrow}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_networkx(g: ColoredGraph) -> nx.MultiDiGraph:
    h = nx.MultiDiGraph(root=g.root)
    for v in range(len(g)):
        h.add_node(v, boundary=v in g.boundary)
    for u, v, s in g.edges():
        h.add_edge(u, v, gen=s, dir="none" if s in g.involutions else "forward")
    return h


def to_graphml(g: ColoredGraph) -> str:
    buf = io.BytesIO()
    nx.write_graphml(to_networkx(g), buf)
    return buf.getvalue().decode("utf-8")


def export(g: ColoredGraph, fmt: str, rotation: RotationSystem | None = None) -> str:
    if fmt == "json":
        return to_json(g, rotation)
    if fmt == "dot":
        return to_dot(g)
    if fmt == "graphml":
        return to_graphml(g)
    raise ValueError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
