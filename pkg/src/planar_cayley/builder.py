"""Graph builders: coset enumeration, tilings, colour operations, amalgamations.

``build_entry`` runs the geometric recipe stored with a catalogue row and
falls back to coset enumeration when a row has none.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Any

from .amalgamation import (
    AmalgamationResult,
    AuxiliaryTooSmall,
    GluingError,
    MetaedgeMap,
    amalgamate,
    metaedge_substitution_builder,
    mohar_amalgamation,
    twist_squeeze_amalgamation,
)
from .catalog import (
    Entry,
    eval_expr,
    expand,
    get_entry,
    instantiate_entry,
    pattern_decomposition,
    validate_params,
)
from .enumeration import BallSpec, BudgetExceeded, build_ball, build_finite
from .graph import ColoredGraph, ColorLabel
from .operations import flip_alternate_orientation, parity_recolor
from .presentation import Presentation
from .tilings import hex_strip, truncated_tiling

__all__ = [
    "AmalgamationResult",
    "AuxiliaryTooSmall",
    "BallSpec",
    "BudgetExceeded",
    "BuiltGraph",
    "GluingError",
    "MetaedgeMap",
    "build_ball",
    "build_entry",
    "build_finite",
    "build_presentation",
    "build_truncated_tiling",
    "flip_alternate_orientation",
    "hex_strip_builder",
    "metaedge_substitution_builder",
    "mohar_amalgamation",
    "parity_recolor",
    "twist_squeeze_amalgamation",
]


@dataclass
class BuiltGraph:
    """A built graph with the method that produced it."""

    graph: ColoredGraph
    radius: int | None
    method: str
    meta: dict = field(default_factory=dict)

    @property
    def finite(self) -> bool:
        return self.graph.is_finite_complete


def build_truncated_tiling(n: int, m: int, radius: int | None = None) -> ColoredGraph:
    """Cayley graph of ``<a, b | b^2, a^n, (ab)^m>`` from the ``{m, n}`` tiling."""
    return truncated_tiling(n, m, radius)


def hex_strip_builder(count: int, alternate: bool = False, coloring: str = "two", radius: int = 8) -> ColoredGraph:
    """Brick-wall strip with ``count`` rays; see :func:`tilings.hex_strip`."""
    return hex_strip(count, alternate, coloring, radius)


def build_presentation(p: Presentation, radius: int, budget: int = 2_000_000, strategy: str = "felsch") -> BuiltGraph:
    """Whole Cayley graph if enumeration closes, else a certified ball."""
    ball = build_ball(p, BallSpec(radius, coset_budget=budget, strategy=strategy))
    g = ball.graph
    cert = ball.certificate
    meta = {"strategy": strategy, "complete": bool(ball.meta.get("complete"))}
    if cert is not None:
        meta.update(horizon=cert.horizon, stable=cert.stable)
    return BuiltGraph(g, None if g.is_finite_complete else radius, "enumeration", meta)


def _int_args(args: Mapping[str, str], params: Mapping[str, Any]) -> dict[str, int]:
    return {k: int(eval_expr(v, params)) for k, v in args.items()}


def _aux_params(entry: Entry, params: Mapping[str, Any]) -> dict[str, Any]:
    """Row parameters plus the pattern pieces ``A``, ``Z`` and ``N``."""
    out = dict(params)
    if "P" in params:
        dec = pattern_decomposition(params)
        out.update(A=dec.A, Z=dec.Z, N=dec.n)
    return out


def _aux_presentation(aux: Mapping[str, Any], params: Mapping[str, Any]) -> Presentation:
    gens = tuple(ColorLabel(s, s in aux["involutions"]) for s in aux["generators"])
    inv = frozenset(aux["involutions"])
    rel = tuple(w for w in (expand(t, params, aux["generators"], inv) for t in aux["relators"]) if w)
    return Presentation(gens, rel, ())


def _aux_graph(aux: Mapping[str, Any], params: Mapping[str, Any], radius: int) -> ColoredGraph:
    kind = aux.get("kind", "enumeration")
    if kind in ("truncated_tiling", "flip_tiling"):
        a = _int_args(aux["args"], params)
        try:
            g = truncated_tiling(a["n"], a["m"], radius)
        except ValueError:
            g = None
        if g is not None:
            if kind == "flip_tiling":
                g = flip_alternate_orientation(g)
            return g.recolor(aux.get("rename", {}))
    p = _aux_presentation(aux, params)
    return build_ball(p, BallSpec(radius, certify=False)).graph


def _metaedge_map(entry: Entry, recipe: Mapping[str, Any], params: Mapping[str, Any]) -> MetaedgeMap:
    aux = recipe["aux"]
    asyms = aux["generators"]
    ainv = frozenset(aux["involutions"])
    sub = {s: expand(t, params, entry.generators, entry.involutions) for s, t in recipe["substitution"].items()}
    glue = tuple(expand(t, params, asyms, ainv) for t in recipe["glue"])
    target = tuple(ColorLabel(s, s in entry.involutions) for s in entry.generators)
    return MetaedgeMap(sub, glue, target)


def _amalgamation(entry: Entry, recipe: Mapping[str, Any], params: Mapping[str, Any], radius: int) -> BuiltGraph:
    params = _aux_params(entry, params)
    mm = _metaedge_map(entry, recipe, params)
    r2 = radius + 4
    for _ in range(8):
        g2 = _aux_graph(recipe["aux"], params, r2)
        try:
            res = amalgamate(g2, mm, radius)
        except AuxiliaryTooSmall:
            r2 += 3
            continue
        meta = {"tag": recipe["tag"], "aux_radius": r2, "copies": res.copies, "aux_vertices": res.aux_vertices}
        return BuiltGraph(res.graph, radius, recipe["tag"], meta)
    raise AuxiliaryTooSmall(f"{entry.name}: auxiliary ball of radius {r2} still too small")


def build_entry(
    entry_id: str | int | Entry,
    params: Mapping[str, Any] | None = None,
    radius: int = 6,
    budget: int = 2_000_000,
    method: str = "auto",
) -> BuiltGraph:
    """Build a catalogue row.

    ``method="auto"`` uses the row's geometric recipe; ``"enumeration"`` forces
    coset enumeration of the instantiated presentation.
    """
    e = get_entry(entry_id)
    p = validate_params(e, params or {})
    recipe = e.recipe
    tag = recipe.get("tag", "enumeration")
    if method == "enumeration" or tag == "enumeration":
        return build_presentation(instantiate_entry(e, p), radius, budget)
    if tag == "truncated_tiling":
        a = _int_args(recipe["args"], p)
        g = truncated_tiling(a["n"], a["m"], radius)
        return BuiltGraph(g, None if g.is_finite_complete else radius, tag, {})
    if tag in ("flip", "parity_recolor"):
        core = get_entry(recipe["core"])
        sub = build_entry(core, _int_args(recipe["args"], p), radius, budget)
        g = flip_alternate_orientation(sub.graph) if tag == "flip" else parity_recolor(sub.graph)
        return BuiltGraph(g, sub.radius, f"{tag}({core.name})", dict(sub.meta))
    if tag == "hex_strip":
        count = int(eval_expr(recipe["count"], p))
        g = hex_strip(count, recipe.get("alternate", False), recipe.get("coloring", "two"), radius)
        return BuiltGraph(g, radius, tag, {"count": count})
    if tag in ("mohar", "twist_squeeze", "metaedge_substitution"):
        return _amalgamation(e, recipe, p, radius)
    raise ValueError(f"unknown recipe {tag!r}")
