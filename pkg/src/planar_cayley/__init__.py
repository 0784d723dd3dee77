"""Planar cubic Cayley graphs: presentations, builders, embeddings and checks.

The most used entry points are re-exported here; each submodule documents
its own API.
"""

from .analysis import (
    VerificationReport,
    connectivity_estimate,
    cycle_space_check,
    ends_estimate,
    euler_curvature_check,
    find_dividing_cycle,
    find_hinges,
    macay_precondition_check,
    verify_graph,
    verify_relators,
)
from .builder import BallSpec, build_ball, build_entry, build_presentation
from .catalog import classify, expected_report, get_entry, instantiate_entry, rows
from .embedding import embed, planarity_verify
from .export import to_dot, to_graphml, to_json
from .graph import ColoredGraph, ColorLabel, rooted_canonical_form, sabidussi_check
from .patterns import decompose_AZ, enumerate_noncrossing, is_noncrossing, is_regular
from .presentation import Presentation, parse_presentation

__version__ = "0.1.0"

__all__ = [
    "BallSpec",
    "ColorLabel",
    "ColoredGraph",
    "Presentation",
    "VerificationReport",
    "build_ball",
    "build_entry",
    "build_presentation",
    "classify",
    "connectivity_estimate",
    "cycle_space_check",
    "decompose_AZ",
    "embed",
    "ends_estimate",
    "enumerate_noncrossing",
    "euler_curvature_check",
    "expected_report",
    "find_dividing_cycle",
    "find_hinges",
    "get_entry",
    "instantiate_entry",
    "is_noncrossing",
    "is_regular",
    "macay_precondition_check",
    "parse_presentation",
    "planarity_verify",
    "rooted_canonical_form",
    "rows",
    "sabidussi_check",
    "to_dot",
    "to_graphml",
    "to_json",
    "verify_graph",
    "verify_relators",
]
