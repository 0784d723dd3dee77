import io
import json
import re

import jsonschema
import networkx as nx
import pytest

from planar_cayley.builder import build_entry
from planar_cayley.embedding import embed
from planar_cayley.export import export, graph_to_json, to_dot, to_graphml, to_json

GRAPH_SCHEMA = {
    "type": "object",
    "required": ["alphabet", "root", "vertices", "darts", "boundary"],
    "properties": {
        "alphabet": {
            "type": "array",
            "items": {"type": "object", "required": ["symbol", "involution"],
                      "properties": {"symbol": {"type": "string"}, "involution": {"type": "boolean"}}},
        },
        "root": {"type": "integer"},
        "vertices": {"type": "array", "items": {"type": "integer"}},
        "darts": {
            "type": "array",
            "items": {"type": "object", "required": ["tail", "head", "color", "dir"],
                      "properties": {"dir": {"enum": [-1, 0, 1]}}},
        },
        "boundary": {"type": "array", "items": {"type": "integer"}},
        "rotation": {"type": "array"},
    },
    "additionalProperties": False,
}


def test_json_schema_and_counts(prism):
    data = json.loads(to_json(prism))
    jsonschema.validate(data, GRAPH_SCHEMA)
    assert len(data["vertices"]) == 6 and len(data["darts"]) == 18 and data["boundary"] == []


def test_json_with_rotation(prism):
    rot = embed(prism, {"a": "preserve", "b": "preserve"})[1]
    data = graph_to_json(prism, rot)
    jsonschema.validate(data, GRAPH_SCHEMA)
    assert all(len(c) == 3 for c in data["rotation"])


def test_json_is_canonical(prism):
    text = to_json(prism)
    assert text == to_json(prism) and text.endswith("\n")
    assert text == json.dumps(json.loads(text), sort_keys=True, indent=2) + "\n"


def test_graphml_attributes(prism):
    h = nx.read_graphml(io.BytesIO(to_graphml(prism).encode()))
    edges = list(h.edges(data=True))
    assert len(edges) == 9
    assert {(d["gen"], d["dir"]) for _, _, d in edges} == {("a", "forward"), ("b", "none")}


def test_dot_arrowheads(prism):
    text = to_dot(prism)
    assert len(re.findall(r"^\s+\d+( \[shape=circle, label=\"1\"\])?;$", text, re.MULTILINE)) == 6
    assert all("dir=forward" in line for line in text.splitlines() if 'gen="a"' in line)
    assert all("dir=none" in line for line in text.splitlines() if 'gen="b"' in line)


def test_ball_boundary_exported():
    g = build_entry("AIa2i", {"n": 3, "m": 2}, 3).graph
    assert json.loads(export(g, "json"))["boundary"] == sorted(g.boundary)


def test_unknown_format(prism):
    with pytest.raises(ValueError):
        export(prism, "svg")
