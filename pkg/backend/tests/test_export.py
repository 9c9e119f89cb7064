"""
Tests for DOT and JSON exports of the decomposition graph.
"""

import json

import jsonschema
import pytest

from app.config import load_graph_schema
from app.services.decomposition import AUX, graph_to_document, graph_to_dot, write_graph

from conftest import compile_formula

PATROL = "G F pi_1_l1 & G F pi_1_l2"


@pytest.fixture
def patrol_graph():
    return compile_formula(PATROL)


def test_graph_dot(patrol_graph):
    g = patrol_graph
    dot = graph_to_dot(g)
    assert dot.startswith("digraph decomposition {")
    assert '"__start" -> "aux";' in dot
    assert f'"{AUX}" [shape=circle, label="aux d=2"];' in dot
    for node in g.vf:
        assert f'"{node}" [shape=doublecircle' in dot
    assert dot.count("style=dashed") == len(g.accepting_edges)
    assert dot == graph_to_dot(compile_formula(PATROL))


def test_graph_document(patrol_graph):
    g = patrol_graph
    document = graph_to_document(g)
    assert document["initial"] == AUX
    assert [n["name"] for n in document["nodes"]] == list(g.nodes)
    assert sorted(document["accepting_nodes"]) == sorted(g.vf)
    assert len(document["edges"]) == len(g.edges)
    aux = next(n for n in document["nodes"] if n["name"] == AUX)
    assert aux == {"name": AUX, "accepting": False, "dist": 2, "loop_guard": "true"}
    for edge in document["edges"]:
        assert edge["hops"] == len(edge["run"]) - 1
        assert edge["assignments"]


def test_schema_rejects_unknown_fields(patrol_graph):
    document = graph_to_document(patrol_graph)
    document["nodes"][0]["colour"] = "red"
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(instance=document, schema=load_graph_schema())


def test_write_graph(patrol_graph, tmp_path):
    path = tmp_path / "graph.json"
    write_graph(patrol_graph, path)
    assert json.loads(path.read_text()) == graph_to_document(patrol_graph)
