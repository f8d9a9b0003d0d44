from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given

from chibound import Graph, from_dimacs, from_graph6, make_pattern, to_dimacs, to_graph6
from chibound.io import read_graph

import oracles as O
from strategies import graphs


@given(graphs(0, 20))
def test_graph6_round_trip(G):
    assert from_graph6(to_graph6(G)) == G


@given(graphs(0, 12))
def test_graph6_agrees_with_networkx(G):
    ours = to_graph6(G)
    theirs = nx.to_graph6_bytes(O.to_nx(G), header=False).decode().strip()
    assert ours == theirs


def test_graph6_known_strings():
    assert to_graph6(make_pattern("petersen")) == "IheA@GUAo"
    assert to_graph6(Graph.complete(5)) == "D~{"
    assert from_graph6(">>graph6<<D~{") == Graph.complete(5)


def test_graph6_large_size_field():
    G = Graph.empty(70)
    text = to_graph6(G)
    assert text.startswith("~")
    assert from_graph6(text) == G


@pytest.mark.parametrize("bad", ["", "D~", ":Fa@x^", "D~{{", "B~"])
def test_graph6_rejects_malformed(bad):
    with pytest.raises(ValueError):
        from_graph6(bad)


@given(graphs(0, 12))
def test_dimacs_round_trip(G):
    assert from_dimacs(to_dimacs(G, comment="x")) == G


def test_dimacs_parsing_details():
    text = "c hello\np edge 3 3\ne 1 2\ne 2 1\ne 2 3\n"
    assert from_dimacs(text).edges() == [(0, 1), (1, 2)]
    for bad in ("e 1 2\n", "p edge 2 1\ne 1 1\n", "p edge 2 1\nx 1\n", "c only\n"):
        with pytest.raises(ValueError):
            from_dimacs(bad)


def test_read_graph(tmp_path):
    p = tmp_path / "k5.g6"
    p.write_text("D~{\n")
    assert read_graph(p) == Graph.complete(5)
    d = tmp_path / "k2.col"
    d.write_text("p edge 2 1\ne 1 2\n")
    assert read_graph(d, "dimacs") == Graph.complete(2)
    p.write_text("D~{\nD~{\n")
    with pytest.raises(ValueError):
        read_graph(p)
