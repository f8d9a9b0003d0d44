from __future__ import annotations

import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from chibound import (
    CapExceededError, CertificateError, Graph, SearchTimeout, WeightedOrientedTree,
    WillowCertificate, builtin_certificate, lift_modulus, make_pattern, search_certificate,
    verify_certificate,
)
from chibound.graph import disjoint_union
from chibound.willow import certificate_graph, directed_path_multipartite

import oracles as O


def cert(nodes, arcs, embedding, n) -> WillowCertificate:
    return WillowCertificate(WeightedOrientedTree(nodes, tuple(arcs)), tuple(embedding), n)


K2_K1 = disjoint_union(Graph.complete(2), Graph.empty(1))
P8BAR = make_pattern("comp-path:8")


# ------------------------------------------------------------------ verification

def test_verify_examples():
    assert verify_certificate(P8BAR, builtin_certificate("p8bar", 5)) == (True, None)
    assert verify_certificate(Graph.complete(3), cert(3, [(0, 1, 1), (1, 2, 1)], range(3), 3))[0]
    assert verify_certificate(K2_K1, cert(3, [(0, 1, 1), (0, 2, 2)], range(3), 2))[0]


def test_verify_reports_least_violating_pair():
    c = builtin_certificate("p8bar", 5)
    arcs = list(c.tree.arcs)
    t, h, w = arcs[0]
    arcs[0] = (t, h, w + 1)
    bad = cert(c.tree.nodes, arcs, c.embedding, 5)
    ok, witness = verify_certificate(P8BAR, bad)
    H = O.certificate_graph_oracle(bad.tree.nodes, arcs, bad.embedding, 5)
    diff = [(u, v) for u in range(8) for v in range(u + 1, 8)
            if O.adjacent(P8BAR, u, v) != O.adjacent(H, u, v)]
    assert not ok and witness.mapping == diff[0] and witness.kind == "violation"


def test_verify_rejects_wrong_size():
    with pytest.raises(CertificateError):
        verify_certificate(Graph.complete(4), builtin_certificate("complete", 3, 3))


@given(st.integers(0, 100_000))
def test_certificate_graph_round_trip(seed):
    nodes, arcs, emb, n = O.random_certificate_parts(random.Random(seed))
    c = cert(nodes, arcs, emb, n)
    G = O.certificate_graph_oracle(nodes, arcs, emb, n)
    assert certificate_graph(c) == G
    assert verify_certificate(G, c) == (True, None)


# ------------------------------------------------------------------ certificate objects

def test_tree_validation():
    with pytest.raises(CertificateError):
        WeightedOrientedTree(3, ((0, 1, 1),))
    with pytest.raises(CertificateError):
        WeightedOrientedTree(3, ((0, 1, 1), (1, 0, 1)))
    with pytest.raises(CertificateError):
        WeightedOrientedTree(2, ((0, 1, 0),))
    with pytest.raises(CertificateError):
        cert(2, [(0, 1, 1)], [0, 0], 2)
    with pytest.raises(CertificateError):
        cert(2, [(0, 1, 1)], [0, 1], 0)


def test_json_round_trip_and_schema_errors():
    c = builtin_certificate("c6bar", 6)
    assert WillowCertificate.from_json(c.to_json()) == c
    doc = json.loads(c.to_json())
    assert WillowCertificate.from_json(doc) == c
    for broken in ({"nodes": 1}, {**doc, "embedding": {"1": 0}}, {**doc, "arcs": [[0, 1]]}):
        with pytest.raises(CertificateError):
            WillowCertificate.from_json(broken)


# ------------------------------------------------------------------ built-ins

def test_p8bar_arc_labels():
    weights = [w for _, _, w in builtin_certificate("p8bar", 5).tree.arcs]
    n = 5
    assert weights == [n - 1, 1, n - 2, 1, n - 1, 3, 3]


def test_complete_builtin_is_a_unit_path():
    c = builtin_certificate("complete", 4, 4)
    assert c.tree.nodes == 4 and c.tree.arcs == ((0, 1, 1), (1, 2, 1), (2, 3, 1))
    assert verify_certificate(Graph.complete(4), c)[0]


@pytest.mark.parametrize("length", [18, 19])
def test_long_cycle_certificates(length):
    c = builtin_certificate("cycle", 4, length)
    assert verify_certificate(make_pattern(f"cycle:{length}"), c)[0]
    assert c.tree.nodes > length


@pytest.mark.parametrize("name, graph", [("f6", "fan:6"), ("w6", "wheel:6")])
def test_fan_and_wheel_certificates(name, graph):
    assert verify_certificate(make_pattern(graph), builtin_certificate(name, 5))[0]


def test_builtin_argument_checks():
    for args in (("p8bar", 4), ("f6", 6), ("cycle", 4, 2), ("cycle", 3, 7), ("complete", 4, 3), ("x", 5)):
        with pytest.raises(ValueError):
            builtin_certificate(*args)


BUILTIN_CASES = (
    [(name, n, None, g) for name, g in (("p8bar", "comp-path:8"), ("c5bar", "comp-cycle:5"),
                                        ("c6bar", "comp-cycle:6")) for n in (5, 6, 7)]
    + [("cycle", n, L, f"cycle:{L}") for n in (4, 5) for L in (3, 4, 5, 8, 11, 20)]
    + [("f6", 5, None, "fan:6"), ("w6", 5, None, "wheel:6"), ("complete", 5, 5, "complete:5")]
)


@pytest.mark.parametrize("name, n, length, graph", BUILTIN_CASES)
def test_embedded_vertices_on_directed_paths_are_complete_multipartite(name, n, length, graph):
    G = make_pattern(graph)
    c = builtin_certificate(name, n, length)
    assert directed_path_multipartite(G, c)
    where = {x: v for v, x in enumerate(c.embedding)}
    for path in c.tree.maximal_directed_paths():
        vs = [where[x] for x in path if x in where]
        for a in vs:
            for b in vs:
                for d in vs:
                    if len({a, b, d}) == 3:
                        # non-adjacency is transitive on the path
                        assert not (not O.adjacent(G, a, b) and not O.adjacent(G, b, d)
                                    and O.adjacent(G, a, d))


# ------------------------------------------------------------------ lifting the modulus

@pytest.mark.parametrize("name, graph", [("p8bar", "comp-path:8"), ("c5bar", "comp-cycle:5"),
                                         ("c6bar", "comp-cycle:6")])
@pytest.mark.parametrize("n", [5, 6, 7])
def test_lift_modulus_keeps_builtins_valid(name, graph, n):
    lifted = lift_modulus(builtin_certificate(name, n))
    assert lifted.modulus == n + 1
    assert verify_certificate(make_pattern(graph), lifted)[0]
    assert all(1 <= w <= n + 1 for _, _, w in lifted.tree.arcs)


@given(st.integers(0, 100_000))
def test_lift_modulus_preserves_the_graph(seed):
    nodes, arcs, emb, n = O.random_certificate_parts(random.Random(seed))
    c = cert(nodes, arcs, emb, n)
    G = O.certificate_graph_oracle(nodes, arcs, emb, n)
    lifted = lift_modulus(c)
    assert O.certificate_graph_oracle(nodes, lifted.tree.arcs, emb, n + 1).adj == G.adj


# ------------------------------------------------------------------ bounded search

def test_search_finds_small_example():
    c = search_certificate(K2_K1, 2, 1)
    assert c is not None and verify_certificate(K2_K1, c)[0]


def test_every_graph_on_at_most_4_vertices_is_found():
    for G in O.atlas_upto(4):
        if G.n == 0:
            continue
        c = search_certificate(G, 4, 2)
        assert c is not None and verify_certificate(G, c)[0]
        assert directed_path_multipartite(G, c)


@pytest.mark.parametrize("spec, n", [("cycle:6", 4), ("comp-cycle:5", 5), ("fan:6", 5), ("complete:5", 5)])
def test_search_finds_known_willows(spec, n):
    G = make_pattern(spec)
    c = search_certificate(G, n, 2)
    assert c is not None and verify_certificate(G, c)[0]


@settings(max_examples=25)
@given(st.integers(0, 100_000))
def test_search_refinds_random_certificates(seed):
    rng = random.Random(seed)
    while True:
        nodes, arcs, emb, n = O.random_certificate_parts(rng, max_nodes=7, max_mod=4)
        steiner = nodes - len(emb)
        if steiner <= 2 and len(emb) >= 2:
            break
    G = O.certificate_graph_oracle(nodes, arcs, emb, n)
    c = search_certificate(G, n, 2)
    assert c is not None and verify_certificate(G, c)[0]


@pytest.mark.parametrize("n", [2, 3])
def test_pentagram_spider_absent_at_small_moduli(n):
    assert search_certificate(make_pattern("pentagram_spider_base"), n, 3) is None


def test_search_limits():
    with pytest.raises(CapExceededError):
        search_certificate(Graph.empty(13), 3, 1)
    with pytest.raises(CapExceededError):
        search_certificate(Graph.empty(3), 3, 7)
    with pytest.raises(SearchTimeout):
        search_certificate(make_pattern("pentagram_spider_base"), 5, 3, timeout=0.0)
    with pytest.raises(ValueError):
        search_certificate(Graph.empty(3), 0, 1)
