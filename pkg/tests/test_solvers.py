from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given

from chibound import (
    CapExceededError, Graph, SearchTimeout, chi_upto, chromatic_number, clique_number, complement,
    contains_induced, is_k_perfect, is_perfect, make_pattern, max_clique,
)
from chibound.solvers import dsatur_coloring, find_odd_hole

import oracles as O
from strategies import graphs

C5 = make_pattern("cycle:5")
C7bar = complement(make_pattern("cycle:7"))
PETERSEN = make_pattern("petersen")
K5 = Graph.complete(5)


# ------------------------------------------------------------------ cliques

def test_max_clique_examples():
    K = max_clique(make_pattern("pineapple:7,5"))
    assert K == frozenset(range(7))
    K = max_clique(PETERSEN)
    assert len(K) == 2 and PETERSEN.has_edge(*sorted(K))
    assert K == min(frozenset(e) for e in PETERSEN.edges())
    assert len(max_clique(C7bar)) == 3
    assert max_clique(Graph.empty(0)) == frozenset()


@given(graphs(0, 9))
def test_max_clique_is_least_maximum_clique(G):
    K = max_clique(G)
    omega = O.brute_clique_number(G)
    assert len(K) == omega and O.is_clique(G, sorted(K))
    if omega:
        least = min(S for S in combinations(range(G.n), omega) if O.is_clique(G, S))
        assert tuple(sorted(K)) == least


def test_max_clique_respects_within():
    assert max_clique(K5, within=[1, 3]) == frozenset({1, 3})
    assert clique_number(K5, within=0b11100) == 3


# ------------------------------------------------------------------ colouring

@pytest.mark.parametrize("G, chi", [(C5, 3), (PETERSEN, 3), (K5, 5), (C7bar, 4), (Graph.empty(4), 1)],
                         ids=["C5", "petersen", "K5", "C7bar", "empty"])
def test_chromatic_number_examples(G, chi):
    k, col = chromatic_number(G)
    assert k == chi == col.count
    assert O.is_proper(G, col.colors)


@given(graphs(0, 9))
def test_chromatic_number_matches_brute_force(G):
    k, col = chromatic_number(G)
    assert k == O.brute_chromatic_number(G)
    assert O.is_proper(G, col.colors)
    assert O.brute_clique_number(G) <= k


def test_chromatic_number_cap():
    with pytest.raises(CapExceededError):
        chromatic_number(Graph.empty(41))
    with pytest.raises(CapExceededError):
        chromatic_number(Graph.empty(5), cap=4)


def test_chromatic_number_timeout():
    import random
    G = O.random_graph(random.Random(35), 35, 0.5)
    with pytest.raises(SearchTimeout):
        chromatic_number(G, timeout=0.0)
    with pytest.raises(SearchTimeout):
        max_clique(O.random_graph(random.Random(1), 200, 0.9), timeout=0.0)


@given(graphs(0, 10))
def test_dsatur_is_proper(G):
    col = dsatur_coloring(G)
    assert O.is_proper(G, col.colors)


# ------------------------------------------------------------------ chi_upto

def test_chi_upto_examples():
    assert chi_upto(K5, 2) == 2
    assert chi_upto(C5, 2) == 3
    assert chi_upto(PETERSEN, 1) == 1
    assert chi_upto(C5, 0) == 0


@given(graphs(1, 8))
def test_chi_upto_matches_subset_tables(G):
    omega, chi = O.subset_tables(G)
    for n in (1, 2, 3):
        expected = max(int(c) for o, c in zip(omega, chi) if o <= n)
        assert chi_upto(G, n) == expected


# ------------------------------------------------------------------ containment

def test_contains_induced_examples():
    bull = make_pattern("bull")
    w = contains_induced(bull, make_pattern("path:4"))
    assert w is not None and O.is_induced_embedding(make_pattern("path:4"), bull, w.mapping)
    assert contains_induced(C5, Graph.complete(3)) is None
    W7, F6 = make_pattern("wheel:7"), make_pattern("fan:6")
    w = contains_induced(W7, F6)
    assert w is not None and O.is_induced_embedding(F6, W7, w.mapping)


@given(graphs(0, 7), graphs(0, 4))
def test_containment_matches_brute_force(G, H):
    from itertools import permutations
    w = contains_induced(G, H)
    embeddings = sorted(m for m in permutations(range(G.n), H.n) if O.is_induced_embedding(H, G, m))
    if not embeddings:
        assert w is None
    else:
        assert w is not None and w.mapping == embeddings[0]


# ------------------------------------------------------------------ perfection

def test_perfection_examples():
    assert is_perfect(make_pattern("path:4")) == (True, None)
    ok, w = is_perfect(C5)
    assert not ok and sorted(w.mapping) == list(range(5)) and w.note == "odd hole"
    ok, w = is_perfect(C7bar)
    assert not ok and sorted(w.mapping) == list(range(7)) and w.note == "odd antihole"


@given(graphs(0, 9))
def test_perfection_matches_definition(G):
    ok, w = is_perfect(G)
    assert ok == O.brute_is_perfect(G)
    if w is not None:
        cyc = list(w.mapping)
        H = make_pattern(f"cycle:{len(cyc)}")
        host = G if w.note == "odd hole" else complement(G)
        assert O.is_induced_embedding(H, host, cyc)


def test_odd_hole_is_induced_and_odd():
    hole = find_odd_hole(PETERSEN)
    assert len(hole) % 2 == 1 and len(hole) >= 5
    assert O.is_induced_embedding(make_pattern(f"cycle:{len(hole)}"), PETERSEN, hole)


@given(graphs(1, 8))
def test_graphs_on_at_most_4_vertices_are_1_perfect(G):
    part = is_k_perfect(G, 2)
    assert part is not None and len(part) <= 2
    if G.n <= 4:
        assert is_k_perfect(G, 1) is not None


def test_k_perfect_examples():
    assert is_k_perfect(C5, 1) is None
    part = is_k_perfect(C5, 2)
    assert part is not None and all(is_perfect(_sub(C5, b))[0] for b in part.blocks)
    with pytest.raises(CapExceededError):
        is_k_perfect(Graph.empty(13), 2)


def _sub(G, block):
    from chibound import induced
    return induced(G, block)
