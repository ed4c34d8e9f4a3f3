import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nichekit.graph_core import Graph, GraphError, build_digraph, build_tournament, delete_vertex
from nichekit.named import path_graph
from nichekit.niche import (
    P3_K1,
    ExpansionSpec,
    expand,
    niche_graph,
    quotient,
    recognize_expansion_p3_k1,
    twin_classes_digraph,
    twin_classes_graph,
)
from nichekit.realizability import construct_three_cliques

from oracles import naive_niche_edges, random_tournament


def test_niche_examples():
    D = build_tournament([2, 1, 1], [(0, 2), (2, 1), (1, 3), (3, 0), (2, 3)])
    assert niche_graph(D).edges == {(1, 2), (1, 3)}
    cyc = build_tournament([1, 1, 1], [(0, 1), (1, 2), (2, 0)])
    assert niche_graph(cyc).edges == frozenset()
    trans = build_tournament([1, 1, 1], [(0, 1), (1, 2), (0, 2)])
    assert niche_graph(trans).edges == {(0, 1), (1, 2)}


def test_niche_matches_definition_on_random_digraphs():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(1, 8)
        arcs = {(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < 0.3}
        D = build_digraph(n, arcs)
        assert niche_graph(D).edges == naive_niche_edges(n, arcs)


def test_twins_of_three_clique_construction():
    D = construct_three_cliques(2, 1, 1)
    assert twin_classes_digraph(D).classes == ((0, 1), (2,), (3,))


def test_graph_twins_use_closed_neighbourhoods():
    assert twin_classes_graph(Graph(2, frozenset())).classes == ((0,), (1,))
    assert twin_classes_graph(Graph(2, frozenset({(0, 1)}))).classes == ((0, 1),)
    tc = twin_classes_graph(path_graph(3))
    assert len(tc) == 3 and tc.nontrivial() == []


def test_expand_and_quotient():
    G = expand(ExpansionSpec(P3_K1, (1, 2, 1, 3)))
    assert G.n == 7
    # clique edges 1 + 3, then 2 * 1 and 1 * 3 between blocks
    assert len(G.edges) == 1 + 3 + 2 + 3
    tc = twin_classes_graph(G)
    assert tc.sizes() == [1, 2, 1, 3]
    assert quotient(G, tc).edges == P3_K1.edges


def test_expansion_spec_validation():
    with pytest.raises(ValueError):
        ExpansionSpec(P3_K1, (1, 0, 1, 1))
    with pytest.raises(ValueError):
        ExpansionSpec(P3_K1, (1, 1, 1))


@pytest.mark.parametrize("sizes", list(itertools.product(range(1, 4), repeat=4)))
def test_recognize_round_trip(sizes):
    spec = recognize_expansion_p3_k1(expand(ExpansionSpec(P3_K1, sizes)))
    assert spec is not None
    a, b, c, d = sizes
    assert spec.sizes in {(a, b, c, d), (a, d, c, b)}


def test_recognize_rejects_non_expansions():
    assert recognize_expansion_p3_k1(path_graph(4)) is None
    assert recognize_expansion_p3_k1(Graph(4, frozenset({(0, 1), (2, 3)}))) is None


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_twin_transfer_and_deletion(seed):
    # digraph twins are twins of the niche graph; deleting one twin keeps
    # the niche graph of the rest
    rng = random.Random(seed)
    D = random_tournament(rng, 8)
    N = niche_graph(D)
    for cls in twin_classes_digraph(D).nontrivial():
        u, v = cls[0], cls[1]
        if N.has_edge(u, v):
            assert N.adj[u] | 1 << u == N.adj[v] | 1 << v
        else:
            assert N.adj[u] == N.adj[v]
        try:
            R = delete_vertex(D, v)
        except GraphError:
            continue
        assert niche_graph(R) == N.delete_vertex(v)
