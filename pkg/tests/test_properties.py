import itertools
import math
import random

import networkx as nx
import pytest

from nichekit.graph_core import Graph, pair_list
from nichekit.named import complete_graph, cycle_graph, disjoint_union, empty_graph, path_graph
from nichekit.properties import (
    GuardExceeded,
    canonical_form,
    clique_number,
    component_diameters,
    components,
    diameter,
    find_induced_path,
    has_triangle,
    is_p6_free,
    isomorphic,
    recognize_disjoint_cliques,
    stability_number,
)

from oracles import to_nx


def random_graph(rng, n, p):
    return Graph(n, frozenset(e for e in pair_list(n) if rng.random() < p))


def all_graphs(n):
    pairs = pair_list(n)
    for mask in range(1 << len(pairs)):
        yield Graph.from_mask(n, mask)


def test_components_and_diameter():
    G = disjoint_union(path_graph(3), complete_graph(2), empty_graph(1))
    assert components(G) == [[0, 1, 2], [3, 4], [5]]
    assert component_diameters(G) == [2, 1, 0]
    assert diameter(G) == math.inf
    assert diameter(cycle_graph(7)) == 3


def test_recognize_disjoint_cliques():
    assert recognize_disjoint_cliques(disjoint_union(complete_graph(2), complete_graph(3), empty_graph(1))) == [3, 2, 1]
    assert recognize_disjoint_cliques(path_graph(3)) is None


def test_isomorphic_against_permutation_search():
    rng = random.Random(1)
    for _ in range(200):
        n = rng.randint(1, 6)
        G = random_graph(rng, n, 0.5)
        H = G.relabel(rng.sample(range(n), n)) if rng.random() < 0.5 else random_graph(rng, n, 0.5)
        brute = any(G.relabel(list(p)).edges == H.edges for p in itertools.permutations(range(n)))
        phi = isomorphic(G, H)
        assert (phi is not None) == brute
        if phi is not None:
            assert G.relabel(phi).edges == H.edges


@pytest.mark.parametrize("n", range(1, 6))
def test_canonical_form_classes_match_atlas(n):
    classes = {}
    for G in all_graphs(n):
        classes.setdefault(canonical_form(G), []).append(G)
    atlas = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == n]
    assert len(classes) == len(atlas)
    for form, members in classes.items():
        assert isomorphic(form.graph(), members[0]) is not None
        for G in members[1:]:
            assert nx.is_isomorphic(to_nx(G), to_nx(members[0]))


def test_canonical_form_invariant_under_relabelling_n7():
    rng = random.Random(3)
    for _ in range(100):
        G = random_graph(rng, 7, rng.random())
        assert canonical_form(G) == canonical_form(G.relabel(rng.sample(range(7), 7)))


def _alpha_subsets(G):
    best = 0
    for mask in range(1 << G.n):
        size = mask.bit_count()
        if size <= best:
            continue
        if all(not (G.adj[v] & mask) for v in range(G.n) if mask >> v & 1):
            best = size
    return best


def test_stability_number_against_subset_scan():
    rng = random.Random(5)
    for _ in range(60):
        n = rng.randint(0, 12)
        G = random_graph(rng, n, rng.choice([0.1, 0.3, 0.6]))
        assert stability_number(G) == _alpha_subsets(G)


def test_stability_and_clique_against_networkx_n16():
    rng = random.Random(6)
    for _ in range(40):
        G = random_graph(rng, 16, rng.choice([0.2, 0.5, 0.8]))
        H = to_nx(G)
        omega = max(len(c) for c in nx.find_cliques(H))
        alpha = max(len(c) for c in nx.find_cliques(nx.complement(H)))
        assert clique_number(G) == omega
        assert stability_number(G) == alpha


def _has_induced_p6_scan(G):
    H = to_nx(G)
    for S in itertools.combinations(range(G.n), 6):
        sub = H.subgraph(S)
        if sub.number_of_edges() == 5 and nx.is_connected(sub) and max(d for _, d in sub.degree()) <= 2:
            return True
    return False


def test_p6_against_subset_scan():
    rng = random.Random(8)
    for _ in range(250):
        n = rng.randint(6, 10)
        G = random_graph(rng, n, rng.choice([0.2, 0.3, 0.45]))
        assert is_p6_free(G) == (not _has_induced_p6_scan(G))
        path = find_induced_path(G, 6)
        if path is not None:
            sub = Graph(6, frozenset(
                (i, j) for i, j in pair_list(6) if G.has_edge(path[i], path[j])))
            assert sub.edges == path_graph(6).edges


def test_p6_examples():
    assert is_p6_free(path_graph(5))
    assert not is_p6_free(path_graph(6))
    assert is_p6_free(cycle_graph(6))
    assert not is_p6_free(cycle_graph(7))


def test_triangle():
    assert has_triangle(complete_graph(3))
    assert not has_triangle(cycle_graph(5))


def test_isomorphism_guard():
    with pytest.raises(GuardExceeded):
        isomorphic(empty_graph(40), empty_graph(40))
