import random
from collections import Counter

import pytest

from nichekit.enumeration import (
    OrientationCursor,
    brute_force_realize,
    index_of,
    mask_counts,
    merge_mask_counts,
    niche_masks,
    niche_spectrum,
    num_cross_pairs,
    orientations,
    parallel_mask_counts,
    partitions,
    split_ranges,
    tournament_at,
)
from nichekit.graph_core import converse
from nichekit.named import complete_graph, cycle_graph, empty_graph, path_graph
from nichekit.niche import niche_graph
from nichekit.properties import GuardExceeded, canonical_form, isomorphic

from oracles import naive_niche_edges


def test_partitions():
    assert partitions(6, 3) == [(4, 1, 1), (3, 2, 1), (2, 2, 2)]
    assert partitions(4, 4) == [(1, 1, 1, 1)]
    # partition counts p(n, k)
    assert [len(partitions(7, k)) for k in range(1, 8)] == [1, 3, 4, 3, 2, 1, 1]


@pytest.mark.parametrize("parts", [(1, 1), (2, 1), (1, 1, 1), (2, 1, 1), (2, 2), (1, 1, 1, 1), (3, 1, 1)])
def test_orientations_are_all_distinct(parts):
    ts = list(orientations(parts))
    m = num_cross_pairs(parts)
    assert len(ts) == 2 ** m
    assert len({t.arcs for t in ts}) == 2 ** m
    assert [index_of(t) for t in ts] == list(range(2 ** m))


def test_complement_index_is_converse():
    p = (2, 2, 1)
    m = num_cross_pairs(p)
    for i in (0, 5, 77, 255):
        assert tournament_at(p, (1 << m) - 1 - i) == converse(tournament_at(p, i))


def test_cursor():
    c = OrientationCursor((1, 1, 1))
    assert c.total == 8 and not c.exhausted()
    c = c.advance(5)
    assert c.tournament() == tournament_at((1, 1, 1), 5)
    assert c.advance(100).exhausted()
    with pytest.raises(ValueError):
        OrientationCursor((1, 1), 9)


def test_guard():
    with pytest.raises(GuardExceeded):
        next(orientations((3, 3, 3, 3)))


@pytest.mark.parametrize("parts", [(1, 1, 1), (2, 1, 1), (2, 2, 1), (3, 1, 1, 1)])
def test_vectorised_masks_match_scalar(parts):
    m = num_cross_pairs(parts)
    n = sum(parts)
    masks = niche_masks(parts, 0, 1 << m).tolist()
    for i, D in enumerate(orientations(parts)):
        G = niche_graph(D)
        assert masks[i] == G.mask
        assert G.edges == naive_niche_edges(n, D.arcs)


def test_split_ranges():
    assert split_ranges(10, 3) == [(0, 4), (4, 7), (7, 10)]
    assert split_ranges(2, 5) == [(0, 1), (1, 2)]
    rng = random.Random(0)
    for _ in range(50):
        total, parts = rng.randint(0, 500), rng.randint(1, 20)
        r = split_ranges(total, parts)
        assert r[0][0] == 0 and r[-1][1] == total
        assert all(a[1] == b[0] for a, b in zip(r, r[1:]))


def test_split_ranges_merge_to_whole():
    p = (2, 2, 2)
    whole = mask_counts(p)
    pieces = [mask_counts(p, lo, hi) for lo, hi in split_ranges(1 << num_cross_pairs(p), 7)]
    assert merge_mask_counts(pieces) == whole


def test_converse_reduction_preserves_counts():
    p = (2, 2, 1)
    full = {mk: c for mk, (c, _) in mask_counts(p).items()}
    half = {mk: c for mk, (c, _) in mask_counts(p, converse_reduce=True).items()}
    assert full == half


def test_parallel_matches_serial():
    p = (3, 2, 2)
    serial = parallel_mask_counts(p, threads=1, converse_reduce=True)
    par = parallel_mask_counts(p, threads=2, converse_reduce=True)
    assert serial == par


def test_spectrum_three_singletons():
    spec = niche_spectrum((1, 1, 1))
    assert spec == Counter({canonical_form(empty_graph(3)): 2, canonical_form(path_graph(3)): 6})
    assert niche_spectrum((1, 1, 1), converse_reduce=True) == spec
    assert sum(niche_spectrum((2, 1, 1)).values()) == 32


def test_brute_force_examples():
    assert brute_force_realize(complete_graph(4), 3) is None
    assert brute_force_realize(path_graph(5), 4) is None
    W = brute_force_realize(cycle_graph(5), 5)
    assert W is not None and W.part_sizes == (1, 1, 1, 1, 1)
    assert isomorphic(niche_graph(W), cycle_graph(5)) is not None
    with pytest.raises(GuardExceeded):
        brute_force_realize(empty_graph(9), 3)
