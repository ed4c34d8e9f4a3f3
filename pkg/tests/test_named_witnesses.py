"""The frozen witness tables must be exactly what the brute-force search
produces, and every entry must realize its target."""

import pytest

from nichekit.enumeration import brute_force_realize
from nichekit.named import NAMED_TARGETS
from nichekit.niche import niche_graph
from nichekit.properties import isomorphic
from nichekit.realizability import NAMED_WITNESS_TABLE, TRIANGLE_FREE_TABLE, construct_named


@pytest.mark.parametrize("name, k", sorted(NAMED_WITNESS_TABLE))
def test_table_entry_regenerates(name, k):
    W = brute_force_realize(NAMED_TARGETS[name], k)
    assert W is not None
    assert (W.part_sizes, tuple(W.arc_list())) == NAMED_WITNESS_TABLE[(name, k)]


@pytest.mark.parametrize("k", sorted(TRIANGLE_FREE_TABLE))
def test_every_listed_pair_has_a_witness(k):
    for name in TRIANGLE_FREE_TABLE[k]:
        W = construct_named(name, k)
        assert W.k == k
        assert isomorphic(niche_graph(W), NAMED_TARGETS[name]) is not None
