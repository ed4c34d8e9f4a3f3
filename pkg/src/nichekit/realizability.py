"""Deciding whether ``(G, k)`` is niche-realizable for ``k >= 3``.

:func:`decide` walks a fixed ladder of structural tests. Positive answers
always carry a witness tournament built by one of the ``construct_*``
functions, and the witness is re-checked before the verdict is returned.
Connected graphs that contain a triangle and are not complete have no
closed-form answer; those fall back to exhaustive search up to a size
guard and are reported as unknown beyond it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from .enumeration import DEFAULT_REALIZE_GUARD, brute_force_realize
from .formats import tournament_to_json
from .graph_core import (
    Graph,
    GraphError,
    MultipartiteTournament,
    build_tournament,
    cross_pairs,
    part_blocks,
)
from .named import NAMED_TARGETS, complete_graph, cycle_graph, path_graph
from .niche import niche_graph, recognize_expansion_p3_k1
from .properties import (
    MAX_ISO_N,
    MAX_P6_N,
    MAX_STABILITY_N,
    GuardExceeded,
    components,
    has_triangle,
    is_p6_free,
    isomorphic,
    recognize_disjoint_cliques,
    stability_number,
)


class Answer(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


# citation identifiers
THREE_CLIQUES = "Thm3.1"
P3K1_EXPANSION = "Thm3.2"
COMPLETE = "Thm4.1(complete)"
CONNECTIVITY = "Thm2.1(connectivity)"
COMPONENTS = "Cor2.1(components)"
STABILITY = "Thm2.2(stability)"
P6_FREE = "Thm4.2(P6)"
PATHS = "Lem4.3(path)"
CYCLES = "Lem4.5(cycle)"
TRIANGLE_FREE = "Thm4.3(triangle-free)"
ORACLE = "Oracle"
ORDER = "Order(n<k)"

CITATIONS = (
    THREE_CLIQUES, P3K1_EXPANSION, COMPLETE, CONNECTIVITY, COMPONENTS, STABILITY,
    P6_FREE, PATHS, CYCLES, TRIANGLE_FREE, ORACLE, ORDER,
)

CITATION_TEXT = {
    THREE_CLIQUES: "Theorem 3.1",
    P3K1_EXPANSION: "Theorem 3.2",
    COMPLETE: "Theorem 4.1",
    CONNECTIVITY: "Theorem 2.1",
    COMPONENTS: "Corollary 2.1",
    STABILITY: "Theorem 2.2",
    P6_FREE: "Theorem 4.2",
    PATHS: "Lemma 4.3",
    CYCLES: "Lemma 4.5",
    TRIANGLE_FREE: "Theorem 4.3",
    ORACLE: "exhaustive search",
    ORDER: "fewer vertices than parts",
}


@dataclass(frozen=True)
class Verdict:
    answer: Answer
    witness: Optional[MultipartiteTournament] = None
    citation: Optional[str] = None
    reason: Optional[str] = None

    def __post_init__(self):
        if (self.answer is Answer.YES) != (self.witness is not None):
            raise ValueError("a witness is present exactly for YES verdicts")
        if (self.answer is Answer.UNKNOWN) == (self.citation is not None):
            raise ValueError("YES/NO verdicts carry a citation, UNKNOWN does not")

    def summary(self) -> str:
        if self.answer is Answer.UNKNOWN:
            return f"UNKNOWN: {self.reason}"
        return f"{self.answer.value.upper()} ({CITATION_TEXT.get(self.citation, self.citation)})"

    def to_json(self) -> dict:
        return {
            "answer": self.answer.value,
            "citation": self.citation,
            "witness": tournament_to_json(self.witness) if self.witness is not None else None,
            "reason": self.reason,
        }


# ---------------------------------------------------------------- constructions


def construct_three_cliques(p: int, q: int, r: int) -> MultipartiteTournament:
    """Parts ``X, Y, Z`` of sizes ``p, q, r`` with every arc ``X->Y``,
    ``Y->Z``, ``Z->X``; its niche graph is ``K_p u K_q u K_r``."""
    if min(p, q, r) < 1:
        raise GraphError(f"clique sizes must be positive: {(p, q, r)}")
    X, Y, Z = part_blocks((p, q, r))
    arcs = [(x, y) for x in X for y in Y]
    arcs += [(y, z) for y in Y for z in Z]
    arcs += [(z, x) for z in Z for x in X]
    return build_tournament((p, q, r), arcs)


# block-level arc pattern over blocks 1..4
_EXPANSION_ARCS = ((1, 3), (2, 4), (3, 2), (3, 4), (4, 1))


def construct_expansion_witness(sizes: Sequence[int]) -> MultipartiteTournament:
    """3-partite tournament whose niche graph is the expansion of ``P3 u K1``
    with clique sizes ``(isolated, end, middle, end)``.

    Block 1 holds the isolated clique, block 2 the middle, blocks 3 and 4
    the two ends; the parts are ``(block1 + block2, block3, block4)``.
    """
    if len(sizes) != 4 or min(sizes) < 1:
        raise GraphError(f"need four positive clique sizes, got {list(sizes)}")
    iso, end_a, mid, end_b = (int(s) for s in sizes)
    block_sizes = {1: iso, 2: mid, 3: end_a, 4: end_b}
    blocks = {}
    start = 0
    for b in (1, 2, 3, 4):
        blocks[b] = range(start, start + block_sizes[b])
        start += block_sizes[b]
    arcs = [(v, w) for i, j in _EXPANSION_ARCS for v in blocks[i] for w in blocks[j]]
    return build_tournament((iso + mid, end_a, end_b), arcs)


def complete_realizable(n: int, k: int) -> bool:
    return n >= k >= 3 and ((n, k) == (4, 4) or n >= 5)


def construct_complete(n: int, k: int, rng: Optional[random.Random] = None) -> MultipartiteTournament:
    """Witness whose niche graph is ``K_n``.

    Vertex ``i`` here is ``v_{i+1}`` of the construction. Pairs the
    construction leaves free are oriented lower -> higher, or at random
    when ``rng`` is given.
    """
    if not complete_realizable(n, k):
        raise GraphError(f"(K_{n}, {k}) is not niche-realizable")
    forced: list[tuple[int, int]] = [(0, i) for i in range(1, n)]
    if k == 3:
        parts: tuple[int, ...] = (1, 2, n - 3)
        forced += [(1, 3), (3, 2), (2, 4), (4, 1)]
        forced += [(i, 1) for i in range(5, n)]
    else:
        parts = (1,) * (k - 1) + (n - k + 1,)
        forced += [(i, i + 1) for i in range(1, k - 2)]
        for i in range(k - 1, n):
            forced += [(k - 2, i), (i, 1)]
    chosen = {frozenset(a): a for a in forced}
    arcs = list(chosen.values())
    for u, v in cross_pairs(parts):
        if frozenset((u, v)) in chosen:
            continue
        if rng is not None and rng.random() < 0.5:
            arcs.append((v, u))
        else:
            arcs.append((u, v))
    return build_tournament(parts, arcs)


def construct_c6() -> MultipartiteTournament:
    """``K_{2,2,2}`` orientation in which ``v_i`` beats ``v_{i+1}`` and
    ``v_{i+2}`` (indices mod 6); parts ``{v0,v3}, {v1,v4}, {v2,v5}``."""
    label = {0: 0, 3: 1, 1: 2, 4: 3, 2: 4, 5: 5}
    arcs = set()
    for i in range(6):
        for d in (1, 2):
            arcs.add((label[i], label[(i + d) % 6]))
    return build_tournament((2, 2, 2), arcs)


# First witnesses found by brute_force_realize (partition order, then
# orientation index order). tests/test_named_witnesses.py regenerates them.
NAMED_WITNESS_TABLE: dict[tuple[str, int], tuple[tuple[int, ...], tuple[tuple[int, int], ...]]] = {
    ("P3", 3): ((1, 1, 1), ((1, 0), (2, 0), (2, 1))),
    ("P4", 3): ((2, 1, 1), ((0, 3), (2, 0), (2, 1), (3, 1), (3, 2))),
    ("P5", 3): ((2, 2, 1), ((0, 2), (0, 4), (1, 4), (2, 1), (3, 0), (3, 1), (4, 2), (4, 3))),
    ("C5", 3): ((3, 1, 1), ((0, 3), (0, 4), (1, 4), (3, 1), (3, 2), (4, 2), (4, 3))),
    ("G4", 3): ((2, 2, 1), ((0, 4), (1, 2), (2, 0), (2, 4), (3, 0), (3, 1), (4, 1), (4, 3))),
    ("G5", 3): ((2, 2, 2), ((0, 4), (0, 5), (1, 2), (1, 5), (2, 0), (2, 4), (3, 0), (3, 1),
                            (4, 1), (4, 3), (5, 2), (5, 3))),
    ("P4", 4): ((1, 1, 1, 1), ((0, 3), (1, 0), (2, 0), (2, 1), (3, 1), (3, 2))),
    ("C5", 4): ((2, 1, 1, 1), ((0, 3), (0, 4), (1, 4), (2, 0), (2, 1), (3, 1), (3, 2), (4, 2),
                               (4, 3))),
    ("C5", 5): ((1, 1, 1, 1, 1), ((0, 3), (0, 4), (1, 0), (1, 4), (2, 0), (2, 1), (3, 1), (3, 2),
                                  (4, 2), (4, 3))),
}

# connected triangle-free graphs realizable for each k
TRIANGLE_FREE_TABLE = {
    3: ("P3", "P4", "P5", "C5", "C6", "G4", "G5"),
    4: ("P4", "C5"),
    5: ("C5",),
}

PATH_TABLE = frozenset({(3, 3), (4, 3), (4, 4), (5, 3)})
CYCLE_TABLE = frozenset({(5, 3), (5, 4), (5, 5), (6, 3)})


def construct_named(target: str, k: int) -> MultipartiteTournament:
    """Witness with ``k`` parts whose niche graph is isomorphic to the named
    connected triangle-free graph ``target``."""
    if target not in TRIANGLE_FREE_TABLE.get(k, ()):
        raise GraphError(f"({target}, {k}) is not niche-realizable")
    if target == "C6":
        return construct_c6()
    parts, arcs = NAMED_WITNESS_TABLE[(target, k)]
    return build_tournament(parts, arcs)


# ------------------------------------------------------------------- decision


def _same_graph_up_to_iso(G: Graph, H: Graph) -> bool:
    if G.n != H.n or len(G.edges) != len(H.edges):
        return False
    if G.n <= MAX_ISO_N:
        return isomorphic(G, H) is not None
    # beyond the permutation-search limit, only classes with a complete
    # invariant can be compared
    cg, ch = recognize_disjoint_cliques(G), recognize_disjoint_cliques(H)
    if cg is not None or ch is not None:
        return cg == ch
    eg, eh = recognize_expansion_p3_k1(G), recognize_expansion_p3_k1(H)
    if eg is not None or eh is not None:
        if eg is None or eh is None:
            return False
        a, b = eg.sizes, eh.sizes
        return a == b or a == (b[0], b[3], b[2], b[1])
    raise GuardExceeded(f"cannot certify isomorphism of {G.n}-vertex graphs of this shape")


def _yes(G: Graph, k: int, witness: MultipartiteTournament, citation: str) -> Verdict:
    if witness.k != k or not _same_graph_up_to_iso(niche_graph(witness), G):
        raise AssertionError(f"witness for {citation} does not realize the graph")
    return Verdict(Answer.YES, witness=witness, citation=citation)


def _no(citation: str) -> Verdict:
    return Verdict(Answer.NO, citation=citation)


def _is_path(G: Graph) -> bool:
    return G.n >= 1 and len(G.edges) == G.n - 1 and max(G.degrees(), default=0) <= 2


def _is_cycle(G: Graph) -> bool:
    return G.n >= 3 and len(G.edges) == G.n and all(d == 2 for d in G.degrees())


def decide(G: Graph, k: int, guard: int = DEFAULT_REALIZE_GUARD) -> Verdict:
    """Is ``G`` the niche graph of some ``k``-partite tournament (``k >= 3``)?"""
    if k < 3:
        raise ValueError(f"decide handles k >= 3 only, got k = {k}")
    n = G.n
    if n < k:
        return _no(ORDER)

    comps = components(G)
    if len(comps) >= 4:
        return _no(COMPONENTS)
    if len(comps) >= 2 and k >= 4:
        return _no(CONNECTIVITY)
    if len(comps) == 3:
        sizes = recognize_disjoint_cliques(G)
        if sizes is None:
            return _no(THREE_CLIQUES)
        return _yes(G, k, construct_three_cliques(*sizes), THREE_CLIQUES)
    if len(comps) == 2:
        spec = recognize_expansion_p3_k1(G)
        if spec is None:
            return _no(P3K1_EXPANSION)
        return _yes(G, k, construct_expansion_witness(spec.sizes), P3K1_EXPANSION)

    # connected from here on; the general screens come first so that a graph
    # failing one of them is reported by that necessary condition
    if n <= MAX_STABILITY_N and stability_number(G) > 3:
        return _no(STABILITY)
    if n <= MAX_P6_N and not is_p6_free(G):
        return _no(P6_FREE)

    if len(G.edges) == n * (n - 1) // 2:
        if not complete_realizable(n, k):
            return _no(COMPLETE)
        return _yes(G, k, construct_complete(n, k), COMPLETE)

    if not has_triangle(G):
        citation = PATHS if _is_path(G) else CYCLES if _is_cycle(G) else TRIANGLE_FREE
        if n <= 6:
            for name in TRIANGLE_FREE_TABLE.get(k, ()):
                H = NAMED_TARGETS[name]
                if H.n == n and isomorphic(G, H) is not None:
                    return _yes(G, k, construct_named(name, k), citation)
        return _no(citation)

    if n > guard:
        return Verdict(
            Answer.UNKNOWN,
            reason=f"connected, contains a triangle, not complete; n = {n} exceeds search guard {guard}",
        )
    W = brute_force_realize(G, k, guard=guard)
    if W is None:
        return _no(ORACLE)
    return _yes(G, k, W, ORACLE)


def path_table(max_n: int) -> set[tuple[int, int]]:
    """``(n, k)`` pairs with ``P_n`` realizable, as decided."""
    return {(n, k) for n in range(3, max_n + 1) for k in range(3, n + 1)
            if decide(path_graph(n), k).answer is Answer.YES}


def cycle_table(max_n: int) -> set[tuple[int, int]]:
    return {(n, k) for n in range(3, max_n + 1) for k in range(3, n + 1)
            if decide(cycle_graph(n), k).answer is Answer.YES}


def complete_table(max_n: int) -> set[tuple[int, int]]:
    return {(n, k) for n in range(3, max_n + 1) for k in range(3, n + 1)
            if decide(complete_graph(n), k).answer is Answer.YES}

