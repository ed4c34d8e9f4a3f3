"""Exhaustive re-verification of the characterisation results.

Each check sweeps every orientation of every relevant complete
multipartite graph up to ``max_n`` vertices (or runs the brute-force
oracle) and reports counterexamples. Sweeps reduce each partition to its
distinct labelled niche graphs first, so graph properties are evaluated
once per distinct graph rather than once per orientation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Optional

from .enumeration import (
    DEFAULT_REALIZE_GUARD,
    brute_force_realize,
    parallel_mask_counts,
    partitions,
)
from .graph_core import Graph, Partition
from .named import NAMED_TARGETS, complete_graph, cycle_graph, path_graph
from .niche import P3_K1, ExpansionSpec, expand, niche_graph, recognize_expansion_p3_k1
from .properties import (
    canonical_form,
    component_diameters,
    components,
    find_induced_path,
    has_triangle,
    is_connected,
    isomorphic,
    recognize_disjoint_cliques,
    stability_number,
)
from .realizability import (
    CYCLE_TABLE,
    PATH_TABLE,
    TRIANGLE_FREE_TABLE,
    Answer,
    complete_realizable,
    construct_expansion_witness,
    construct_three_cliques,
    decide,
)

THEOREM_IDS = ("thm2.1", "thm2.2", "cor2.1", "thm3.1", "thm3.2", "thm4.1", "thm4.2", "lem4.3", "lem4.5", "thm4.3")


@dataclass
class CheckResult:
    theorem: str
    passed: bool
    message: str
    counterexamples: list = field(default_factory=list)

    def line(self) -> str:
        return f"{self.theorem}: {'PASS' if self.passed else 'FAIL'}: {self.message}"


@lru_cache(maxsize=None)
def _partition_masks(p: Partition, threads: int) -> tuple[tuple[int, int, int], ...]:
    # (mask, multiplicity, first index) for every distinct niche graph of K_p
    d = parallel_mask_counts(p, threads=threads, converse_reduce=True)
    return tuple((mk, c, f) for mk, (c, f) in sorted(d.items()))


def sweep(max_n: int, ks: Callable[[int], Iterable[int]], threads: int = 1):
    """Yield ``(partition, mask, multiplicity, first_index)`` for each
    distinct niche graph, over all partitions of ``n <= max_n`` into
    ``k in ks(n)`` parts."""
    for n in range(2, max_n + 1):
        for k in ks(n):
            if not 2 <= k <= n:
                continue
            for p in partitions(n, k):
                for mk, c, f in _partition_masks(p, threads):
                    yield p, mk, c, f


def _at_least(lo: int):
    return lambda n: range(lo, n + 1)


@lru_cache(maxsize=None)
def _graph(n: int, mask: int) -> Graph:
    return Graph.from_mask(n, mask)


def _sweep_check(theorem, max_n, ks, threads, bad: Callable[[Graph], Optional[str]], what: str) -> CheckResult:
    total = 0
    bad_examples = []
    for p, mk, c, f in sweep(max_n, ks, threads):
        total += c
        G = _graph(sum(p), mk)
        why = bad(G)
        if why is not None:
            bad_examples.append((p, f, why))
    ok = not bad_examples
    msg = f"{len(bad_examples)} {what} across all orientations ({total:,} orientations, n <= {max_n})"
    return CheckResult(theorem, ok, msg, bad_examples[:20])


def check_connectivity(max_n: int, threads: int = 1) -> CheckResult:
    return _sweep_check(
        "thm2.1", max_n, _at_least(4), threads,
        lambda G: None if is_connected(G) else "disconnected",
        "disconnected niche graphs with k >= 4",
    )


def check_stability(max_n: int, threads: int = 1) -> CheckResult:
    def bad(G):
        a = stability_number(G)
        return None if a <= 3 else f"alpha = {a}"
    return _sweep_check("thm2.2", max_n, _at_least(3), threads, bad, "niche graphs with stability number > 3")


def check_components(max_n: int, threads: int = 1) -> CheckResult:
    def bad(G):
        c = len(components(G))
        return None if c <= 3 else f"{c} components"
    return _sweep_check("cor2.1", max_n, _at_least(3), threads, bad, "niche graphs with more than 3 components")


def check_p6_free(max_n: int, threads: int = 1) -> CheckResult:
    worst = 0

    def bad(G):
        nonlocal worst
        path = find_induced_path(G, 6)
        if path is not None:
            return f"induced P6 {path}"
        d = max(component_diameters(G), default=0)
        worst = max(worst, d)
        return None if d <= 4 else f"component diameter {d}"

    res = _sweep_check("thm4.2", max_n, _at_least(3), threads, bad, "induced P6 / diameter > 4")
    n_p6 = sum(1 for *_, why in res.counterexamples if why.startswith("induced"))
    res.message = (
        f"{n_p6} induced P6 found across all orientations; "
        f"max component diameter {worst} ({res.message.split('(', 1)[1]}"
    )
    return res


def _three_triples(max_n: int):
    for p, q, r in itertools.product(range(1, max_n + 1), repeat=3):
        if p + q + r <= max_n:
            yield p, q, r


def _expansion_vectors(max_n: int):
    for s in itertools.product(range(1, max_n + 1), repeat=4):
        if sum(s) <= max_n:
            yield s


def check_three_components(max_n: int, threads: int = 1) -> CheckResult:
    failures = []
    seen = 0
    for p, mk, c, f in sweep(max_n, lambda n: [3], threads):
        G = _graph(sum(p), mk)
        if len(components(G)) == 3:
            seen += c
            if recognize_disjoint_cliques(G) is None:
                failures.append((p, f, "3 components, not all complete"))
    built = 0
    for p, q, r in _three_triples(max_n):
        sizes = recognize_disjoint_cliques(niche_graph(construct_three_cliques(p, q, r)))
        built += 1
        if sizes != sorted((p, q, r), reverse=True):
            failures.append(((p, q, r), None, f"construction gives {sizes}"))
    msg = (f"{len(failures)} failures; {seen:,} orientations with three components checked, "
           f"{built} cyclic constructions verified (n <= {max_n})")
    return CheckResult("thm3.1", not failures, msg, failures[:20])


def check_two_components(max_n: int, threads: int = 1) -> CheckResult:
    failures = []
    seen = 0
    for p, mk, c, f in sweep(max_n, lambda n: [3], threads):
        G = _graph(sum(p), mk)
        if len(components(G)) == 2:
            seen += c
            if recognize_expansion_p3_k1(G) is None:
                failures.append((p, f, "2 components, not an expansion of P3 u K1"))
    built = 0
    for s in _expansion_vectors(max_n):
        target = expand(ExpansionSpec(P3_K1, s))
        got = niche_graph(construct_expansion_witness(s))
        built += 1
        if isomorphic(got, target) is None:
            failures.append((s, None, "construction not isomorphic to expansion"))
    msg = (f"{len(failures)} failures; {seen:,} orientations with two components checked, "
           f"{built} expansion constructions verified (n <= {max_n})")
    return CheckResult("thm3.2", not failures, msg, failures[:20])


def _oracle_guard(max_n: int) -> int:
    return max(max_n, DEFAULT_REALIZE_GUARD)


def check_complete(max_n: int, threads: int = 1) -> CheckResult:
    failures = []
    pairs = [(n, k) for n in range(3, max_n + 1) for k in range(3, n + 1)]
    for n, k in pairs:
        K = complete_graph(n)
        v = decide(K, k)
        expected = complete_realizable(n, k)
        if (v.answer is Answer.YES) != expected:
            failures.append(((n, k), f"decide says {v.answer.value}"))
        if v.answer is Answer.YES and isomorphic(niche_graph(v.witness), K) is None:
            failures.append(((n, k), "witness does not realize K_n"))
        if not expected and brute_force_realize(K, k, guard=_oracle_guard(max_n)) is not None:
            failures.append(((n, k), "oracle found a witness for a NO case"))
    msg = f"{len(failures)} disagreements over {len(pairs)} pairs (3 <= k <= n <= {max_n})"
    return CheckResult("thm4.1", not failures, msg, failures[:20])


def _table_check(theorem, family, table, max_n) -> CheckResult:
    found = set()
    for n in range(3, max_n + 1):
        for k in range(3, n + 1):
            if brute_force_realize(family(n), k, guard=_oracle_guard(max_n)) is not None:
                found.add((n, k))
    expected = {(n, k) for n, k in table if n <= max_n}
    diff = sorted(found ^ expected)
    msg = f"oracle realizes {sorted(found)}; {len(diff)} disagreements (n <= {max_n})"
    return CheckResult(theorem, not diff, msg, diff)


def check_paths(max_n: int, threads: int = 1) -> CheckResult:
    return _table_check("lem4.3", path_graph, PATH_TABLE, max_n)


def check_cycles(max_n: int, threads: int = 1) -> CheckResult:
    return _table_check("lem4.5", cycle_graph, CYCLE_TABLE, max_n)


@lru_cache(maxsize=None)
def triangle_free_classes(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of triangle-free graphs on
    ``n`` vertices, grown one vertex at a time from classes on ``n - 1``."""
    if n == 0:
        return (Graph(0, frozenset()),)
    out = {}
    for H in triangle_free_classes(n - 1):
        for bits in range(1 << H.n):
            nbrs = [v for v in range(H.n) if bits >> v & 1]
            if any(H.has_edge(a, b) for a, b in itertools.combinations(nbrs, 2)):
                continue
            G = Graph(n, H.edges | {(v, n - 1) for v in nbrs})
            out.setdefault(canonical_form(G), G)
    return tuple(out[c] for c in sorted(out))


def connected_triangle_free_classes(n: int) -> list[Graph]:
    return [G for G in triangle_free_classes(n) if is_connected(G)]


def _named_match(G: Graph) -> Optional[str]:
    for name, H in NAMED_TARGETS.items():
        if H.n == G.n and isomorphic(G, H) is not None:
            return name
    return None


def check_triangle_free(max_n: int, threads: int = 1) -> CheckResult:
    failures = []
    instances = 0
    for n in range(3, max_n + 1):
        for G in connected_triangle_free_classes(n):
            assert not has_triangle(G)
            name = _named_match(G)
            for k in range(3, n + 1):
                instances += 1
                got = decide(G, k).answer is Answer.YES
                listed = name is not None and name in TRIANGLE_FREE_TABLE.get(k, ())
                oracle = brute_force_realize(G, k, guard=_oracle_guard(max_n)) is not None
                if not got == listed == oracle:
                    failures.append((sorted(G.edges), k, got, listed, oracle))
    msg = f"{len(failures)} disagreements over {instances} (graph, k) instances (3 <= n <= {max_n})"
    return CheckResult("thm4.3", not failures, msg, failures[:20])


CHECKS: dict[str, Callable[..., CheckResult]] = {
    "thm2.1": check_connectivity,
    "thm2.2": check_stability,
    "cor2.1": check_components,
    "thm3.1": check_three_components,
    "thm3.2": check_two_components,
    "thm4.1": check_complete,
    "thm4.2": check_p6_free,
    "lem4.3": check_paths,
    "lem4.5": check_cycles,
    "thm4.3": check_triangle_free,
}


def run(theorem: str, max_n: int = 6, threads: int = 1) -> list[CheckResult]:
    ids = THEOREM_IDS if theorem == "all" else (theorem,)
    for t in ids:
        if t not in CHECKS:
            raise KeyError(t)
    return [CHECKS[t](max_n, threads) for t in ids]

