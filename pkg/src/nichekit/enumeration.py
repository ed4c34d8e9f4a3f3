"""Exhaustive orientation enumeration and the brute-force realizability oracle.

An orientation of ``K_p`` is addressed by an integer index in ``0..2^m-1``
where ``m`` is the number of cross-part pairs: bit ``j`` set means the
``j``-th cross pair ``(u, v)`` (``u < v``, lexicographic) is oriented
``u -> v``, clear means ``v -> u``. Flipping every bit gives the converse.

Two paths compute niche graphs over an index range:

* :func:`orientations` materialises each :class:`MultipartiteTournament`
  (scalar, used for witnesses and small checks);
* :func:`niche_masks` evaluates whole index ranges at once with numpy bit
  rows and returns each niche graph as an edge mask (bit ``i`` is
  ``pair_list(n)[i]``). The sweeps in :mod:`nichekit.verify` use this.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional, Sequence

import numpy as np

from .graph_core import (
    Digraph,
    Graph,
    MultipartiteTournament,
    Partition,
    cross_pairs,
    pair_list,
)
from .properties import CanonicalForm, GuardExceeded, canonical_form, isomorphic

DEFAULT_ORIENTATION_GUARD = 28
DEFAULT_REALIZE_GUARD = 8
CHUNK = 1 << 16
_TABLE_MAX_M = 21


def partitions(n: int, k: int) -> list[Partition]:
    """Nonincreasing ``k``-part partitions of ``n``, largest first part first.

    >>> partitions(6, 3)
    [(4, 1, 1), (3, 2, 1), (2, 2, 2)]
    """
    if k < 1 or k > n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    out: list[Partition] = []

    def rec(remaining: int, parts_left: int, cap: int, acc: list[int]):
        if parts_left == 0:
            if remaining == 0:
                out.append(tuple(acc))
            return
        hi = min(cap, remaining - (parts_left - 1))
        lo = -(-remaining // parts_left)
        for s in range(hi, lo - 1, -1):
            rec(remaining - s, parts_left - 1, s, acc + [s])

    rec(n, k, n, [])
    return out


def num_cross_pairs(part_sizes: Sequence[int]) -> int:
    total = sum(part_sizes)
    return (total * total - sum(s * s for s in part_sizes)) // 2


def _check_guard(part_sizes: Partition, guard: int) -> int:
    m = num_cross_pairs(part_sizes)
    if m > guard:
        raise GuardExceeded(f"partition {list(part_sizes)} has m = {m} cross pairs > guard {guard}")
    return m


@dataclass(frozen=True)
class OrientationCursor:
    """Position ``index`` in the orientation stream of ``partition``."""

    partition: Partition
    index: int = 0
    cross_pairs: tuple[tuple[int, int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        p = tuple(self.partition)
        object.__setattr__(self, "partition", p)
        object.__setattr__(self, "cross_pairs", cross_pairs(p))
        if not 0 <= self.index <= self.total:
            raise ValueError(f"index {self.index} outside 0..{self.total}")

    @property
    def m(self) -> int:
        return len(self.cross_pairs)

    @property
    def total(self) -> int:
        return 1 << len(self.cross_pairs)

    def exhausted(self) -> bool:
        return self.index >= self.total

    def tournament(self) -> MultipartiteTournament:
        return tournament_at(self.partition, self.index)

    def advance(self, step: int = 1) -> OrientationCursor:
        return OrientationCursor(self.partition, min(self.index + step, self.total))


def tournament_at(part_sizes: Sequence[int], index: int) -> MultipartiteTournament:
    p = tuple(part_sizes)
    arcs = frozenset(
        (u, v) if index >> j & 1 else (v, u) for j, (u, v) in enumerate(cross_pairs(p))
    )
    return MultipartiteTournament(Digraph(sum(p), arcs), p)


def index_of(D: MultipartiteTournament) -> int:
    """Inverse of :func:`tournament_at`."""
    idx = 0
    for j, (u, v) in enumerate(cross_pairs(D.part_sizes)):
        if D.out_rows[u] >> v & 1:
            idx |= 1 << j
    return idx


def orientations(
    part_sizes: Sequence[int],
    start: int = 0,
    stop: Optional[int] = None,
    guard: int = DEFAULT_ORIENTATION_GUARD,
) -> Iterator[MultipartiteTournament]:
    """Every orientation of ``K_{part_sizes}`` with index in ``[start, stop)``,
    in index order."""
    p = tuple(part_sizes)
    m = _check_guard(p, guard)
    stop = (1 << m) if stop is None else min(stop, 1 << m)
    for i in range(start, stop):
        yield tournament_at(p, i)


def split_ranges(total: int, parts: int) -> list[tuple[int, int]]:
    """Cut ``range(total)`` into ``parts`` contiguous near-equal pieces."""
    parts = max(1, min(parts, total)) if total else 1
    step, extra = divmod(total, parts)
    out = []
    lo = 0
    for i in range(parts):
        hi = lo + step + (1 if i < extra else 0)
        out.append((lo, hi))
        lo = hi
    return out


def niche_masks(part_sizes: Sequence[int], start: int, stop: int) -> np.ndarray:
    """Edge masks of the niche graphs of orientations ``start..stop-1``."""
    p = tuple(part_sizes)
    n = sum(p)
    if n * (n - 1) // 2 > 64:
        raise GuardExceeded(f"vectorised niche masks need n <= 11, got {n}")
    idx = np.arange(start, stop, dtype=np.uint64)
    one = np.uint64(1)
    out = np.zeros((n, idx.size), dtype=np.uint64)
    inn = np.zeros((n, idx.size), dtype=np.uint64)
    for j, (u, v) in enumerate(cross_pairs(p)):
        fwd = (idx >> np.uint64(j)) & one
        back = fwd ^ one
        out[u] |= fwd << np.uint64(v)
        inn[v] |= fwd << np.uint64(u)
        out[v] |= back << np.uint64(u)
        inn[u] |= back << np.uint64(v)
    masks = np.zeros(idx.size, dtype=np.uint64)
    for e, (u, v) in enumerate(pair_list(n)):
        hit = ((out[u] & out[v]) | (inn[u] & inn[v])) != 0
        masks |= hit.astype(np.uint64) << np.uint64(e)
    return masks


def mask_counts(
    part_sizes: Sequence[int],
    start: int = 0,
    stop: Optional[int] = None,
    converse_reduce: bool = False,
    guard: int = DEFAULT_ORIENTATION_GUARD,
) -> dict[int, list[int]]:
    """``{niche edge mask: [multiplicity, first index]}`` over an index range.

    With ``converse_reduce`` only indices below ``2^(m-1)`` (those not larger
    than their bitwise complement) are evaluated and each is counted twice;
    a tournament and its converse have the same niche graph.
    """
    p = tuple(part_sizes)
    m = _check_guard(p, guard)
    total = 1 << m
    stop = total if stop is None else min(stop, total)
    weight = 1
    if converse_reduce:
        stop = min(stop, total >> 1)
        weight = 2
    acc: dict[int, list[int]] = {}
    for lo in range(start, stop, CHUNK):
        hi = min(stop, lo + CHUNK)
        masks = niche_masks(p, lo, hi)
        uniq, first, counts = np.unique(masks, return_index=True, return_counts=True)
        for mk, f, c in zip(uniq.tolist(), first.tolist(), counts.tolist()):
            slot = acc.get(mk)
            if slot is None:
                acc[mk] = [c * weight, lo + f]
            else:
                slot[0] += c * weight
    return acc


def merge_mask_counts(parts: Sequence[dict[int, list[int]]]) -> dict[int, list[int]]:
    """Associative union of :func:`mask_counts` results."""
    acc: dict[int, list[int]] = {}
    for d in parts:
        for mk, (c, f) in d.items():
            slot = acc.get(mk)
            if slot is None:
                acc[mk] = [c, f]
            else:
                slot[0] += c
                slot[1] = min(slot[1], f)
    return acc


def _mask_counts_job(args):
    return mask_counts(*args)


def parallel_mask_counts(
    part_sizes: Sequence[int],
    threads: int = 1,
    converse_reduce: bool = False,
    guard: int = DEFAULT_ORIENTATION_GUARD,
) -> dict[int, list[int]]:
    """:func:`mask_counts` over the whole stream, index ranges farmed out to
    a process pool when ``threads > 1``."""
    p = tuple(part_sizes)
    m = _check_guard(p, guard)
    total = 1 << m
    if converse_reduce:
        total >>= 1
    if threads <= 1 or total < 4 * CHUNK:
        return mask_counts(p, 0, total, converse_reduce, guard)
    jobs = [(p, lo, hi, converse_reduce, guard) for lo, hi in split_ranges(total, threads * 4)]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return merge_mask_counts(list(pool.map(_mask_counts_job, jobs)))


def niche_spectrum(
    part_sizes: Sequence[int],
    start: int = 0,
    stop: Optional[int] = None,
    converse_reduce: bool = False,
    guard: int = DEFAULT_ORIENTATION_GUARD,
) -> Counter:
    """Multiset of canonical niche graphs over the orientations of
    ``K_{part_sizes}`` (optionally restricted to an index range)."""
    p = tuple(part_sizes)
    n = sum(p)
    spec: Counter = Counter()
    for mk, (c, _) in mask_counts(p, start, stop, converse_reduce, guard).items():
        spec[canonical_form(Graph.from_mask(n, mk))] += c
    return spec


@lru_cache(maxsize=256)
def _partition_table(p: Partition) -> tuple[np.ndarray, np.ndarray]:
    # distinct niche masks of a small partition, ordered by first index
    acc = mask_counts(p)
    items = sorted(acc.items(), key=lambda kv: kv[1][1])
    masks = np.array([mk for mk, _ in items], dtype=np.uint64)
    first = np.array([f for _, (_, f) in items], dtype=np.int64)
    return masks, first


def _candidate_stream(p: Partition, guard: int):
    """(mask, first index) pairs in increasing first-index order."""
    m = _check_guard(p, guard)
    if m <= _TABLE_MAX_M:
        masks, first = _partition_table(p)
        yield from zip(masks.tolist(), first.tolist())
        return
    seen: set[int] = set()
    for lo in range(0, 1 << m, CHUNK):
        hi = min(1 << m, lo + CHUNK)
        uniq, f = np.unique(niche_masks(p, lo, hi), return_index=True)
        order = np.argsort(f)
        for mk, fi in zip(uniq[order].tolist(), f[order].tolist()):
            if mk not in seen:
                seen.add(mk)
                yield mk, lo + fi


def brute_force_realize(
    G: Graph,
    k: int,
    guard: int = DEFAULT_REALIZE_GUARD,
    orientation_guard: int = DEFAULT_ORIENTATION_GUARD,
) -> Optional[MultipartiteTournament]:
    """First ``k``-partite tournament (partition order, then index order)
    whose niche graph is isomorphic to ``G``; ``None`` if none exists."""
    if k < 2 or G.n < k:
        raise ValueError(f"need G.n >= k >= 2, got n={G.n}, k={k}")
    if G.n > guard:
        raise GuardExceeded(f"brute-force realisation limited to n <= {guard}, got {G.n}")
    n = G.n
    n_edges = len(G.edges)
    degs = sorted(G.degrees())
    for p in partitions(n, k):
        for mk, idx in _candidate_stream(p, orientation_guard):
            if int(mk).bit_count() != n_edges:
                continue
            H = Graph.from_mask(n, mk)
            if sorted(H.degrees()) != degs:
                continue
            if isomorphic(H, G) is not None:
                return tournament_at(p, idx)
    return None


def realizable_forms(n: int, k: int, guard: int = DEFAULT_ORIENTATION_GUARD) -> set[CanonicalForm]:
    """Canonical forms of every niche graph of an ``n``-vertex ``k``-partite
    tournament."""
    out: set[CanonicalForm] = set()
    for p in partitions(n, k):
        out.update(niche_spectrum(p, converse_reduce=True, guard=guard))
    return out


def default_threads() -> int:
    return max(1, os.cpu_count() or 1)
