"""Immutable graph, digraph and multipartite-tournament value types.

Vertices are always ``0..n-1``. Every value carries per-vertex adjacency
bit rows (bit ``w`` of ``row[v]`` set iff ``w`` is a neighbour) because
neighbourhood intersection is the hot operation everywhere else.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

Partition = tuple[int, ...]


class GraphError(ValueError):
    """Raised when a vertex/edge/arc set violates a type invariant."""


@lru_cache(maxsize=None)
def pair_list(n: int) -> tuple[tuple[int, int], ...]:
    """All pairs ``u < v`` on ``n`` vertices, lexicographic. Bit ``i`` of an
    edge mask refers to ``pair_list(n)[i]``."""
    return tuple(combinations(range(n), 2))


@lru_cache(maxsize=None)
def pair_index(n: int) -> dict[tuple[int, int], int]:
    return {p: i for i, p in enumerate(pair_list(n))}


def _bits(row: int) -> list[int]:
    out = []
    while row:
        low = row & -row
        out.append(low.bit_length() - 1)
        row ^= low
    return out


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on ``0..n-1``."""

    n: int
    edges: frozenset[tuple[int, int]]
    adj: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        norm = set()
        rows = [0] * self.n
        for e in self.edges:
            u, v = e
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"endpoint out of range in edge {e} (n={self.n})")
            if u == v:
                raise GraphError(f"loop edge ({u},{v})")
            if u > v:
                u, v = v, u
            norm.add((u, v))
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "adj", tuple(rows))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> Graph:
        pairs = pair_list(n)
        return cls(n, frozenset(pairs[i] for i in _bits(int(mask))))

    @property
    def mask(self) -> int:
        idx = pair_index(self.n)
        m = 0
        for e in self.edges:
            m |= 1 << idx[e]
        return m

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.adj]

    def delete_vertex(self, v: int) -> Graph:
        """Remove ``v`` and shift higher labels down by one."""
        def f(x):
            return x - 1 if x > v else x
        return Graph(self.n - 1, frozenset((f(a), f(b)) for a, b in self.edges if v not in (a, b)))

    def complement(self) -> Graph:
        return Graph(self.n, frozenset(p for p in pair_list(self.n) if p not in self.edges))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Image of the graph under ``v -> perm[v]``."""
        return Graph(self.n, frozenset((perm[a], perm[b]) for a, b in self.edges))


@dataclass(frozen=True)
class Digraph:
    """Loop-free digraph on ``0..n-1``; digons are allowed."""

    n: int
    arcs: frozenset[tuple[int, int]]
    out_rows: tuple[int, ...] = field(init=False, repr=False, compare=False)
    in_rows: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        out = [0] * self.n
        inn = [0] * self.n
        arcs = frozenset(tuple(a) for a in self.arcs)
        for u, v in arcs:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"endpoint out of range in arc ({u},{v}) (n={self.n})")
            if u == v:
                raise GraphError(f"loop arc ({u},{v})")
            out[u] |= 1 << v
            inn[v] |= 1 << u
        object.__setattr__(self, "arcs", arcs)
        object.__setattr__(self, "out_rows", tuple(out))
        object.__setattr__(self, "in_rows", tuple(inn))

    def out_neighbors(self, v: int) -> list[int]:
        return _bits(self.out_rows[v])

    def in_neighbors(self, v: int) -> list[int]:
        return _bits(self.in_rows[v])

    def arc_list(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)


def part_blocks(part_sizes: Sequence[int]) -> list[range]:
    blocks = []
    start = 0
    for s in part_sizes:
        blocks.append(range(start, start + s))
        start += s
    return blocks


def part_labels(part_sizes: Sequence[int]) -> list[int]:
    """``labels[v]`` is the index of the part containing ``v``."""
    return [i for i, s in enumerate(part_sizes) for _ in range(s)]


@lru_cache(maxsize=None)
def cross_pairs(part_sizes: Partition) -> tuple[tuple[int, int], ...]:
    """Inter-part pairs ``(u, v)``, ``u < v``, in lexicographic order."""
    lab = part_labels(part_sizes)
    return tuple((u, v) for u, v in pair_list(len(lab)) if lab[u] != lab[v])


def _check_part_sizes(part_sizes: Sequence[int]) -> Partition:
    ps = tuple(int(s) for s in part_sizes)
    if len(ps) < 2:
        raise GraphError(f"a multipartite tournament needs at least 2 parts, got {len(ps)}")
    if any(s < 1 for s in ps):
        raise GraphError(f"part sizes must be positive: {list(ps)}")
    return ps


@dataclass(frozen=True)
class MultipartiteTournament:
    """Orientation of the complete multipartite graph ``K_{part_sizes}``.

    Part ``i`` is the consecutive index block after parts ``0..i-1``.
    """

    digraph: Digraph
    part_sizes: Partition

    def __post_init__(self):
        ps = _check_part_sizes(self.part_sizes)
        object.__setattr__(self, "part_sizes", ps)
        D = self.digraph
        if sum(ps) != D.n:
            raise GraphError(f"part sizes sum to {sum(ps)} but digraph has {D.n} vertices")
        lab = part_labels(ps)
        for u, v in D.arcs:
            if lab[u] == lab[v]:
                raise GraphError(f"arc ({u},{v}) joins two vertices of part {lab[u]}")
        for u, v in cross_pairs(ps):
            fwd = D.out_rows[u] >> v & 1
            back = D.out_rows[v] >> u & 1
            if fwd and back:
                raise GraphError(f"digon between {u} and {v}")
            if not (fwd or back):
                raise GraphError(f"missing cross-part pair: no arc between {u} and {v}")

    @property
    def n(self) -> int:
        return self.digraph.n

    @property
    def k(self) -> int:
        return len(self.part_sizes)

    @property
    def arcs(self) -> frozenset[tuple[int, int]]:
        return self.digraph.arcs

    @property
    def out_rows(self) -> tuple[int, ...]:
        return self.digraph.out_rows

    @property
    def in_rows(self) -> tuple[int, ...]:
        return self.digraph.in_rows

    def parts(self) -> list[range]:
        return part_blocks(self.part_sizes)

    def part_of(self, v: int) -> int:
        return part_labels(self.part_sizes)[v]

    def arc_list(self) -> list[tuple[int, int]]:
        return self.digraph.arc_list()


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Validated graph; duplicate pairs (in either order) collapse."""
    return Graph(int(n), frozenset((int(u), int(v)) for u, v in edges))


def build_digraph(n: int, arcs: Iterable[Sequence[int]]) -> Digraph:
    return Digraph(int(n), frozenset((int(u), int(v)) for u, v in arcs))


def build_tournament(part_sizes: Sequence[int], arcs: Iterable[Sequence[int]]) -> MultipartiteTournament:
    """Validated multipartite tournament.

    >>> build_tournament([1, 1, 1], [(0, 1), (1, 2), (2, 0)]).k
    3
    """
    ps = _check_part_sizes(part_sizes)
    return MultipartiteTournament(build_digraph(sum(ps), arcs), ps)


def converse(D: MultipartiteTournament) -> MultipartiteTournament:
    return MultipartiteTournament(Digraph(D.n, frozenset((v, u) for u, v in D.arcs)), D.part_sizes)


def induced_subtournament(D: MultipartiteTournament, S: Iterable[int]) -> MultipartiteTournament:
    """Restriction of ``D`` to ``S``, relabelled ``0..|S|-1`` in vertex order.

    Parts that lose all their vertices are dropped.
    """
    keep = sorted(set(S))
    if any(not 0 <= v < D.n for v in keep):
        raise GraphError(f"vertex subset {keep} not inside 0..{D.n - 1}")
    lab = part_labels(D.part_sizes)
    sizes = [0] * D.k
    for v in keep:
        sizes[lab[v]] += 1
    sizes = [s for s in sizes if s]
    if len(sizes) < 2:
        raise GraphError(f"subset {keep} meets fewer than 2 parts")
    new = {v: i for i, v in enumerate(keep)}
    arcs = frozenset((new[u], new[v]) for u, v in D.arcs if u in new and v in new)
    return MultipartiteTournament(Digraph(len(keep), arcs), tuple(sizes))


def delete_vertex(D: MultipartiteTournament, v: int) -> MultipartiteTournament:
    return induced_subtournament(D, [u for u in range(D.n) if u != v])
