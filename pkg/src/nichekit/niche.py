"""Niche-graph operator, true twins, and clique expansions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .graph_core import Digraph, Graph, GraphError, MultipartiteTournament, pair_list

DigraphLike = Union[Digraph, MultipartiteTournament]

# P3 u K1 with the isolated vertex first: 0 | 1 - 2 - 3
P3_K1 = Graph(4, frozenset({(1, 2), (2, 3)}))


def niche_graph(D: DigraphLike) -> Graph:
    """``uv`` is an edge iff ``u`` and ``v`` share an out-neighbour or an
    in-neighbour."""
    out, inn = D.out_rows, D.in_rows
    edges = frozenset(
        (u, v) for u, v in pair_list(D.n) if out[u] & out[v] or inn[u] & inn[v]
    )
    return Graph(D.n, edges)


@dataclass(frozen=True)
class TwinClasses:
    """Partition of ``0..n-1``; classes sorted by least member."""

    classes: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.classes)

    def sizes(self) -> list[int]:
        return [len(c) for c in self.classes]

    def class_of(self, v: int) -> tuple[int, ...]:
        for c in self.classes:
            if v in c:
                return c
        raise KeyError(v)

    def nontrivial(self) -> list[tuple[int, ...]]:
        return [c for c in self.classes if len(c) > 1]


def _group(keys: Sequence) -> TwinClasses:
    groups: dict = {}
    for v, key in enumerate(keys):
        groups.setdefault(key, []).append(v)
    return TwinClasses(tuple(sorted(tuple(g) for g in groups.values())))


def twin_classes_digraph(D: DigraphLike) -> TwinClasses:
    """Group vertices with equal open out- and in-neighbourhoods."""
    return _group(list(zip(D.out_rows, D.in_rows)))


def twin_classes_graph(G: Graph) -> TwinClasses:
    """Group vertices with equal closed neighbourhoods. Two isolated vertices
    are not twins since ``{u} != {v}``."""
    return _group([row | (1 << v) for v, row in enumerate(G.adj)])


@dataclass(frozen=True)
class ExpansionSpec:
    base: Graph
    sizes: tuple[int, ...]

    def __post_init__(self):
        sizes = tuple(int(s) for s in self.sizes)
        if len(sizes) != self.base.n:
            raise GraphError(f"need one size per base vertex ({self.base.n}), got {len(sizes)}")
        if any(s < 1 for s in sizes):
            raise GraphError(f"clique sizes must be >= 1: {list(sizes)}")
        object.__setattr__(self, "sizes", sizes)


def expand(spec: ExpansionSpec) -> Graph:
    """Replace base vertex ``i`` by a clique of ``spec.sizes[i]`` vertices;
    blocks follow base-vertex order."""
    blocks = []
    start = 0
    for s in spec.sizes:
        blocks.append(range(start, start + s))
        start += s
    edges = set()
    for b in blocks:
        edges.update((u, v) for u in b for v in b if u < v)
    for a, b in spec.base.edges:
        edges.update((u, v) for u in blocks[a] for v in blocks[b])
    return Graph(start, frozenset(edges))


def quotient(G: Graph, classes: TwinClasses) -> Graph:
    """Graph on the twin classes; two classes are adjacent iff their
    representatives are."""
    reps = [c[0] for c in classes.classes]
    return Graph(
        len(reps),
        frozenset((i, j) for i, j in pair_list(len(reps)) if G.has_edge(reps[i], reps[j])),
    )


def recognize_expansion_p3_k1(G: Graph) -> Optional[ExpansionSpec]:
    """Sizes ``(isolated, end, middle, end)`` if ``G`` is an expansion of
    ``P3 u K1``, else ``None``."""
    tc = twin_classes_graph(G)
    if len(tc) != 4:
        return None
    Q = quotient(G, tc)
    degs = Q.degrees()
    if len(Q.edges) != 2 or sorted(degs) != [0, 1, 1, 2]:
        return None
    iso = degs.index(0)
    mid = degs.index(2)
    ends = [i for i in range(4) if degs[i] == 1]
    sizes = [len(tc.classes[i]) for i in (iso, ends[0], mid, ends[1])]
    return ExpansionSpec(P3_K1, tuple(sizes))
