"""Exact structural predicates on small graphs.

Everything works on the ``Graph.adj`` bit rows. Size guards protect the
exponential routines.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .graph_core import Graph, pair_index, pair_list

MAX_STABILITY_N = 64
MAX_P6_N = 64
MAX_ISO_N = 12


class GuardExceeded(ValueError):
    """Input is larger than an exhaustive routine is allowed to handle."""


def _guard(G: Graph, limit: int, what: str):
    if G.n > limit:
        raise GuardExceeded(f"{what} supports n <= {limit}, got n = {G.n}")


def _low(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def components(G: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by least vertex."""
    seen = 0
    comps = []
    for v in range(G.n):
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in _iter_bits(frontier):
                nxt |= G.adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(list(_iter_bits(comp)))
    return comps


def is_connected(G: Graph) -> bool:
    return len(components(G)) == 1


def _clique_cover_bound(G: Graph, cand: int) -> int:
    # Greedy partition of cand into cliques; a stable set takes at most one
    # vertex from each clique.
    count = 0
    while cand:
        v = _low(cand)
        clique_ok = cand & G.adj[v]
        cand &= ~(1 << v)
        while clique_ok:
            u = _low(clique_ok)
            cand &= ~(1 << u)
            clique_ok &= G.adj[u]
        count += 1
    return count


def stability_number(G: Graph) -> int:
    """Exact maximum stable-set size by bitset branch and bound."""
    _guard(G, MAX_STABILITY_N, "stability_number")
    best = 0

    def search(cand: int, size: int):
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + _clique_cover_bound(G, cand) <= best:
            return
        # branch on a vertex of maximum degree within cand
        v = max(_iter_bits(cand), key=lambda x: (G.adj[x] & cand).bit_count())
        search(cand & ~G.adj[v] & ~(1 << v), size + 1)
        if G.adj[v] & cand:
            search(cand & ~(1 << v), size)

    search((1 << G.n) - 1, 0)
    return best


def clique_number(G: Graph) -> int:
    return stability_number(G.complement())


def eccentricities(G: Graph) -> list[float]:
    full = (1 << G.n) - 1
    ecc = []
    for v in range(G.n):
        reached = frontier = 1 << v
        dist = 0
        while True:
            nxt = 0
            for u in _iter_bits(frontier):
                nxt |= G.adj[u]
            frontier = nxt & ~reached
            if not frontier:
                break
            reached |= frontier
            dist += 1
        ecc.append(dist if reached == full else math.inf)
    return ecc


def diameter(G: Graph) -> float:
    """Largest eccentricity; ``math.inf`` if disconnected or empty."""
    if G.n == 0:
        return math.inf
    return max(eccentricities(G))


def component_diameters(G: Graph) -> list[int]:
    out = []
    for comp in components(G):
        out.append(int(diameter(induced_subgraph(G, comp))))
    return out


def induced_subgraph(G: Graph, vertices) -> Graph:
    keep = sorted(vertices)
    new = {v: i for i, v in enumerate(keep)}
    return Graph(len(keep), frozenset((new[u], new[v]) for u, v in G.edges if u in new and v in new))


def has_triangle(G: Graph) -> bool:
    return any(G.adj[u] & G.adj[v] for u, v in G.edges)


def find_induced_path(G: Graph, length: int) -> Optional[list[int]]:
    """Vertices of an induced path on ``length`` vertices, or ``None``.

    Grows induced paths vertex by vertex: each new vertex must be adjacent
    to the current end and to nothing else already on the path.
    """
    adj = G.adj

    def grow(path: list[int], on_path: int, interior: int):
        if len(path) == length:
            return path
        end = path[-1]
        for w in _iter_bits(adj[end] & ~on_path):
            if adj[w] & interior:
                continue
            found = grow(path + [w], on_path | (1 << w), interior | (1 << end))
            if found:
                return found
        return None

    for s in range(G.n):
        found = grow([s], 1 << s, 0)
        if found:
            return found
    return None


def is_p6_free(G: Graph) -> bool:
    """True iff ``G`` has no induced path on six vertices."""
    _guard(G, MAX_P6_N, "is_p6_free")
    return find_induced_path(G, 6) is None


def recognize_disjoint_cliques(G: Graph) -> Optional[list[int]]:
    """Component sizes (descending) if every component is complete."""
    sizes = []
    for comp in components(G):
        s = len(comp)
        if any(G.adj[v].bit_count() != s - 1 for v in comp):
            return None
        sizes.append(s)
    return sorted(sizes, reverse=True)


def _vertex_invariants(G: Graph) -> list[tuple]:
    degs = G.degrees()
    return [(degs[v], tuple(sorted(degs[u] for u in _iter_bits(G.adj[v])))) for v in range(G.n)]


def isomorphic(G: Graph, H: Graph) -> Optional[list[int]]:
    """A bijection ``phi`` (as a list, ``phi[g] = h``) carrying ``E(G)``
    onto ``E(H)``, or ``None``."""
    _guard(G, MAX_ISO_N, "isomorphic")
    _guard(H, MAX_ISO_N, "isomorphic")
    if G.n != H.n or len(G.edges) != len(H.edges):
        return None
    ig, ih = _vertex_invariants(G), _vertex_invariants(H)
    if sorted(ig) != sorted(ih):
        return None
    # high-degree vertices first; they constrain the rest most
    order = sorted(range(G.n), key=lambda v: (-ig[v][0], v))
    phi = [-1] * G.n
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == G.n:
            return True
        g = order[i]
        for h in range(H.n):
            if used >> h & 1 or ih[h] != ig[g]:
                continue
            ok = True
            for j in range(i):
                g2 = order[j]
                if (G.adj[g] >> g2 & 1) != (H.adj[h] >> phi[g2] & 1):
                    ok = False
                    break
            if not ok:
                continue
            phi[g] = h
            used |= 1 << h
            if extend(i + 1):
                return True
            used &= ~(1 << h)
            phi[g] = -1
        return False

    return list(phi) if extend(0) else None


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Isomorphism-invariant encoding: one byte for ``n`` followed by the
    upper-triangle adjacency bits of the canonical relabelling."""

    data: bytes

    @property
    def n(self) -> int:
        return self.data[0]

    def graph(self) -> Graph:
        pairs = pair_list(self.n)
        code = int.from_bytes(self.data[1:], "big")
        top = len(pairs) - 1
        return Graph(self.n, frozenset(p for i, p in enumerate(pairs) if code >> (top - i) & 1))

    def __str__(self):
        g = self.graph()
        edges = ",".join(f"{u}-{v}" for u, v in g.edge_list())
        return f"n={g.n} edges={edges or '-'}"


def _refine(G: Graph, colors: list[int]) -> list[int]:
    """Colour refinement to a stable equitable colouring. Colours are ranks
    of sorted signatures, so the result is permutation-equivariant."""
    n_classes = len(set(colors))
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in _iter_bits(G.adj[v]))))
            for v in range(G.n)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [rank[s] for s in sigs]
        if len(rank) == n_classes:
            return colors
        n_classes = len(rank)


def _encode(G: Graph, perm: list[int]) -> int:
    idx = pair_index(G.n)
    m = 0
    for u, v in G.edges:
        a, b = perm[u], perm[v]
        if a > b:
            a, b = b, a
        # first pair gets the most significant bit so lexicographic order
        # of pair_list matches numeric order of the code
        m |= 1 << (len(idx) - 1 - idx[(a, b)])
    return m


def canonical_form(G: Graph) -> CanonicalForm:
    """Minimum adjacency code over the leaves of an individualisation and
    refinement search tree; degree-based refinement prunes the permutations
    that are tried."""
    _guard(G, MAX_ISO_N, "canonical_form")
    n = G.n
    nbytes = (n * (n - 1) // 2 + 7) // 8
    best: Optional[int] = None

    def search(colors: list[int]):
        nonlocal best
        colors = _refine(G, colors)
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = next((c for c in sorted(counts) if counts[c] > 1), None)
        if target is None:
            code = _encode(G, colors)
            if best is None or code < best:
                best = code
            return
        for v in range(n):
            if colors[v] != target:
                continue
            split = [2 * c + (1 if c == target and u != v else 0) for u, c in enumerate(colors)]
            search(split)

    search([0] * n)
    return CanonicalForm(bytes([n]) + (best or 0).to_bytes(nbytes, "big"))
