"""Small named graphs used by the characterisation tables."""

from __future__ import annotations

from .graph_core import Graph, pair_list


def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(n, frozenset((min(i, (i + 1) % n), max(i, (i + 1) % n)) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(pair_list(n)))


def empty_graph(n: int) -> Graph:
    return Graph(n, frozenset())


def disjoint_union(*graphs: Graph) -> Graph:
    edges = set()
    offset = 0
    for g in graphs:
        edges.update((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph(offset, frozenset(edges))


def complete_multipartite_graph(*sizes: int) -> Graph:
    lab = [i for i, s in enumerate(sizes) for _ in range(s)]
    return Graph(len(lab), frozenset((u, v) for u, v in pair_list(len(lab)) if lab[u] != lab[v]))


# The 5-vertex graph: a 4-cycle 0-1-2-3 plus vertex 4 joined to 1 and 3.
G4 = Graph(5, frozenset({(0, 1), (0, 3), (1, 2), (2, 3), (3, 4), (1, 4)}))
# The 6-vertex cubic graph: hexagon 0..5 plus the three long diagonals.
G5 = Graph(6, frozenset({(0, 1), (0, 3), (1, 2), (1, 4), (2, 3), (2, 5), (3, 4), (4, 5), (0, 5)}))

NAMED_TARGETS = {
    "P3": path_graph(3),
    "P4": path_graph(4),
    "P5": path_graph(5),
    "C5": cycle_graph(5),
    "C6": cycle_graph(6),
    "G4": G4,
    "G5": G5,
}
