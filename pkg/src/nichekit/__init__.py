"""Niche graphs of multipartite tournaments: the niche operator,
realizability decisions with witnesses, and exhaustive verification."""

from .enumeration import (
    OrientationCursor,
    brute_force_realize,
    niche_spectrum,
    orientations,
    partitions,
)
from .graph_core import (
    Digraph,
    Graph,
    GraphError,
    MultipartiteTournament,
    build_digraph,
    build_graph,
    build_tournament,
    converse,
    induced_subtournament,
)
from .niche import (
    ExpansionSpec,
    TwinClasses,
    expand,
    niche_graph,
    recognize_expansion_p3_k1,
    twin_classes_digraph,
    twin_classes_graph,
)
from .properties import (
    CanonicalForm,
    GuardExceeded,
    canonical_form,
    components,
    diameter,
    has_triangle,
    is_p6_free,
    isomorphic,
    recognize_disjoint_cliques,
    stability_number,
)
from .realizability import (
    Answer,
    Verdict,
    construct_complete,
    construct_expansion_witness,
    construct_named,
    construct_three_cliques,
    decide,
)

__version__ = "0.1.0"

__all__ = [
    "OrientationCursor",
    "brute_force_realize",
    "niche_spectrum",
    "orientations",
    "partitions",
    "Digraph",
    "Graph",
    "GraphError",
    "MultipartiteTournament",
    "build_digraph",
    "build_graph",
    "build_tournament",
    "converse",
    "induced_subtournament",
    "ExpansionSpec",
    "TwinClasses",
    "expand",
    "niche_graph",
    "recognize_expansion_p3_k1",
    "twin_classes_digraph",
    "twin_classes_graph",
    "CanonicalForm",
    "GuardExceeded",
    "canonical_form",
    "components",
    "diameter",
    "has_triangle",
    "is_p6_free",
    "isomorphic",
    "recognize_disjoint_cliques",
    "stability_number",
    "Answer",
    "Verdict",
    "construct_complete",
    "construct_expansion_witness",
    "construct_named",
    "construct_three_cliques",
    "decide",
]
