"""Line-based text formats, JSON mirrors and DOT export.

Graph file::

    graph 4
    e 1 2
    e 1 3

Tournament file::

    tournament 3
    parts 2 1 1
    a 0 2

``#`` starts a comment. Writers emit sorted edges/arcs so output can be
diffed.
"""

from __future__ import annotations

import json
from typing import Union

from .graph_core import (
    Graph,
    GraphError,
    MultipartiteTournament,
    build_graph,
    build_tournament,
)


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield no, body.split()


def _ints(tokens, no):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"expected integers, got {' '.join(tokens)!r}", no) from None


def parse_graph(text: str) -> Graph:
    it = _lines(text)
    try:
        no, head = next(it)
    except StopIteration:
        raise FormatError("empty graph file") from None
    if head[0] != "graph" or len(head) != 2:
        raise FormatError("expected header 'graph <n>'", no)
    (n,) = _ints(head[1:], no)
    if n < 0:
        raise FormatError("vertex count must be nonnegative", no)
    edges = []
    for no, tok in it:
        if tok[0] != "e" or len(tok) != 3:
            raise FormatError(f"expected 'e <u> <v>', got {' '.join(tok)!r}", no)
        u, v = _ints(tok[1:], no)
        try:
            build_graph(n, [(u, v)])
        except GraphError as exc:
            raise FormatError(str(exc), no) from None
        edges.append((u, v))
    return build_graph(n, edges)


def parse_tournament(text: str) -> MultipartiteTournament:
    it = _lines(text)
    try:
        no, head = next(it)
    except StopIteration:
        raise FormatError("empty tournament file") from None
    if head[0] != "tournament" or len(head) != 2:
        raise FormatError("expected header 'tournament <k>'", no)
    (k,) = _ints(head[1:], no)
    try:
        no, tok = next(it)
    except StopIteration:
        raise FormatError("missing 'parts' line") from None
    if tok[0] != "parts":
        raise FormatError("expected 'parts <s1> ... <sk>'", no)
    parts = _ints(tok[1:], no)
    if len(parts) != k:
        raise FormatError(f"header declares {k} parts but 'parts' lists {len(parts)}", no)
    if any(s < 1 for s in parts):
        raise FormatError("part sizes must be positive", no)
    n = sum(parts)
    arcs = []
    for no, tok in it:
        if tok[0] != "a" or len(tok) != 3:
            raise FormatError(f"expected 'a <u> <v>', got {' '.join(tok)!r}", no)
        u, v = _ints(tok[1:], no)
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"arc endpoint out of range 0..{n - 1}", no)
        if u == v:
            raise FormatError(f"loop arc ({u},{v})", no)
        arcs.append((u, v))
    try:
        return build_tournament(parts, arcs)
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def format_graph(G: Graph) -> str:
    lines = [f"graph {G.n}"]
    lines += [f"e {u} {v}" for u, v in G.edge_list()]
    return "\n".join(lines) + "\n"


def format_tournament(D: MultipartiteTournament) -> str:
    lines = [f"tournament {D.k}", "parts " + " ".join(map(str, D.part_sizes))]
    lines += [f"a {u} {v}" for u, v in D.arc_list()]
    return "\n".join(lines) + "\n"


def graph_to_json(G: Graph) -> dict:
    return {"n": G.n, "edges": [list(e) for e in G.edge_list()]}


def tournament_to_json(D: MultipartiteTournament) -> dict:
    return {"parts": list(D.part_sizes), "arcs": [list(a) for a in D.arc_list()]}


def graph_from_json(obj: dict) -> Graph:
    try:
        return build_graph(obj["n"], obj["edges"])
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed graph JSON: {exc}") from None
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def tournament_from_json(obj: dict) -> MultipartiteTournament:
    try:
        return build_tournament(obj["parts"], obj["arcs"])
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed tournament JSON: {exc}") from None
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def _load_json(text: str) -> dict:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(obj, dict):
        raise FormatError("JSON document must be an object")
    return obj


def read_graph(text: str) -> Graph:
    """Parse either the text format or the JSON mirror."""
    if text.lstrip().startswith("{"):
        return graph_from_json(_load_json(text))
    return parse_graph(text)


def read_tournament(text: str) -> MultipartiteTournament:
    if text.lstrip().startswith("{"):
        return tournament_from_json(_load_json(text))
    return parse_tournament(text)


def to_dot(obj: Union[Graph, MultipartiteTournament], name: str = "G") -> str:
    if isinstance(obj, Graph):
        body = [f"  {v};" for v in range(obj.n)]
        body += [f"  {u} -- {v};" for u, v in obj.edge_list()]
        return f"graph {name} {{\n" + "\n".join(body) + "\n}\n"
    body = [f"  {v};" for v in range(obj.n)]
    body += [f"  {u} -> {v};" for u, v in obj.arc_list()]
    return f"digraph {name} {{\n" + "\n".join(body) + "\n}\n"
