"""Text formats for graphs, hypergraphs and 0/1 matrices.

Graph and hypergraph files start with ``graph N`` or ``hypergraph N``.
Vertices are 1..N unless a ``names:`` line follows the header.  Every other
line lists the vertices of one edge or hyperedge; hyperedge lines may end
with ``color=<int>`` and ``mult=<int>`` tokens, and a lone ``-`` stands for
the empty hyperedge.  ``#`` starts a comment.  Matrix files hold bare rows
of 0/1 digits, optionally space separated.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .core import Edge, Graph, Hypergraph, sort_vertices

_INT = re.compile(r"-?\d+\Z")


class ParseError(ValueError):
    def __init__(self, line: int, col: int, message: str):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col


def parse_name(token: str):
    return int(token) if _INT.match(token) else token


def format_name(v) -> str:
    return str(v)


@dataclass
class _Line:
    number: int
    tokens: list[tuple[int, str]]  # (column, token)


def _lines(text: str) -> list[_Line]:
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        toks = [(m.start() + 1, m.group()) for m in re.finditer(r"\S+", body)]
        if toks:
            out.append(_Line(i, toks))
    return out


def parse_structure(text: str) -> Union[Graph, Hypergraph]:
    lines = _lines(text)
    if not lines:
        raise ParseError(1, 1, "empty input")
    head = lines[0]
    kind = head.tokens[0][1]
    if kind not in ("graph", "hypergraph") or len(head.tokens) != 2:
        raise ParseError(head.number, head.tokens[0][0], "expected 'graph N' or 'hypergraph N'")
    col, count = head.tokens[1]
    if not count.isdigit():
        raise ParseError(head.number, col, f"vertex count must be a non-negative integer, got {count!r}")
    n = int(count)
    body = lines[1:]
    names = list(range(1, n + 1))
    if body and body[0].tokens[0][1] == "names:":
        line = body[0]
        names = [parse_name(t) for _, t in line.tokens[1:]]
        if len(names) != n:
            raise ParseError(line.number, line.tokens[0][0], f"expected {n} names, got {len(names)}")
        if len(set(names)) != n:
            raise ParseError(line.number, line.tokens[0][0], "duplicate vertex names")
        body = body[1:]
    known = set(names)
    if kind == "graph":
        return _parse_graph_body(body, names, known)
    return _parse_hypergraph_body(body, names, known)


def _vertex(line: _Line, col: int, token: str, known: set):
    v = parse_name(token)
    if v not in known:
        raise ParseError(line.number, col, f"unknown vertex {token!r}")
    return v


def _parse_graph_body(body, names, known) -> Graph:
    edges = []
    for line in body:
        if len(line.tokens) != 2:
            raise ParseError(line.number, line.tokens[0][0], "graph edge lines hold exactly two vertices")
        (ca, a), (cb, b) = line.tokens
        u, v = _vertex(line, ca, a, known), _vertex(line, cb, b, known)
        if u == v:
            raise ParseError(line.number, cb, "loops are not allowed")
        edges.append((u, v))
    return Graph(names, edges)


def _parse_hypergraph_body(body, names, known) -> Hypergraph:
    edges = []
    for line in body:
        members, color, mult = [], 0, 1
        empty = False
        for col, tok in line.tokens:
            if tok.startswith("color=") or tok.startswith("mult="):
                key, _, val = tok.partition("=")
                if not _INT.match(val):
                    raise ParseError(line.number, col, f"{key} needs an integer")
                if key == "color":
                    color = int(val)
                else:
                    mult = int(val)
                    if mult < 1:
                        raise ParseError(line.number, col, "mult must be positive")
            elif tok == "-":
                empty = True
            else:
                members.append(_vertex(line, col, tok, known))
        if empty and members:
            raise ParseError(line.number, line.tokens[0][0], "'-' marks an empty hyperedge and takes no vertices")
        if not empty and not members:
            raise ParseError(line.number, line.tokens[0][0], "hyperedge without vertices (use '-' for the empty set)")
        edges.append(Edge(frozenset(members), mult, color))
    return Hypergraph(names, edges)


def parse_graph(text: str) -> Graph:
    s = parse_structure(text)
    if not isinstance(s, Graph):
        raise ParseError(1, 1, "expected a graph file")
    return s


def parse_hypergraph(text: str) -> Hypergraph:
    s = parse_structure(text)
    if not isinstance(s, Hypergraph):
        raise ParseError(1, 1, "expected a hypergraph file")
    return s


def parse_matrix(text: str) -> list[list[int]]:
    rows = []
    width = None
    for line in _lines(text):
        row = []
        for col, tok in line.tokens:
            for k, ch in enumerate(tok):
                if ch not in "01":
                    raise ParseError(line.number, col + k, f"matrix entries are 0 or 1, got {ch!r}")
                row.append(int(ch))
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ParseError(line.number, 1, f"row has {len(row)} entries, expected {width}")
        rows.append(row)
    return rows


def _names_header(vertices) -> list[str]:
    if list(vertices) == list(range(1, len(vertices) + 1)):
        return []
    return ["names: " + " ".join(format_name(v) for v in vertices)]


def emit_graph(g: Graph) -> str:
    lines = [f"graph {g.n}", *_names_header(g.vertices)]
    lines += [f"{format_name(u)} {format_name(v)}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def emit_hypergraph(h: Hypergraph) -> str:
    lines = [f"hypergraph {h.n}", *_names_header(h.vertices)]
    for e in h.edges:
        toks = [format_name(v) for v in sort_vertices(e.members)] or ["-"]
        if e.color:
            toks.append(f"color={e.color}")
        if e.mult != 1:
            toks.append(f"mult={e.mult}")
        lines.append(" ".join(toks))
    return "\n".join(lines) + "\n"


def emit_matrix(m) -> str:
    return "".join("".join(str(b) for b in row) + "\n" for row in m)
