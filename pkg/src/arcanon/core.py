"""Hypergraphs, graphs, arc/interval models and the constructions between them."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Hashable, Iterable, Iterator, Mapping, NamedTuple, Sequence

Vertex = Hashable


def vertex_key(v: Vertex):
    """Total order on vertex names: ints numerically, then strings, then tuples."""
    if isinstance(v, bool):
        return (0, int(v))
    if isinstance(v, int):
        return (0, v)
    if isinstance(v, str):
        return (1, v)
    if isinstance(v, tuple):
        return (2, tuple(vertex_key(x) for x in v))
    return (3, repr(v))


def sort_vertices(vs: Iterable[Vertex]) -> list:
    return sorted(vs, key=vertex_key)


def set_key(s: Iterable[Vertex]):
    return tuple(vertex_key(v) for v in sort_vertices(s))


# --------------------------------------------------------------------------
# hypergraphs


@dataclass(frozen=True)
class Edge:
    """One hyperedge entry: a vertex set with multiplicity and integer color."""

    members: frozenset
    mult: int = 1
    color: int = 0

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        if self.mult < 1:
            raise ValueError(f"multiplicity must be positive, got {self.mult}")

    def sort_key(self):
        return (len(self.members), set_key(self.members), self.color, self.mult)


def _as_edge(e) -> Edge:
    if isinstance(e, Edge):
        return e
    return Edge(frozenset(e))


class Hypergraph:
    """Edge-colored hypergraph with multiple hyperedges.

    Entries with equal vertex set and equal color are merged by summing their
    multiplicities; equal sets with different colors stay distinct.
    """

    __slots__ = ("vertices", "edges", "_vset")

    def __init__(self, vertices: Iterable[Vertex], edges: Iterable = ()):
        vs = sort_vertices(set(vertices))
        vset = frozenset(vs)
        merged: dict[tuple[frozenset, int], int] = defaultdict(int)
        for e in edges:
            e = _as_edge(e)
            if not e.members <= vset:
                stray = sort_vertices(e.members - vset)
                raise ValueError(f"hyperedge uses unknown vertices {stray}")
            merged[(e.members, e.color)] += e.mult
        es = [Edge(m, k, c) for (m, c), k in merged.items()]
        es.sort(key=Edge.sort_key)
        self.vertices: tuple = tuple(vs)
        self.edges: tuple[Edge, ...] = tuple(es)
        self._vset = vset

    @classmethod
    def from_sets(cls, vertices: Iterable[Vertex], sets: Iterable[Iterable[Vertex]]) -> Hypergraph:
        return cls(vertices, [Edge(frozenset(s)) for s in sets])

    @property
    def vertex_set(self) -> frozenset:
        return self._vset

    @property
    def n(self) -> int:
        return len(self.vertices)

    def edge_count(self) -> int:
        """Number of hyperedges counted with multiplicity."""
        return sum(e.mult for e in self.edges)

    def expanded(self) -> Iterator[Edge]:
        """Yield every hyperedge copy separately (multiplicity 1 each)."""
        for e in self.edges:
            for _ in range(e.mult):
                yield Edge(e.members, 1, e.color)

    def colors(self) -> set[int]:
        return {e.color for e in self.edges}

    def multiset(self) -> dict[tuple[frozenset, int], int]:
        return {(e.members, e.color): e.mult for e in self.edges}

    def relabel(self, mapping: Mapping[Vertex, Vertex]) -> Hypergraph:
        return Hypergraph(
            [mapping[v] for v in self.vertices],
            [Edge(frozenset(mapping[v] for v in e.members), e.mult, e.color) for e in self.edges],
        )

    def restrict(self, keep: Iterable[Vertex]) -> Hypergraph:
        """Induced sub-hypergraph: intersect every hyperedge with ``keep``."""
        keep = frozenset(keep)
        return Hypergraph(keep, [Edge(e.members & keep, e.mult, e.color) for e in self.edges])

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self._vset == other._vset and self.multiset() == other.multiset()

    def __hash__(self):
        return hash((self._vset, frozenset(self.multiset().items())))

    def __repr__(self):
        parts = []
        for e in self.edges:
            s = "{" + ",".join(map(str, sort_vertices(e.members))) + "}"
            if e.mult != 1:
                s += f"x{e.mult}"
            if e.color:
                s += f"c{e.color}"
            parts.append(s)
        return f"Hypergraph(V={list(self.vertices)}, E=[{', '.join(parts)}])"


# --------------------------------------------------------------------------
# graphs


class Graph:
    """Simple undirected graph on named vertices."""

    __slots__ = ("vertices", "adj")

    def __init__(self, vertices: Iterable[Vertex], edges: Iterable[tuple[Vertex, Vertex]] = ()):
        vs = sort_vertices(set(vertices))
        adj: dict[Vertex, set] = {v: set() for v in vs}
        for a, b in edges:
            if a == b:
                raise ValueError(f"loop at {a!r}")
            if a not in adj or b not in adj:
                raise ValueError(f"edge ({a!r}, {b!r}) uses an unknown vertex")
            adj[a].add(b)
            adj[b].add(a)
        self.vertices: tuple = tuple(vs)
        self.adj: dict[Vertex, frozenset] = {v: frozenset(s) for v, s in adj.items()}

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    def edges(self) -> list[tuple]:
        out = []
        for i, u in enumerate(self.vertices):
            for v in self.vertices[i + 1:]:
                if v in self.adj[u]:
                    out.append((u, v))
        return out

    def edge_set(self) -> frozenset:
        return frozenset(frozenset(e) for e in self.edges())

    def has_edge(self, u, v) -> bool:
        return v in self.adj[u]

    def open(self, v) -> frozenset:
        return self.adj[v]

    def closed(self, v) -> frozenset:
        return self.adj[v] | {v}

    def degree(self, v) -> int:
        return len(self.adj[v])

    def complement(self) -> Graph:
        return Graph(self.vertices, [(u, v) for u, v in combinations(self.vertices, 2) if v not in self.adj[u]])

    def induced(self, keep: Iterable[Vertex]) -> Graph:
        keep = set(keep)
        return Graph(keep, [(u, v) for u, v in self.edges() if u in keep and v in keep])

    def relabel(self, mapping: Mapping[Vertex, Vertex]) -> Graph:
        return Graph([mapping[v] for v in self.vertices], [(mapping[u], mapping[v]) for u, v in self.edges()])

    def components(self) -> list[list]:
        seen: set = set()
        comps = []
        for s in self.vertices:
            if s in seen:
                continue
            comp, stack = [], [s]
            seen.add(s)
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self.adj[u]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(sort_vertices(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def two_coloring(self) -> dict | None:
        """Proper 2-coloring (0/1, smallest vertex of each component gets 0) or None."""
        color: dict = {}
        for s in self.vertices:
            if s in color:
                continue
            color[s] = 0
            stack = [s]
            while stack:
                u = stack.pop()
                for w in self.adj[u]:
                    if w not in color:
                        color[w] = 1 - color[u]
                        stack.append(w)
                    elif color[w] == color[u]:
                        return None
        return color

    def is_bipartite(self) -> bool:
        return self.two_coloring() is not None

    def universal_vertices(self) -> list:
        return [v for v in self.vertices if len(self.adj[v]) == self.n - 1]

    def adjacency_bytes(self, order: Sequence[Vertex]) -> bytes:
        """Row-major 0/1 adjacency matrix of the graph listed in ``order``."""
        return bytes(
            48 + (1 if order[j] in self.adj[order[i]] else 0)
            for i in range(len(order))
            for j in range(len(order))
        )

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertex_set == other.vertex_set and self.edge_set() == other.edge_set()

    def __hash__(self):
        return hash((self.vertex_set, self.edge_set()))

    def __repr__(self):
        return f"Graph(V={list(self.vertices)}, E={self.edges()})"


def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    vs, es = [], []
    for g in graphs:
        vs.extend(g.vertices)
        es.extend(g.edges())
    if len(set(vs)) != len(vs):
        raise ValueError("graphs share vertex names")
    return Graph(vs, es)


# --------------------------------------------------------------------------
# arcs, intervals and models

EMPTY, FULL, SPAN = "empty", "full", "span"


@dataclass(frozen=True, order=True)
class Arc:
    """Empty set, whole circle, or the clockwise span ``[start, end]``.

    The same type doubles as an interval ``[start, end]`` inside a segment
    model; there ``full`` is never used.
    """

    kind: str
    start: int = 0
    end: int = 0

    @classmethod
    def span(cls, start: int, end: int) -> Arc:
        return cls(SPAN, start, end)

    def as_tuple(self) -> tuple:
        return (self.kind, self.start, self.end)

    def __repr__(self):
        if self.kind == SPAN:
            return f"[{self.start},{self.end}]"
        return self.kind


EMPTY_ARC = Arc(EMPTY)
FULL_ARC = Arc(FULL)


def arc_points(arc: Arc, n: int) -> frozenset[int]:
    """Points of an arc on Z_n."""
    if arc.kind == EMPTY:
        return frozenset()
    if arc.kind == FULL:
        return frozenset(range(n))
    length = (arc.end - arc.start) % n + 1
    return frozenset((arc.start + i) % n for i in range(length))


def interval_points(iv: Arc) -> frozenset[int]:
    if iv.kind == EMPTY:
        return frozenset()
    if iv.kind != SPAN:
        raise ValueError("intervals are empty or spans")
    return frozenset(range(iv.start, iv.end + 1))


def arc_from_points(points: Iterable[int], n: int) -> Arc | None:
    """The arc of Z_n with exactly these points, or None if they are not an arc."""
    pts = frozenset(points)
    if not pts:
        return EMPTY_ARC
    if len(pts) == n:
        return FULL_ARC
    starts = [p for p in pts if (p - 1) % n not in pts]
    if len(starts) != 1:
        return None
    s = starts[0]
    return Arc.span(s, (s + len(pts) - 1) % n)


def interval_from_points(points: Iterable[int]) -> Arc | None:
    pts = frozenset(points)
    if not pts:
        return EMPTY_ARC
    lo, hi = min(pts), max(pts)
    if hi - lo + 1 != len(pts):
        return None
    return Arc.span(lo, hi)


@dataclass(frozen=True)
class _Model:
    size: int
    arcs: Mapping[Hashable, Arc]
    colors: Mapping[Hashable, int] = field(default_factory=dict)
    mults: Mapping[Hashable, int] = field(default_factory=dict)

    circular = False

    def points(self, key) -> frozenset[int]:
        raise NotImplementedError

    def positions(self) -> range:
        raise NotImplementedError

    def color(self, key) -> int:
        return self.colors.get(key, 0)

    def mult(self, key) -> int:
        return self.mults.get(key, 1)

    def entries(self) -> Iterator[tuple[Hashable, Arc, int, int]]:
        for k, a in self.arcs.items():
            yield k, a, self.color(k), self.mult(k)

    def form(self) -> tuple:
        """Key-free description: size plus sorted (arc, color, mult) entries."""
        rows = sorted((a.as_tuple(), c, m) for _, a, c, m in self.entries())
        return (self.size, tuple(rows))

    def serialize(self) -> bytes:
        """Canonical byte string of the model (ignores entry keys)."""
        size, rows = self.form()
        body = ";".join(f"{k}:{s}:{e}:{c}:{m}" for (k, s, e), c, m in rows)
        tag = "arc" if self.circular else "interval"
        return f"{tag} {size}|{body}".encode()

    def keyed_by(self, mapping: Mapping) -> _Model:
        return type(self)(
            self.size,
            {mapping[k]: a for k, a in self.arcs.items()},
            {mapping[k]: c for k, c in self.colors.items()},
            {mapping[k]: m for k, m in self.mults.items()},
        )


@dataclass(frozen=True)
class ArcModel(_Model):
    """Arcs on the circle Z_n (points 0..n-1)."""

    circular = True

    def points(self, key) -> frozenset[int]:
        return arc_points(self.arcs[key], self.size)

    def positions(self) -> range:
        return range(self.size)

    def length(self, key) -> int:
        return len(self.points(key))


@dataclass(frozen=True)
class IntervalModel(_Model):
    """Intervals inside the segment [1, n]."""

    def points(self, key) -> frozenset[int]:
        return interval_points(self.arcs[key])

    def positions(self) -> range:
        return range(1, self.size + 1)

    def length(self, key) -> int:
        return len(self.points(key))

    def as_arc_model(self) -> ArcModel:
        """Embed [1, n] into the circle Z_{n+1}; point p stays p."""
        n = self.size + 1
        arcs = {k: (EMPTY_ARC if a.kind == EMPTY else Arc.span(a.start, a.end)) for k, a in self.arcs.items()}
        return ArcModel(n, arcs, dict(self.colors), dict(self.mults))


def model_hypergraph(m: _Model) -> Hypergraph:
    """The arc/interval system of a model as a hypergraph on its points."""
    return Hypergraph(m.positions(), [Edge(m.points(k), mu, c) for k, _, c, mu in m.entries()])


def intersection_graph(m: _Model) -> Graph:
    keys = list(m.arcs)
    pts = {k: m.points(k) for k in keys}
    return Graph(keys, [(a, b) for a, b in combinations(keys, 2) if pts[a] & pts[b]])


class ModelClass(NamedTuple):
    is_tight: bool
    is_proper: bool


def _extremes(m: _Model, key) -> tuple[int, int] | None:
    a = m.arcs[key]
    if a.kind != SPAN:
        return None
    return a.start, a.end


def classify_model(m: _Model) -> ModelClass:
    """Tightness and properness of the arcs/intervals of a model.

    Whole-circle arcs are exempt from the tightness condition.  Two copies of
    the same set (multiplicity, or equal arcs under different keys) count as
    an inclusion, so they make the model non-proper.
    """
    keys = list(m.arcs)
    pts = {k: m.points(k) for k in keys}
    n = m.size
    tight = True
    proper = all(m.mult(k) == 1 for k in keys)
    for a, b in combinations(keys, 2):
        for big, small in ((a, b), (b, a)):
            if not pts[small] <= pts[big]:
                continue
            proper = False
            if not pts[small] or pts[big] == pts[small]:
                continue
            if m.circular and len(pts[big]) == n:
                continue
            bs, be = _extremes(m, big) or (None, None)
            ss, se = _extremes(m, small) or (None, None)
            if bs != ss and be != se:
                tight = False
    return ModelClass(tight, proper)


class Validation(NamedTuple):
    ok: bool
    problem: str | None = None

    def __bool__(self):
        return self.ok


def validate_model(h: Hypergraph, m: _Model, labeling: Mapping[Vertex, int]) -> Validation:
    """Check that ``labeling`` is an isomorphism from ``h`` onto the model.

    Colors and multiplicities must match exactly.
    """
    if set(labeling) != set(h.vertices):
        return Validation(False, "labeling is not defined exactly on V(h)")
    images = list(labeling.values())
    if len(set(images)) != len(images):
        return Validation(False, "labeling is not injective")
    if set(images) != set(m.positions()):
        return Validation(False, "labeling does not hit every model position")
    want: dict[tuple[frozenset, int], int] = defaultdict(int)
    for e in h.edges:
        want[(frozenset(labeling[v] for v in e.members), e.color)] += e.mult
    have: dict[tuple[frozenset, int], int] = defaultdict(int)
    for k, _, c, mu in m.entries():
        have[(m.points(k), c)] += mu
    for key in sorted(set(want) | set(have), key=lambda t: (sorted(t[0]), t[1])):
        if want.get(key, 0) != have.get(key, 0):
            pts, c = key
            return Validation(
                False,
                f"points {sorted(pts)} color {c}: hypergraph has {want.get(key, 0)}, model has {have.get(key, 0)}",
            )
    return Validation(True)


def validate_graph_model(g: Graph, m: _Model) -> Validation:
    """Check that the model is an injective intersection representation of g."""
    if set(m.arcs) != set(g.vertices):
        return Validation(False, "model keys differ from V(g)")
    pts = {v: m.points(v) for v in g.vertices}
    if any(not p for p in pts.values()):
        return Validation(False, "a vertex received an empty arc")
    if len(set(pts.values())) != len(pts):
        return Validation(False, "model is not injective")
    for u, v in combinations(g.vertices, 2):
        if bool(pts[u] & pts[v]) != g.has_edge(u, v):
            return Validation(False, f"pair ({u!r}, {v!r}) intersects iff non-adjacent")
    return Validation(True)


# --------------------------------------------------------------------------
# constructions


def closed_neighborhoods(g: Graph) -> Hypergraph:
    return Hypergraph(g.vertices, [g.closed(v) for v in g.vertices])


def open_neighborhoods(g: Graph) -> Hypergraph:
    return Hypergraph(g.vertices, [g.open(v) for v in g.vertices])


def complement_hypergraph(h: Hypergraph) -> Hypergraph:
    V = h.vertex_set
    return Hypergraph(h.vertices, [Edge(V - e.members, e.mult, e.color) for e in h.edges])


def twin_classes(h: Hypergraph) -> list[list]:
    """Vertices grouped by the set of hyperedge entries containing them."""
    sig: dict[Vertex, list[int]] = {v: [] for v in h.vertices}
    for i, e in enumerate(h.edges):
        for v in e.members:
            sig[v].append(i)
    groups: dict[tuple, list] = defaultdict(list)
    for v in h.vertices:
        groups[tuple(sig[v])].append(v)
    classes = [sort_vertices(c) for c in groups.values()]
    classes.sort(key=lambda c: vertex_key(c[0]))
    return classes


@dataclass(frozen=True)
class Dual:
    """A dual hypergraph together with the bookkeeping that links it back.

    ``hypergraph`` has one vertex per hyperedge copy of the source; ``source``
    maps each dual vertex to the source entry it clones; ``star`` maps each
    source vertex to its dual hyperedge (the copies containing it).
    """

    hypergraph: Hypergraph
    source: dict
    star: dict


def dual(h: Hypergraph) -> Dual:
    source: dict[int, Edge] = {}
    clones: list[int] = []
    idx = 0
    copies_of: list[list[int]] = []
    for e in h.edges:
        mine = []
        for _ in range(e.mult):
            source[idx] = e
            mine.append(idx)
            clones.append(idx)
            idx += 1
        copies_of.append(mine)
    star: dict[Vertex, frozenset] = {}
    for v in h.vertices:
        star[v] = frozenset(c for e, mine in zip(h.edges, copies_of) if v in e.members for c in mine)
    return Dual(Hypergraph(clones, list(star.values())), source, star)


def dual_hypergraph(h: Hypergraph) -> Hypergraph:
    """Vertices are the hyperedge copies of h; each vertex x of h gives x*.

    Multiplicity-m entries become m twin vertices and k-element twin classes
    become hyperedges of multiplicity k.  Colors are not carried over.
    """
    return dual(h).hypergraph


def tightened_color(h: Hypergraph) -> int:
    colors = h.colors()
    return max(colors) + 1 if colors else 1


def tightened(h: Hypergraph) -> Hypergraph:
    """Add A - B for every strict inclusion B < A of nonempty hyperedges.

    The added sets carry multiplicity 1 and the reserved color
    ``tightened_color(h)`` so that callers can strip them again.
    """
    reserved = tightened_color(h)
    sets = {e.members for e in h.edges}
    extra = set()
    for a in sets:
        for b in sets:
            if b and b < a:
                extra.add(a - b)
    return Hypergraph(h.vertices, list(h.edges) + [Edge(s, 1, reserved) for s in extra])


def quotient(h: Hypergraph) -> tuple[Hypergraph, dict]:
    """Collapse twin classes; class ids are 0.. ordered by smallest member."""
    classes = twin_classes(h)
    cls = {v: i for i, c in enumerate(classes) for v in c}
    edges = [Edge(frozenset(cls[v] for v in e.members), e.mult, e.color) for e in h.edges]
    return Hypergraph(range(len(classes)), edges), cls


def expand_quotient(q: Hypergraph, cls: Mapping[Vertex, int]) -> Hypergraph:
    members: dict[int, list] = defaultdict(list)
    for v, c in cls.items():
        members[c].append(v)
    return Hypergraph(
        cls.keys(),
        [Edge(frozenset(v for c in e.members for v in members[c]), e.mult, e.color) for e in q.edges],
    )


def overlap(a: frozenset, b: frozenset) -> bool:
    return bool(a & b) and not a <= b and not b <= a


def strictly_intersect(a: frozenset, b: frozenset, V: frozenset) -> bool:
    if not a or not b:
        return False
    if a <= b or b <= a:
        return True
    return bool(a & b) and (a | b) != V


@dataclass(frozen=True)
class StrictComponents:
    components: list  # lists of Edge, grouped under strict intersection
    isolated: tuple
    has_empty: bool
    has_full: bool

    @property
    def strictly_connected(self) -> bool:
        return len(self.components) == 1 and not self.isolated and not self.has_empty and not self.has_full


def _edge_components(edges: Sequence[Edge], related) -> list[list[Edge]]:
    parent = list(range(len(edges)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in combinations(range(len(edges)), 2):
        if related(edges[i].members, edges[j].members):
            parent[find(i)] = find(j)
    groups: dict[int, list[Edge]] = defaultdict(list)
    for i, e in enumerate(edges):
        groups[find(i)].append(e)
    return list(groups.values())


def strict_components(h: Hypergraph) -> StrictComponents:
    V = h.vertex_set
    nonempty = [e for e in h.edges if e.members]
    comps = _edge_components(nonempty, lambda a, b: strictly_intersect(a, b, V))
    covered = set().union(*(e.members for e in h.edges)) if h.edges else set()
    isolated = tuple(v for v in h.vertices if v not in covered)
    return StrictComponents(
        comps,
        isolated,
        any(not e.members for e in h.edges),
        any(e.members == V for e in h.edges),
    )


def components(h: Hypergraph) -> list[Hypergraph]:
    """Connected components: hyperedges linked by nonempty intersection.

    Isolated vertices form their own components; empty hyperedges form a
    component with no vertices.
    """
    nonempty = [e for e in h.edges if e.members]
    out = []
    for group in _edge_components(nonempty, lambda a, b: bool(a & b)):
        vs = frozenset().union(*(e.members for e in group))
        out.append(Hypergraph(vs, group))
    covered = set().union(*(e.members for e in nonempty)) if nonempty else set()
    for v in h.vertices:
        if v not in covered:
            out.append(Hypergraph([v], []))
    empties = [e for e in h.edges if not e.members]
    if empties:
        out.append(Hypergraph([], empties))
    out.sort(key=lambda c: set_key(c.vertices) if c.vertices else ((9,),))
    return out


def is_connected(h: Hypergraph) -> bool:
    """No isolated vertex and the intersection graph of hyperedges is connected."""
    comps = components(h)
    return len(comps) == 1 and bool(comps[0].vertices) and bool(comps[0].edges)


@dataclass(frozen=True)
class Incidence:
    graph: Graph
    vertex_side: frozenset
    edge_side: frozenset
    source: dict  # edge-side vertex -> Edge entry


def incidence_graph(h: Hypergraph) -> Incidence:
    """Bipartite incidence graph; edge-side vertices are named ("e", i, j).

    A multiplicity-k entry contributes k fraternal edge-side vertices.
    """
    edge_side = []
    source = {}
    es = []
    for i, e in enumerate(h.edges):
        for j in range(e.mult):
            node = ("e", i, j)
            edge_side.append(node)
            source[node] = e
            es.extend((node, v) for v in e.members)
    g = Graph(list(h.vertices) + edge_side, es)
    return Incidence(g, frozenset(h.vertices), frozenset(edge_side), source)


def bipartite_side_hypergraph(g: Graph, side: Iterable[Vertex]) -> Hypergraph:
    """N_U(g): vertex set U, one hyperedge N(w) per vertex w outside U."""
    side = frozenset(side)
    return Hypergraph(side, [g.open(w) for w in g.vertices if w not in side])
