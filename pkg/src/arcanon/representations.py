"""Constructions of (tight, proper) arc and interval models of graphs."""

from __future__ import annotations

from typing import Mapping, Sequence

from .core import (
    SPAN,
    Arc,
    ArcModel,
    Graph,
    IntervalModel,
    Vertex,
    arc_from_points,
    bipartite_side_hypergraph,
    classify_model,
    interval_from_points,
    sort_vertices,
    vertex_key,
)
from .errors import NotInClass, PreconditionViolated
from .intervals import canonical_interval, canonical_tight_interval


def neighbors_to_tight(g: Graph, order: Sequence[Vertex], circular: bool = False):
    """Map each vertex v to N+[v], the part of N[v] from v to its far end.

    ``order`` must be an interval ordering (or, with ``circular``, an arc
    ordering) of the closed neighborhoods of g.  Linear models live on
    [1, n], circular ones on Z_n.
    """
    if sorted(order, key=vertex_key) != list(g.vertices):
        raise PreconditionViolated("order is not a permutation of the vertices")
    n = len(order)
    base = 0 if circular else 1
    pos = {v: i + base for i, v in enumerate(order)}
    arcs = {}
    for v in g.vertices:
        pts = {pos[u] for u in g.closed(v)}
        if circular:
            span = arc_from_points(pts, n)
            if span is None:
                raise PreconditionViolated(f"N[{v!r}] is not an arc of the order")
            if span.kind != SPAN:
                raise PreconditionViolated(f"{v!r} is universal; N+ is undefined on the circle")
            arcs[v] = Arc.span(pos[v], span.end)
        else:
            span = interval_from_points(pts)
            if span is None:
                raise PreconditionViolated(f"N[{v!r}] is not an interval of the order")
            arcs[v] = Arc.span(pos[v], span.end)
    return ArcModel(n, arcs) if circular else IntervalModel(n, arcs)


def tight_to_proper(m):
    """Proper model with the same intersection pattern as a tight model.

    Every point x is replaced by clones: first one per arc starting at x
    (shorter arcs first), then one per arc ending at x (longer arcs first).
    Equal arcs are told apart by their key order in both lists.
    """
    circular = isinstance(m, ArcModel)
    n = m.size
    info = {}
    for key, arc in m.arcs.items():
        if arc.kind != SPAN:
            raise PreconditionViolated(f"arc of {key!r} is {arc.kind}")
        length = len(m.points(key))
        if circular and length == n:
            raise PreconditionViolated(f"arc of {key!r} covers the whole circle")
        info[key] = (arc.start, arc.end, length)
    if not classify_model(m).is_tight:
        raise PreconditionViolated("model is not tight")
    starts: dict[int, list] = {}
    ends: dict[int, list] = {}
    for key, (s, e, length) in info.items():
        starts.setdefault(s, []).append(key)
        ends.setdefault(e, []).append(key)
    first = 0 if circular else 1
    new_start, new_end = {}, {}
    nxt = first
    for x in m.positions():
        for key in sorted(starts.get(x, ()), key=lambda k: (info[k][2], vertex_key(k))):
            new_start[key] = nxt
            nxt += 1
        for key in sorted(ends.get(x, ()), key=lambda k: (-info[k][2], vertex_key(k))):
            new_end[key] = nxt
            nxt += 1
    size = nxt - first
    arcs = {key: Arc.span(new_start[key], new_end[key]) for key in m.arcs}
    return ArcModel(size, arcs) if circular else IntervalModel(size, arcs)


def twin_index(classes: Mapping[Vertex, Vertex]) -> dict:
    """Number the members of each twin class 0, 1, ... in vertex order."""
    out, seen = {}, {}
    for v in sort_vertices(classes):
        c = classes[v]
        out[v] = seen.get(c, 0)
        seen[c] = out[v] + 1
    return out


def clone_expand(g: Graph, quotient_model: ArcModel, alpha: Mapping[Vertex, Vertex], mu: Mapping[Vertex, int] | None = None) -> ArcModel:
    """Arc model of g from an arc model of its twin-free quotient.

    ``alpha`` sends each vertex of g to its class (a key of the quotient
    model) and ``mu`` numbers the members of each class from 0.  Point p of
    Z_n becomes 2k points, and the i-th twin of a class with arc [a, b]
    receives [2ka + i, (2b + 1)k + i] on Z_{2kn}, where k = |V(g)|.
    """
    k = g.n
    n = quotient_model.size
    if mu is None:
        mu = twin_index(alpha)
    size = 2 * k * n
    arcs = {}
    for v in g.vertices:
        c = alpha[v]
        arc = quotient_model.arcs[c]
        if arc.kind != SPAN:
            raise PreconditionViolated(f"class {c!r} has a {arc.kind} arc")
        i = mu[v]
        if not 0 <= i < k:
            raise PreconditionViolated(f"twin index of {v!r} out of range")
        a, b = arc.start, arc.end
        arcs[v] = Arc.span((2 * k * a + i) % size, ((2 * b + 1) * k + i) % size)
    return ArcModel(size, arcs)


def coconvex_construction(g: Graph, tight: bool = False) -> ArcModel:
    """Arc model of a twin-free graph whose complement is convex bipartite.

    Each complement component contributes one side U_i with an interval (or,
    when ``tight``, tight interval) neighborhood hypergraph; with U ordered
    u_1..u_k, u_i gets [i, i+k] and every other vertex w gets the complement
    of the union of its non-neighbors' arcs, all on Z_{2k+2}.
    """
    h = g.complement()
    canon = canonical_tight_interval if tight else canonical_interval
    u_order: list = []
    w_side: list = []
    for comp in h.components():
        if len(comp) == 1:
            w_side.extend(comp)
            continue
        sub = h.induced(comp)
        color = sub.two_coloring()
        if color is None:
            raise NotInClass("complement is not bipartite")
        sides = [sort_vertices(v for v in comp if color[v] == c) for c in (0, 1)]
        best = None
        for u, w in ((sides[0], sides[1]), (sides[1], sides[0])):
            try:
                res = canon(bipartite_side_hypergraph(sub, u))
            except NotInClass:
                continue
            key = (res.serialized, [vertex_key(x) for x in u])
            if best is None or key < best[0]:
                best = (key, res.order, w)
        if best is None:
            raise NotInClass("a complement component has no side with an interval neighborhood hypergraph")
        u_order.extend(best[1])
        w_side.extend(best[2])
    k = len(u_order)
    size = 2 * k + 2
    pos = {u: i + 1 for i, u in enumerate(u_order)}
    arcs = {u: Arc.span(i, i + k) for u, i in pos.items()}
    for w in w_side:
        nb = sorted(pos[u] for u in h.open(w))
        if not nb:
            arcs[w] = Arc.span(0, k)
            continue
        i, j = nb[0], nb[-1]
        if j - i + 1 != len(nb):
            raise RuntimeError("internal error: complement neighborhood is not an interval")
        arcs[w] = Arc.span((j + k + 1) % size, (i - 1) % size)
    return ArcModel(size, arcs)
