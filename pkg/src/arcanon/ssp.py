"""Star System Problem: recover a graph from its closed neighborhood hypergraph."""

from __future__ import annotations

from itertools import combinations
from typing import Mapping

from .circular import canonical_arc, is_ca
from .core import (
    SPAN,
    Edge,
    Graph,
    Hypergraph,
    arc_from_points,
    closed_neighborhoods,
    complement_hypergraph,
    components,
    dual,
    quotient,
    set_key,
    tightened,
)
from .errors import NoSolution, NotCA, NotInClass, NotInterval
from .intervals import canonical_labeling_dual_interval, interval_order, is_interval


def _basic_checks(h: Hypergraph) -> None:
    if any(e.color != 0 for e in h.edges):
        raise NoSolution("closed neighborhood hypergraphs are uncolored")
    if h.edge_count() != h.n:
        raise NoSolution(f"{h.edge_count()} hyperedges for {h.n} vertices")
    if any(not e.members for e in h.edges):
        raise NoSolution("a closed neighborhood is never empty")


def _verified(g: Graph, h: Hypergraph) -> Graph:
    if closed_neighborhoods(g) != h:
        raise NoSolution("candidate graph does not reproduce the hypergraph")
    return g


def _pairing_graph(assign: Mapping) -> Graph | None:
    """Graph with N[v] = assign[v], or None if the assignment is inconsistent."""
    vs = list(assign)
    for v in vs:
        if v not in assign[v]:
            return None
    edges = []
    for a, b in combinations(vs, 2):
        ab, ba = b in assign[a], a in assign[b]
        if ab != ba:
            return None
        if ab:
            edges.append((a, b))
    return Graph(vs, edges)


def _lift(h: Hypergraph, cls: Mapping, qg: Graph) -> Graph:
    """Expand quotient vertices into cliques of twins."""
    members: dict = {}
    for v, c in cls.items():
        members.setdefault(c, []).append(v)
    edges = []
    for group in members.values():
        edges.extend(combinations(group, 2))
    for c, d in qg.edges():
        edges.extend((x, y) for x in members[c] for y in members[d])
    return Graph(h.vertices, edges)


def _distinct_quotient(h: Hypergraph):
    q, cls = quotient(h)
    sets = sorted({e.members for e in q.edges}, key=set_key)
    if len(sets) != q.n:
        raise NoSolution("number of distinct neighborhoods differs from the number of twin classes")
    return Hypergraph.from_sets(q.vertices, sets), cls, sets


def ssp_proper_interval(h: Hypergraph) -> Graph:
    """The unique graph G with N[G] = h, provided h is an interval hypergraph."""
    _basic_checks(h)
    qh, cls, sets = _distinct_quotient(h)
    try:
        order = interval_order(qh)
    except NotInterval:
        raise NoSolution("hypergraph is not interval") from None
    pos = {v: i for i, v in enumerate(order)}
    ranked = sorted(sets, key=lambda s: (min(pos[v] for v in s), max(pos[v] for v in s)))
    qg = _pairing_graph(dict(zip(order, ranked)))
    if qg is None:
        raise NoSolution("lexicographic pairing is not a graph")
    return _verified(_lift(h, cls, qg), h)


def _pca_gate(h: Hypergraph) -> bool:
    return is_ca(tightened(h)) and not is_interval(complement_hypergraph(h))


def pca_shift_solutions(h: Hypergraph) -> list[tuple[int, Graph]]:
    """Every cyclic shift of the vertex-to-neighborhood pairing that yields a solution."""
    _basic_checks(h)
    qh, cls, sets = _distinct_quotient(h)
    try:
        res = canonical_arc(qh)
    except NotCA:
        return []
    n = qh.n
    pos = res.labeling
    keyed = []
    for s in sets:
        arc = arc_from_points({pos[v] for v in s}, n)
        if arc is None or arc.kind != SPAN:
            return []
        keyed.append(((arc.start, len(s)), s))
    keyed.sort(key=lambda t: t[0])
    ranked = [s for _, s in keyed]
    order = res.order
    out = []
    for k in range(n):
        qg = _pairing_graph({order[i]: ranked[(i + k) % n] for i in range(n)})
        if qg is None:
            continue
        g = _lift(h, cls, qg)
        if closed_neighborhoods(g) == h:
            out.append((k, g))
    return out


def ssp_pca_noncobip(h: Hypergraph) -> Graph:
    _basic_checks(h)
    if not _pca_gate(h):
        raise NoSolution("tightened hypergraph is not CA or complement is interval")
    sols = pca_shift_solutions(h)
    if not sols:
        raise NoSolution("no cyclic shift of the pairing is a graph")
    return sols[0][1]


def ssp_coconvex(h: Hypergraph) -> Graph:
    """A graph G with N[G] = h whose complement is convex bipartite (unique up to isomorphism)."""
    _basic_checks(h)
    V = h.vertex_set
    universal = frozenset(v for v in V if all(v in e.members for e in h.edges))
    if len(universal) != h.multiset().get((V, 0), 0):
        raise NoSolution("universal vertices do not match copies of the full set")
    rest = V - universal
    reduced, skipped = [], 0
    for e in h.expanded():
        if e.members == V and skipped < len(universal):
            skipped += 1
            continue
        reduced.append(Edge(e.members - universal))
    k = _complement_bipartite(Hypergraph(rest, reduced)) if rest else Graph([])
    g = k.complement()
    edges = g.edges() + [(x, v) for x in universal for v in V if v != x]
    return _verified(Graph(V, edges), h)


def _complement_bipartite(hr: Hypergraph) -> Graph:
    """Bipartite K with open neighborhoods equal to the complement of hr."""
    kh = complement_hypergraph(hr)
    comps = components(kh)
    if any(not c.vertices or not c.edges for c in comps):
        raise NoSolution("complement has an isolated vertex or an empty hyperedge")
    if len(comps) % 2:
        raise NoSolution("complement has an odd number of components")
    info = [_component_info(c) for c in comps]
    paired = [False] * len(comps)
    edges = []
    for i in range(len(comps)):
        if paired[i]:
            continue
        for j in range(i + 1, len(comps)):
            if paired[j]:
                continue
            link = _pair_edges(info[i], info[j]) or _pair_edges(info[j], info[i])
            if link is not None:
                paired[i] = paired[j] = True
                edges.extend(link)
                break
        else:
            raise NoSolution("complement components cannot be paired into interval/dual pairs")
    return Graph(hr.vertices, edges)


def _component_info(c: Hypergraph) -> dict:
    info: dict = {"h": c, "interval": is_interval(c)}
    try:
        info["as_dual"] = canonical_labeling_dual_interval(c)
    except NotInClass:
        info["as_dual"] = None
    if info["interval"]:
        d = dual(c)
        info["dual"] = d
        info["dual_form"] = canonical_labeling_dual_interval(d.hypergraph)
    return info


def _pair_edges(u: dict, w: dict) -> list | None:
    """Edges w~u of the incidence structure when component u is interval and w is its dual."""
    if not u["interval"] or w["as_dual"] is None:
        return None
    lw, lu = w["as_dual"], u["dual_form"]
    if lw.form != lu.form:
        return None
    back = {p: x for x, p in lu.labeling.items()}
    source = u["dual"].source
    out = []
    for wv, p in lw.labeling.items():
        copy = back[p]
        out.extend((wv, uv) for uv in source[copy].members)
    return out


def ssp_ca(h: Hypergraph) -> Graph:
    for solver in (ssp_proper_interval, ssp_pca_noncobip, ssp_coconvex):
        try:
            return solver(h)
        except NoSolution:
            continue
    raise NoSolution("no proper interval, non-co-bipartite PCA or co-convex solution")
