"""Recognition, canonical labeling and canonical models for CA graph classes."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, NamedTuple

import networkx as nx

from .circular import canonical_arc, is_ca, is_tight_ca
from .core import (
    Arc,
    ArcModel,
    Graph,
    Hypergraph,
    IntervalModel,
    bipartite_side_hypergraph,
    classify_model,
    closed_neighborhoods,
    set_key,
    sort_vertices,
    twin_classes,
    validate_graph_model,
    vertex_key,
)
from .errors import NotCA, NotInClass, NotInterval
from .intervals import canonical_interval, is_interval
from .representations import (
    clone_expand,
    coconvex_construction,
    neighbors_to_tight,
    tight_to_proper,
    twin_index,
)


class ClassTag(str, Enum):
    ProperInterval = "ProperInterval"
    Interval = "Interval"
    PCA = "PCA"
    TCA = "TCA"
    ConvexBipartite = "ConvexBipartite"
    CircularConvexBipartite = "CircularConvexBipartite"
    Biconvex = "Biconvex"
    CoConvex = "CoConvex"
    CoBipartite = "CoBipartite"
    None_ = "None"

    def __str__(self):
        return self.value


# --------------------------------------------------------------------------
# recognition


def _side_tests(g: Graph, test: Callable[[Hypergraph], bool]) -> list[tuple[bool, bool]] | None:
    """Per nontrivial component: does ``test`` accept N_A, and N_B, for its two sides."""
    color = g.two_coloring()
    if color is None:
        return None
    out = []
    for comp in g.components():
        if len(comp) == 1:
            continue
        sub = g.induced(comp)
        a = [v for v in comp if color[v] == 0]
        b = [v for v in comp if color[v] == 1]
        out.append((test(bipartite_side_hypergraph(sub, a)), test(bipartite_side_hypergraph(sub, b))))
    return out


def is_convex_bipartite(g: Graph) -> bool:
    sides = _side_tests(g, is_interval)
    return sides is not None and all(x or y for x, y in sides)


def is_biconvex(g: Graph) -> bool:
    sides = _side_tests(g, is_interval)
    return sides is not None and all(x and y for x, y in sides)


def is_circular_convex(g: Graph) -> bool:
    """Some bipartition makes the neighborhoods of one side a CA hypergraph.

    Isolated vertices go to the hyperedge side, where they cost nothing.
    Two or more nontrivial components must each leave a gap on the circle
    for the others, which forces every one of them to be interval.
    """
    sides = _side_tests(g, is_ca)
    if sides is None:
        return False
    if len(sides) <= 1:
        return all(x or y for x, y in sides)
    return is_convex_bipartite(g)


def is_interval_graph(g: Graph) -> bool:
    """Maximal cliques admit an order in which each vertex's cliques are consecutive."""
    return is_interval(_clique_hypergraph(g)[0])


def _clique_hypergraph(g: Graph):
    nxg = nx.Graph()
    nxg.add_nodes_from(g.vertices)
    nxg.add_edges_from(g.edges())
    cliques = sorted((frozenset(c) for c in nx.find_cliques(nxg)), key=set_key)
    h = Hypergraph(range(len(cliques)), [[i for i, c in enumerate(cliques) if v in c] for v in g.vertices])
    return h, cliques


def recognize(g: Graph) -> set[ClassTag]:
    tags: set[ClassTag] = set()
    nh = closed_neighborhoods(g)
    if is_interval(nh):
        tags.add(ClassTag.ProperInterval)
    if is_interval_graph(g):
        tags.add(ClassTag.Interval)
    if is_ca(nh):
        tags.add(ClassTag.TCA)
    if is_tight_ca(nh):
        tags.add(ClassTag.PCA)
    if g.is_bipartite():
        if is_convex_bipartite(g):
            tags.add(ClassTag.ConvexBipartite)
        if is_biconvex(g):
            tags.add(ClassTag.Biconvex)
        if is_circular_convex(g):
            tags.add(ClassTag.CircularConvexBipartite)
    co = g.complement()
    if co.is_bipartite():
        tags.add(ClassTag.CoBipartite)
        if is_convex_bipartite(co):
            tags.add(ClassTag.CoConvex)
    return tags or {ClassTag.None_}


def is_coconvex(g: Graph) -> bool:
    return is_convex_bipartite(g.complement())


def is_proper_interval(g: Graph) -> bool:
    return is_interval(closed_neighborhoods(g))


def is_pca(g: Graph) -> bool:
    return is_tight_ca(closed_neighborhoods(g))


def is_tca(g: Graph) -> bool:
    return is_ca(closed_neighborhoods(g))


# --------------------------------------------------------------------------
# canonical labeling


@dataclass(frozen=True)
class GraphCanonResult:
    labeling: dict  # vertex -> 1..n
    form: bytes  # row-major 0/1 adjacency matrix of the relabeled graph
    model: ArcModel | IntervalModel | None = None  # keyed by input vertices

    @property
    def n(self) -> int:
        return len(self.labeling)

    def canonical_graph(self) -> Graph:
        n = self.n
        edges = [(i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if self.form[i * n + j] == ord("1")]
        return Graph(range(1, n + 1), edges)

    def canonical_model(self):
        """The model keyed by canonical labels instead of input names."""
        if self.model is None:
            return None
        return self.model.keyed_by(self.labeling)


def form_of(g: Graph, labeling: dict) -> bytes:
    order = sorted(g.vertices, key=labeling.__getitem__)
    return g.adjacency_bytes(order)


def _merge_components(g: Graph, connected: Callable[[Graph], dict]) -> GraphCanonResult:
    parts = []
    for comp in g.components():
        sub = g.induced(comp)
        lab = connected(sub)
        parts.append((form_of(sub, lab), len(comp), vertex_key(comp[0]), lab))
    parts.sort(key=lambda p: p[:3])
    labeling, offset = {}, 0
    for _, size, _, lab in parts:
        for v, p in lab.items():
            labeling[v] = p + offset
        offset += size
    return GraphCanonResult(labeling, form_of(g, labeling))


def _best(g: Graph, candidates) -> dict:
    best, best_form = None, None
    for lab in candidates:
        f = form_of(g, lab)
        if best_form is None or f < best_form:
            best, best_form = lab, f
    if best is None:
        raise NotInClass("no candidate labeling")
    return best


def _pi_connected(g: Graph) -> dict:
    try:
        res = canonical_interval(closed_neighborhoods(g))
    except NotInterval:
        raise NotInClass("not a proper interval graph") from None
    n = g.n
    lam1 = res.labeling
    lam2 = {v: n + 1 - p for v, p in lam1.items()}
    return _best(g, [lam1, lam2])


def canonical_label_proper_interval(g: Graph) -> GraphCanonResult:
    return _merge_components(g, _pi_connected)


def canonical_label_pca_noncobip(g: Graph) -> GraphCanonResult:
    if not g.is_connected():
        raise NotInClass("graph is disconnected")
    if g.complement().is_bipartite():
        raise NotInClass("complement is bipartite")
    try:
        res = canonical_arc(closed_neighborhoods(g))
    except NotCA:
        raise NotInClass("closed neighborhoods are not a CA hypergraph") from None
    n = g.n
    base = res.labeling
    cands = []
    for sign in (1, -1):
        for r in range(n):
            cands.append({v: (sign * p + r) % n + 1 for v, p in base.items()})
    lab = _best(g, cands)
    return GraphCanonResult(lab, form_of(g, lab))


def _red_blue_labeling(g: Graph, blue: list, red: list) -> dict | None:
    rg = Hypergraph(blue, [g.open(r) for r in red])
    try:
        res = canonical_arc(rg)
    except NotCA:
        return None
    b = len(blue)
    lab = {v: p + 1 for v, p in res.labeling.items()}
    # every model entry of multiplicity m owns m consecutive red labels
    slot = {}
    nxt = b + 1
    for key, _, _, m in res.model.entries():
        slot[res.model.points(key)] = nxt
        nxt += m
    used: dict = {}
    for r in sort_vertices(red):
        pts = frozenset(res.labeling[v] for v in g.open(r))
        i = used.get(pts, 0)
        used[pts] = i + 1
        lab[r] = slot[pts] + i
    return lab


def _cc_connected(g: Graph) -> dict:
    if g.n == 1:
        return {g.vertices[0]: 1}
    color = g.two_coloring()
    if color is None:
        raise NotInClass("graph is not bipartite")
    a = [v for v in g.vertices if color[v] == 0]
    b = [v for v in g.vertices if color[v] == 1]
    cands = [lab for lab in (_red_blue_labeling(g, a, b), _red_blue_labeling(g, b, a)) if lab is not None]
    if not cands:
        raise NotInClass("component is not circular convex")
    return _best(g, cands)


def canonical_label_circular_convex(g: Graph) -> GraphCanonResult:
    if not g.is_bipartite():
        raise NotInClass("graph is not bipartite")
    if not is_circular_convex(g):
        raise NotInClass("graph is not circular convex")
    return _merge_components(g, _cc_connected)


def canonical_label_coconvex(g: Graph) -> GraphCanonResult:
    co = g.complement()
    if not is_convex_bipartite(co):
        raise NotInClass("complement is not convex bipartite")
    lab = canonical_label_circular_convex(co).labeling
    return GraphCanonResult(lab, form_of(g, lab))


def canonical_label(g: Graph, tag: ClassTag | str | None = None) -> GraphCanonResult:
    """Canonical labeling through the first supported class that contains g."""
    tag = ClassTag(tag) if tag is not None else None
    if tag is ClassTag.ProperInterval:
        return canonical_label_proper_interval(g)
    if tag in (ClassTag.PCA, ClassTag.TCA):
        need = is_pca if tag is ClassTag.PCA else is_tca
        if not need(g):
            raise NotInClass(f"graph is not {tag}")
        return _label_tca(g)
    if tag is ClassTag.CoConvex:
        return canonical_label_coconvex(g)
    if tag in (ClassTag.ConvexBipartite, ClassTag.CircularConvexBipartite, ClassTag.Biconvex):
        member = {
            ClassTag.ConvexBipartite: is_convex_bipartite,
            ClassTag.CircularConvexBipartite: is_circular_convex,
            ClassTag.Biconvex: is_biconvex,
        }[tag]
        if not member(g):
            raise NotInClass(f"graph is not {tag}")
        return canonical_label_circular_convex(g)
    if tag is None:
        if is_proper_interval(g):
            return canonical_label_proper_interval(g)
        if is_tca(g):
            return _label_tca(g)
        if is_coconvex(g):
            return canonical_label_coconvex(g)
        if g.is_bipartite() and is_circular_convex(g):
            return canonical_label_circular_convex(g)
        raise NotInClass("graph is in none of the supported classes")
    raise NotInClass(f"no canonical labeling for class {tag}")


def _label_tca(g: Graph) -> GraphCanonResult:
    # TCA splits into proper interval (every disconnected one), connected
    # non-co-bipartite, and co-bipartite (complements of biconvex graphs)
    if is_proper_interval(g):
        return canonical_label_proper_interval(g)
    if not g.complement().is_bipartite():
        return canonical_label_pca_noncobip(g)
    return canonical_label_coconvex(g)


# --------------------------------------------------------------------------
# canonical models


def _relabel(g: Graph, lab: dict) -> Graph:
    return g.relabel(lab)


def _quotient_graph(g: Graph) -> tuple[Graph, dict]:
    """Twin-free quotient on class representatives (the smallest member)."""
    classes = twin_classes(closed_neighborhoods(g))
    alpha = {v: c[0] for c in classes for v in c}
    return g.induced([c[0] for c in classes]), alpha


def _compose(model, lab: dict):
    inverse = {p: v for v, p in lab.items()}
    return model.keyed_by(inverse)


def _check(g: Graph, model) -> None:
    ok = validate_graph_model(g, model)
    if not ok:
        raise RuntimeError(f"internal error: constructed model is invalid: {ok.problem}")


def coconvex_arc_model(g: Graph) -> GraphCanonResult:
    canon = canonical_label_coconvex(g)
    star = _relabel(g, canon.labeling)
    q, alpha = _quotient_graph(star)
    qmodel = coconvex_construction(q)
    model = clone_expand(star, qmodel, alpha, twin_index(alpha))
    model = _compose(model, canon.labeling)
    _check(g, model)
    return GraphCanonResult(canon.labeling, canon.form, model)


def proper_model_proper_interval(g: Graph) -> GraphCanonResult:
    canon = canonical_label_proper_interval(g)
    star = _relabel(g, canon.labeling)
    tight = neighbors_to_tight(star, list(range(1, g.n + 1)))
    model = _compose(tight_to_proper(tight), canon.labeling)
    _check(g, model)
    return GraphCanonResult(canon.labeling, canon.form, model)


def proper_arc_model_pca(g: Graph) -> GraphCanonResult:
    """Canonical proper model of a PCA graph.

    Proper interval graphs (all disconnected PCA graphs among them) get a
    proper interval model; the rest get a proper arc model.
    """
    if is_proper_interval(g):
        return proper_model_proper_interval(g)
    if not is_pca(g):
        raise NotInClass("graph is not PCA")
    if not g.complement().is_bipartite():
        canon = canonical_label_pca_noncobip(g)
        star = _relabel(g, canon.labeling)
        tight = neighbors_to_tight(star, list(range(1, g.n + 1)), circular=True)
        model = _compose(tight_to_proper(tight), canon.labeling)
    else:
        canon = canonical_label_coconvex(g)
        star = _relabel(g, canon.labeling)
        q, alpha = _quotient_graph(star)
        tight = coconvex_construction(q, tight=True)
        if not classify_model(tight).is_tight:
            raise RuntimeError("internal error: co-bipartite construction is not tight")
        proper = tight_to_proper(tight)
        model = _compose(clone_expand(star, proper, alpha, twin_index(alpha)), canon.labeling)
    _check(g, model)
    if not classify_model(model).is_proper:
        raise RuntimeError("internal error: PCA model is not proper")
    return GraphCanonResult(canon.labeling, canon.form, model)


def canonical_arc_model(g: Graph) -> GraphCanonResult:
    """Canonical model of a TCA or co-convex graph; proper whenever g is PCA."""
    if is_pca(g):
        return proper_arc_model_pca(g)
    if is_coconvex(g):
        return coconvex_arc_model(g)
    raise NotInClass("graph is neither PCA nor co-convex")


def interval_graph_model(g: Graph) -> IntervalModel:
    """Interval model from a consecutive order of maximal cliques (not canonical)."""
    h, cliques = _clique_hypergraph(g)
    try:
        res = canonical_interval(h)
    except NotInterval:
        raise NotInClass("not an interval graph") from None
    arcs = {}
    for v in g.vertices:
        ps = [res.labeling[i] for i, c in enumerate(cliques) if v in c]
        arcs[v] = Arc.span(min(ps), max(ps))
    return IntervalModel(len(cliques), arcs)


# --------------------------------------------------------------------------
# isomorphism


class IsoResult(NamedTuple):
    isomorphic: bool
    mapping: dict | None

    def __bool__(self):
        return self.isomorphic


def isomorphic(g1: Graph, g2: Graph, tag: ClassTag | str | None = None) -> IsoResult:
    """Compare canonical forms; on success return the verified bijection g1 -> g2."""
    c1 = canonical_label(g1, tag)
    try:
        c2 = canonical_label(g2, tag)
    except NotInClass:
        if tag is None:
            return IsoResult(False, None)
        raise
    if c1.form != c2.form:
        return IsoResult(False, None)
    inverse = {p: v for v, p in c2.labeling.items()}
    phi = {v: inverse[p] for v, p in c1.labeling.items()}
    if g1.relabel(phi) != g2:
        raise RuntimeError("internal error: equal canonical forms but the bijection is not an isomorphism")
    return IsoResult(True, phi)
