"""Canonical interval representations of edge-colored interval hypergraphs.

The ordering is found with a PQ-style decomposition: the distinct hyperedges
are split into overlap components, each multi-set component fixes a linear
order of its Venn classes (up to reversal), and components nest inside
single sets or classes of other components.  Canonization picks, at every
node, the child arrangement with the lexicographically least code, where a
node's code is its size plus the sorted (start, end, color, mult) rows of all
hyperedges lying inside it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Mapping, Sequence

from .core import (
    EMPTY_ARC,
    Arc,
    Hypergraph,
    IntervalModel,
    Vertex,
    dual,
    overlap,
    set_key,
    sort_vertices,
    tightened,
    tightened_color,
    vertex_key,
)
from .errors import NotInClass, NotInterval, NotTightInterval


@dataclass(frozen=True)
class CanonResult:
    model: IntervalModel
    labeling: dict  # vertex -> position in 1..n
    serialized: bytes

    @property
    def order(self) -> list:
        return sorted(self.labeling, key=self.labeling.__getitem__)


@dataclass
class _Node:
    order: list
    code: tuple


def _rows_key(order: Sequence[Vertex], entries) -> tuple:
    pos = {v: i for i, v in enumerate(order)}
    rows = []
    for members, color, mult in entries:
        if members <= pos.keys():
            ps = [pos[v] for v in members]
            rows.append((min(ps), max(ps), color, mult))
    rows.sort()
    return (len(order), tuple(rows))


def _overlap_components(sets: list[frozenset]) -> list[list[frozenset]]:
    seen = [False] * len(sets)
    comps = []
    for i in range(len(sets)):
        if seen[i]:
            continue
        seen[i] = True
        comp, queue = [], deque([i])
        while queue:
            a = queue.popleft()
            comp.append(sets[a])
            for b in range(len(sets)):
                if not seen[b] and overlap(sets[a], sets[b]):
                    seen[b] = True
                    queue.append(b)
        comps.append(comp)
    return comps


def _q_classes(comp: list[frozenset]) -> list[frozenset]:
    """Venn classes of an overlap component in their forced linear order."""
    # comp is in BFS order of the overlap graph, so every set after the
    # first overlaps an earlier one
    a, b = comp[0], comp[1]
    blocks: list[frozenset] = [a - b, a & b, b - a]
    covered = a | b
    for s in comp[2:]:
        hit = [i for i, bl in enumerate(blocks) if bl & s]
        if not hit:
            raise RuntimeError("overlap component is not connected in BFS order")
        lo, hi = hit[0], hit[-1]
        if hit != list(range(lo, hi + 1)):
            raise NotInterval(f"set {sort_vertices(s)} hits non-adjacent classes")
        if any(not blocks[i] <= s for i in range(lo + 1, hi)):
            raise NotInterval(f"set {sort_vertices(s)} skips part of an inner class")
        full_lo = blocks[lo] <= s
        full_hi = blocks[hi] <= s
        new = s - covered
        last = len(blocks) - 1
        if new:
            right = hi == last and (full_hi or lo == hi)
            left = lo == 0 and (full_lo or lo == hi)
            if right and left:
                raise RuntimeError("set contains every placed set yet overlaps one")
            if right:
                if not full_lo:
                    bl = blocks[lo]
                    blocks[lo:lo + 1] = [bl - s, bl & s]
                blocks.append(new)
            elif left:
                if not full_hi:
                    bl = blocks[hi]
                    blocks[hi:hi + 1] = [bl & s, bl - s]
                blocks.insert(0, new)
            else:
                raise NotInterval(f"set {sort_vertices(s)} cannot extend the order at either end")
            covered = covered | new
        else:
            if lo == hi:
                raise RuntimeError("set inside one class cannot overlap a placed set")
            if not full_hi:
                bl = blocks[hi]
                blocks[hi:hi + 1] = [bl & s, bl - s]
            if not full_lo:
                bl = blocks[lo]
                blocks[lo:lo + 1] = [bl - s, bl & s]
    return blocks


class _Canonizer:
    def __init__(self, entries: list[tuple[frozenset, int, int]]):
        self.entries = entries

    def code(self, order):
        return _rows_key(order, self.entries)

    def leaf(self, v) -> _Node:
        return _Node([v], self.code([v]))

    def p_node(self, children: list[_Node]) -> _Node:
        children.sort(key=lambda c: (c.code, [vertex_key(v) for v in c.order]))
        order = [v for c in children for v in c.order]
        return _Node(order, self.code(order))

    def q_node(self, children: list[_Node]) -> _Node:
        fwd = [v for c in children for v in c.order]
        rev = [v for c in reversed(children) for v in c.order]
        cf, cr = self.code(fwd), self.code(rev)
        return _Node(fwd, cf) if cf <= cr else _Node(rev, cr)

    def build(self, X: frozenset, sets: list[frozenset]) -> _Node:
        S = [s for s in sets if len(s) >= 2 and s != X]
        if not S:
            return self.p_node([self.leaf(v) for v in X])
        comps = _overlap_components(S)
        unions = [frozenset().union(*c) for c in comps]
        top = []
        for i, u in enumerate(unions):
            nested = any(j != i and any(u <= s for s in comps[j]) for j in range(len(comps)))
            if not nested:
                top.append(i)
        used: set = set()
        children = []
        for i in top:
            u = unions[i]
            if used & u:
                raise RuntimeError("top-level overlap components intersect")
            used |= u
            comp = comps[i]
            if len(comp) == 1:
                a = comp[0]
                children.append(self.build(a, [s for s in S if s < a]))
            else:
                classes = _q_classes(comp)
                kids = [self.build(cl, [s for s in S if s <= cl]) for cl in classes]
                children.append(self.q_node(kids))
        children.extend(self.leaf(v) for v in X - used)
        return self.p_node(children)


def _entries(h: Hypergraph) -> list[tuple[frozenset, int, int]]:
    return [(e.members, e.color, e.mult) for e in h.edges if e.members]


def interval_order(h: Hypergraph) -> list:
    """Canonical vertex order of an interval hypergraph (raises NotInterval)."""
    entries = _entries(h)
    covered = frozenset().union(*(m for m, _, _ in entries)) if entries else frozenset()
    sets = sorted({m for m, _, _ in entries}, key=lambda s: (len(s), set_key(s)))
    canon = _Canonizer(entries)
    order = canon.build(covered, sets).order if covered else []
    order += sort_vertices(h.vertex_set - covered)
    pos = {v: i for i, v in enumerate(order)}
    for m, _, _ in entries:
        ps = sorted(pos[v] for v in m)
        if ps[-1] - ps[0] + 1 != len(ps):
            raise RuntimeError(f"internal error: {sort_vertices(m)} is not consecutive")
    return order


def model_from_order(h: Hypergraph, order: Sequence[Vertex]) -> tuple[IntervalModel, dict]:
    """Interval model of h under a vertex order (positions 1..n).

    Entries are keyed 0.. in sorted row order so the model carries no trace
    of the input names.  Raises NotInterval if some hyperedge is not
    consecutive in ``order``.
    """
    labeling = {v: i + 1 for i, v in enumerate(order)}
    rows = []
    for e in h.edges:
        if not e.members:
            rows.append((EMPTY_ARC, e.color, e.mult))
            continue
        ps = sorted(labeling[v] for v in e.members)
        if ps[-1] - ps[0] + 1 != len(ps):
            raise NotInterval(f"{sort_vertices(e.members)} is not consecutive")
        rows.append((Arc.span(ps[0], ps[-1]), e.color, e.mult))
    rows.sort(key=lambda r: (r[0].as_tuple(), r[1], r[2]))
    model = IntervalModel(
        len(order),
        {i: r[0] for i, r in enumerate(rows)},
        {i: r[1] for i, r in enumerate(rows)},
        {i: r[2] for i, r in enumerate(rows)},
    )
    return model, labeling


def canonical_interval(h: Hypergraph) -> CanonResult:
    order = interval_order(h)
    model, labeling = model_from_order(h, order)
    return CanonResult(model, labeling, model.serialize())


def is_interval(h: Hypergraph) -> bool:
    try:
        interval_order(h)
    except NotInterval:
        return False
    return True


def strip_color(model, color: int):
    """Drop the entries of one color and re-key the rest in sorted order."""
    rows = sorted(
        (a.as_tuple(), a, c, m) for _, a, c, m in model.entries() if c != color
    )
    return type(model)(
        model.size,
        {i: r[1] for i, r in enumerate(rows)},
        {i: r[2] for i, r in enumerate(rows)},
        {i: r[3] for i, r in enumerate(rows)},
    )


def canonical_tight_interval(h: Hypergraph) -> CanonResult:
    t = tightened(h)
    try:
        res = canonical_interval(t)
    except NotInterval as exc:
        raise NotTightInterval(str(exc)) from None
    model = strip_color(res.model, tightened_color(h))
    return CanonResult(model, res.labeling, model.serialize())


def canonical_labeling_interval_hypergraph(h: Hypergraph) -> dict:
    return canonical_interval(h).labeling


@dataclass(frozen=True)
class LabeledForm:
    labeling: dict  # vertex -> 1..n
    form: Hypergraph  # the relabeled hypergraph on 1..n

    def serialize(self) -> bytes:
        rows = sorted((sorted(e.members), e.color, e.mult) for e in self.form.edges)
        return repr((self.form.n, rows)).encode()


def apply_labeling(h: Hypergraph, labeling: Mapping[Vertex, int]) -> LabeledForm:
    return LabeledForm(dict(labeling), h.relabel(labeling))


def canonical_labeling_dual_interval(h: Hypergraph) -> LabeledForm:
    """Canonical labeling of a hypergraph whose dual is an interval hypergraph.

    The dual is canonized; each vertex v is then ranked by the canonical
    interval of its star v*.  Vertices with equal stars are twins, so their
    relative order does not affect the labeled form.
    """
    if len(h.colors()) > 1:
        raise ValueError("dual labeling is defined for uncolored hypergraphs")
    d = dual(h)
    try:
        res = canonical_interval(d.hypergraph)
    except NotInterval as exc:
        raise NotInClass(f"dual is not an interval hypergraph: {exc}") from None
    pos = res.labeling

    def star_key(v):
        ps = sorted(pos[c] for c in d.star[v])
        return ((0, 0, 0) if not ps else (1, ps[0], ps[-1]), vertex_key(v))

    ranked = sorted(h.vertices, key=star_key)
    return apply_labeling(h, {v: i + 1 for i, v in enumerate(ranked)})
