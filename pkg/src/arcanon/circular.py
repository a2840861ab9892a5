"""Canonical arc representations of edge-colored CA hypergraphs.

Cutting the circle at a vertex x turns every arc through x into its
complement, which yields an interval hypergraph with x isolated.  Each cut
is canonized as an interval hypergraph; the least serialized cut wins and
is closed back into a circle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import (
    EMPTY,
    EMPTY_ARC,
    FULL_ARC,
    Arc,
    ArcModel,
    Edge,
    Hypergraph,
    IntervalModel,
    Vertex,
    tightened,
    tightened_color,
    vertex_key,
)
from .errors import NotCA, NotInterval, NotTightCA
from .intervals import canonical_interval, strip_color


@dataclass(frozen=True)
class VertexCut:
    x: Vertex
    hypergraph: Hypergraph  # colors are 3*h + c with c the cut coloring


def cut_at_vertex(h: Hypergraph, x: Vertex) -> VertexCut:
    """The cut hypergraph H_x with the combined coloring 3*color + c.

    c is 0 when x is outside H and V - H is not a hyperedge, 1 when x is in H
    and V - H is not a hyperedge, and 2 when both H and V - H occur.  Images
    that coincide as sets and colors merge by summing multiplicities.
    """
    if x not in h.vertex_set:
        raise ValueError(f"{x!r} is not a vertex")
    V = h.vertex_set
    present = {e.members for e in h.edges}
    out = []
    for e in h.edges:
        image = e.members if x not in e.members else V - e.members
        if V - e.members in present:
            c = 2
        else:
            c = 0 if x not in e.members else 1
        out.append(Edge(image, e.mult, 3 * e.color + c))
    return VertexCut(x, Hypergraph(h.vertices, out))


def _lossless_cut(h: Hypergraph, x: Vertex) -> Hypergraph:
    # color 2*color + flipped: unlike the merged cut this keeps H and V - H
    # apart, so multiplicities and colors survive the round trip
    V = h.vertex_set
    return Hypergraph(
        h.vertices,
        [
            Edge(V - e.members, e.mult, 2 * e.color + 1) if x in e.members else Edge(e.members, e.mult, 2 * e.color)
            for e in h.edges
        ],
    )


@dataclass(frozen=True)
class ArcCanonResult:
    model: ArcModel
    labeling: dict  # vertex -> point of Z_n
    serialized: bytes

    @property
    def order(self) -> list:
        return sorted(self.labeling, key=self.labeling.__getitem__)


def close_interval(iv: Arc, n: int, flipped: bool) -> Arc:
    """Map an interval of [1, n] onto Z_n (point p -> p - 1), complementing if flipped."""
    if iv.kind == EMPTY:
        return FULL_ARC if flipped else EMPTY_ARC
    a, b = iv.start - 1, iv.end - 1
    if not flipped:
        return FULL_ARC if b - a + 1 == n else Arc.span(a, b)
    if b - a + 1 == n:
        return EMPTY_ARC
    return Arc.span((b + 1) % n, (a - 1) % n)


def _close_model(model: IntervalModel) -> ArcModel:
    n = model.size
    rows = []
    for _, iv, c, m in model.entries():
        rows.append((close_interval(iv, n, bool(c & 1)), c >> 1, m))
    rows.sort(key=lambda r: (r[0].as_tuple(), r[1], r[2]))
    return ArcModel(
        n,
        {i: r[0] for i, r in enumerate(rows)},
        {i: r[1] for i, r in enumerate(rows)},
        {i: r[2] for i, r in enumerate(rows)},
    )


def canonical_arc(h: Hypergraph) -> ArcCanonResult:
    n = h.n
    if n < 1:
        raise ValueError("canonical arc models need at least one vertex")
    if any(e.color < 0 for e in h.edges):
        # the composite color packs the flip bit into the low bit
        raise ValueError("colors must be non-negative")
    best = None
    for x in sorted(h.vertices, key=vertex_key):
        try:
            res = canonical_interval(_lossless_cut(h, x))
        except NotInterval:
            continue
        if best is None or res.serialized < best.serialized:
            best = res
    if best is None:
        raise NotCA("no vertex cut yields an interval hypergraph")
    model = _close_model(best.model)
    labeling = {v: p - 1 for v, p in best.labeling.items()}
    return ArcCanonResult(model, labeling, model.serialize())


def is_ca(h: Hypergraph) -> bool:
    try:
        canonical_arc(h)
    except NotCA:
        return False
    return True


def canonical_tight_arc(h: Hypergraph) -> ArcCanonResult:
    try:
        res = canonical_arc(tightened(h))
    except NotCA as exc:
        raise NotTightCA(str(exc)) from None
    model = strip_color(res.model, tightened_color(h))
    return ArcCanonResult(model, res.labeling, model.serialize())


def is_tight_ca(h: Hypergraph) -> bool:
    try:
        canonical_tight_arc(h)
    except NotTightCA:
        return False
    return True


# --------------------------------------------------------------------------
# binary matrices

Matrix = Sequence[Sequence[int]]


def matrix_hypergraph(m: Matrix) -> Hypergraph:
    """Columns become vertices 0..c-1 and rows become hyperedges."""
    if not m:
        return Hypergraph([], [])
    width = len(m[0])
    if any(len(r) != width for r in m):
        raise ValueError("matrix rows have different lengths")
    return Hypergraph(range(width), [frozenset(j for j, b in enumerate(r) if b) for r in m])


def rows_circular(m: Matrix, perm: Sequence[int]) -> bool:
    """Every row's ones are circularly consecutive after permuting columns."""
    n = len(perm)
    for r in m:
        ones = {i for i, j in enumerate(perm) if r[j]}
        if 0 < len(ones) < n and sum(1 for p in ones if (p - 1) % n not in ones) != 1:
            return False
    return True


def rows_consecutive(m: Matrix, perm: Sequence[int]) -> bool:
    for r in m:
        ones = [i for i, j in enumerate(perm) if r[j]]
        if ones and ones[-1] - ones[0] + 1 != len(ones):
            return False
    return True


def circular_ones(m: Matrix) -> list[int] | None:
    """Column permutation (perm[i] = column placed at position i) or None."""
    h = matrix_hypergraph(m)
    if h.n == 0:
        return []
    try:
        res = canonical_arc(h)
    except NotCA:
        return None
    perm = res.order
    if not rows_circular(m, perm):
        raise RuntimeError("internal error: circular-ones permutation failed verification")
    return perm


def consecutive_ones(m: Matrix) -> list[int] | None:
    h = matrix_hypergraph(m)
    try:
        res = canonical_interval(h)
    except NotInterval:
        return None
    perm = res.order
    if not rows_consecutive(m, perm):
        raise RuntimeError("internal error: consecutive-ones permutation failed verification")
    return perm
