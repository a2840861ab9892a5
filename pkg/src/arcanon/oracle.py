"""Exhaustive reference searches used to cross-check the fast algorithms.

Nothing here shares code with the canonization modules beyond the data
types, so agreement between the two is meaningful.
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Sequence

from .core import Graph, Hypergraph, closed_neighborhoods, sort_vertices
from .errors import SizeLimit


def _check_size(n: int, limit: int) -> None:
    if n > limit:
        raise SizeLimit(f"exhaustive search limited to {limit} vertices, got {n}")


def _consecutive(positions: list[int]) -> bool:
    positions.sort()
    return positions[-1] - positions[0] + 1 == len(positions)


def _circular_span(positions: set[int], n: int) -> tuple[int, int] | None:
    """(start, end) of the arc formed by ``positions`` on Z_n, or None."""
    starts = [p for p in positions if (p - 1) % n not in positions]
    if len(starts) != 1:
        return None
    s = starts[0]
    return s, (s + len(positions) - 1) % n


def is_interval_order(h: Hypergraph, order: Sequence) -> bool:
    pos = {v: i for i, v in enumerate(order)}
    return all(_consecutive([pos[v] for v in e.members]) for e in h.edges if e.members)


def is_arc_order(h: Hypergraph, order: Sequence) -> bool:
    n = len(order)
    pos = {v: i for i, v in enumerate(order)}
    for e in h.edges:
        k = len(e.members)
        if k == 0 or k == n:
            continue
        if _circular_span({pos[v] for v in e.members}, n) is None:
            return False
    return True


def is_tight_arc_order(h: Hypergraph, order: Sequence) -> bool:
    """Every hyperedge is an arc and every strict inclusion shares an endpoint."""
    n = len(order)
    pos = {v: i for i, v in enumerate(order)}
    spans = []
    for e in h.edges:
        k = len(e.members)
        pts = {pos[v] for v in e.members}
        if k == 0:
            continue
        if k == n:
            spans.append((frozenset(pts), None))
            continue
        sp = _circular_span(pts, n)
        if sp is None:
            return False
        spans.append((frozenset(pts), sp))
    for (pa, sa), (pb, sb) in combinations(spans, 2):
        for (big, bs), (small, ss) in (((pa, sa), (pb, sb)), ((pb, sb), (pa, sa))):
            if small < big and bs is not None and bs[0] != ss[0] and bs[1] != ss[1]:
                return False
    return True


def is_tight_interval_order(h: Hypergraph, order: Sequence) -> bool:
    pos = {v: i for i, v in enumerate(order)}
    spans = []
    for e in h.edges:
        if not e.members:
            continue
        ps = sorted(pos[v] for v in e.members)
        if ps[-1] - ps[0] + 1 != len(ps):
            return False
        spans.append((frozenset(ps), ps[0], ps[-1]))
    for a, b in combinations(spans, 2):
        for big, small in ((a, b), (b, a)):
            if small[0] < big[0] and big[1] != small[1] and big[2] != small[2]:
                return False
    return True


def brute_force_interval(h: Hypergraph) -> list | None:
    """Some vertex order making every hyperedge consecutive, or None."""
    _check_size(h.n, 9)
    for perm in permutations(h.vertices):
        if is_interval_order(h, perm):
            return list(perm)
    return None


def circular_orders(vertices: Sequence):
    """All circular orders up to rotation and reflection ((n-1)!/2 of them)."""
    vs = list(vertices)
    if len(vs) <= 2:
        yield vs
        return
    first, rest = vs[0], vs[1:]
    for perm in permutations(rest):
        # reflection maps (first, a, ..., z) to (first, z, ..., a)
        if vs.index(perm[0]) < vs.index(perm[-1]):
            yield [first, *perm]


def brute_force_ca(h: Hypergraph) -> list | None:
    _check_size(h.n, 9)
    for order in circular_orders(h.vertices):
        if is_arc_order(h, order):
            return order
    return None


def brute_force_tight_ca(h: Hypergraph) -> list | None:
    _check_size(h.n, 9)
    for order in circular_orders(h.vertices):
        if is_tight_arc_order(h, order):
            return order
    return None


def brute_force_tight_interval(h: Hypergraph) -> list | None:
    _check_size(h.n, 9)
    for perm in permutations(h.vertices):
        if is_tight_interval_order(h, perm):
            return list(perm)
    return None


def enumerate_tight_orderings(h: Hypergraph) -> list[tuple]:
    """Every vertex sequence (all n! of them, rotations included) that is a tight arc ordering."""
    _check_size(h.n, 7)
    return [perm for perm in permutations(h.vertices) if is_tight_arc_order(h, perm)]


def brute_force_iso(g1: Graph, g2: Graph) -> dict | None:
    """An isomorphism g1 -> g2 as a dict, or None."""
    _check_size(max(g1.n, g2.n), 8)
    if g1.n != g2.n or len(g1.edges()) != len(g2.edges()):
        return None
    if sorted(map(g1.degree, g1.vertices)) != sorted(map(g2.degree, g2.vertices)):
        return None
    src = list(g1.vertices)
    e1 = g1.edges()
    for perm in permutations(g2.vertices):
        phi = dict(zip(src, perm))
        if all(g2.has_edge(phi[a], phi[b]) for a, b in e1):
            return phi
    return None


def brute_force_ssp(h: Hypergraph) -> list[Graph]:
    """All graphs G on V(h) with N[G] = h, by enumerating every edge subset."""
    _check_size(h.n, 6)
    if any(e.color != 0 for e in h.edges):
        return []
    vs = list(h.vertices)
    bit = {v: 1 << i for i, v in enumerate(vs)}
    target = sorted(sum(bit[v] for v in e.members) for e in h.expanded())
    if len(target) != len(vs):
        return []
    pairs = list(combinations(range(len(vs)), 2))
    sols = []
    for mask in range(1 << len(pairs)):
        nb = [1 << i for i in range(len(vs))]
        for k, (a, b) in enumerate(pairs):
            if mask >> k & 1:
                nb[a] |= 1 << b
                nb[b] |= 1 << a
        if sorted(nb) == target:
            g = Graph(vs, [(vs[a], vs[b]) for k, (a, b) in enumerate(pairs) if mask >> k & 1])
            if closed_neighborhoods(g) != h:
                raise RuntimeError("internal error: bitmask and set neighborhoods disagree")
            sols.append(g)
    return sols


def brute_force_proper_interval_graph(g: Graph) -> list | None:
    """A vertex order in which every closed neighborhood is consecutive."""
    return brute_force_interval(closed_neighborhoods(g))


def brute_force_interval_graph(g: Graph) -> bool:
    """Interval graph test by searching a clique order (maximal cliques consecutive per vertex)."""
    cliques = _maximal_cliques(g)
    h = Hypergraph(range(len(cliques)), [[i for i, c in enumerate(cliques) if v in c] for v in g.vertices])
    _check_size(h.n, 9)
    return brute_force_interval(h) is not None


def _maximal_cliques(g: Graph) -> list[frozenset]:
    vs = sort_vertices(g.vertices)
    cliques: list[frozenset] = []
    for r in range(len(vs), 0, -1):
        for c in combinations(vs, r):
            cs = frozenset(c)
            if any(cs <= k for k in cliques):
                continue
            if all(g.has_edge(a, b) for a, b in combinations(c, 2)):
                cliques.append(cs)
    return cliques
