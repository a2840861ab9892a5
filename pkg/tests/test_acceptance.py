"""Acceptance gate: eight oracle- and property-based criteria.

Each test records one PASS/FAIL line that is printed in the pytest summary.
Running this file directly prints the same lines.  All tolerances are zero
violations; wall-clock budgets are pinned per criterion.
"""

from __future__ import annotations

import random
import sys
import time
from dataclasses import dataclass, field
from itertools import combinations, permutations

import pytest

from arcanon.circular import canonical_arc, canonical_tight_arc, circular_ones, consecutive_ones
from arcanon.classes import (
    ClassTag,
    canonical_arc_model,
    canonical_label_circular_convex,
    canonical_label_coconvex,
    canonical_label_pca_noncobip,
    canonical_label_proper_interval,
    coconvex_arc_model,
    is_circular_convex,
    is_coconvex,
    is_pca,
    is_proper_interval,
    proper_arc_model_pca,
    proper_model_proper_interval,
    recognize,
)
from arcanon.core import (
    Hypergraph,
    classify_model,
    closed_neighborhoods,
    strict_components,
    twin_classes,
    validate_graph_model,
    validate_model,
)
from arcanon.errors import NoSolution, NotCA, NotInterval, NotTightCA, NotTightInterval
from arcanon.intervals import canonical_interval, canonical_tight_interval, is_interval
from arcanon.oracle import (
    brute_force_ca,
    brute_force_interval,
    brute_force_iso,
    brute_force_ssp,
    enumerate_tight_orderings,
)
from arcanon.representations import neighbors_to_tight
from arcanon.ssp import ssp_ca, ssp_coconvex
from gen import (
    add_twin,
    congruent_orderings,
    fresh_names,
    random_ca_hypergraph,
    random_coconvex_graph,
    random_convex_bipartite,
    random_graph,
    random_hypergraph,
    random_interval_hypergraph,
    random_proper_arc_graph,
    random_proper_interval_graph,
    random_unit_circular_graph,
)

BUDGET_ORACLE = 120.0
BUDGET_CANONICITY = 180.0
BUDGET_SSP_EXACT = 300.0
BUDGET_MATRICES = 60.0


@dataclass
class Outcome:
    criterion: int
    title: str
    checked: int = 0
    failures: list = field(default_factory=list)
    budget: float | None = None
    elapsed: float = 0.0
    notes: str = ""

    def fail(self, what) -> None:
        self.failures.append(what)

    @property
    def ok(self) -> bool:
        return not self.failures and (self.budget is None or self.elapsed <= self.budget)

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        budget = f" (budget {self.budget:.0f}s)" if self.budget else ""
        extra = f"; {self.notes}" if self.notes else ""
        first = f"; first failure: {self.failures[0]}" if self.failures else ""
        return (
            f"{status} criterion {self.criterion}: {self.title}: {len(self.failures)} violations"
            f" over {self.checked} checks in {self.elapsed:.1f}s{budget}{extra}{first}"
        )


def _timed(fn):
    def run() -> Outcome:
        start = time.perf_counter()
        out = fn()
        out.elapsed = time.perf_counter() - start
        return out

    run.__name__ = fn.__name__
    return run


def _succeeds(fn, h, err) -> bool:
    try:
        fn(h)
    except err:
        return False
    return True


# --------------------------------------------------------------------------
# 1. oracle equivalence for interval and CA recognition


def _oracle_pair(out: Outcome, h: Hypergraph) -> None:
    out.checked += 1
    if _succeeds(canonical_interval, h, NotInterval) != (brute_force_interval(h) is not None):
        out.fail(("interval", h))
    if _succeeds(canonical_arc, h, NotCA) != (brute_force_ca(h) is not None):
        out.fail(("arc", h))


@_timed
def criterion_1() -> Outcome:
    out = Outcome(1, "interval/CA recognition equals brute force", budget=BUDGET_ORACLE)
    for n in range(1, 5):
        vs = list(range(1, n + 1))
        subsets = [frozenset(c) for k in range(1, n + 1) for c in combinations(vs, k)]
        for m in range(0, 5):
            for sets in combinations(subsets, m):
                _oracle_pair(out, Hypergraph.from_sets(vs, sets))
    exhaustive = out.checked
    rng = random.Random(1001)
    for _ in range(1000):
        h = random_hypergraph(rng, rng.choice([5, 6]), rng.randint(1, 7), colors=2, max_mult=2, empty=True)
        _oracle_pair(out, h)
    out.notes = f"{exhaustive} exhaustive + {out.checked - exhaustive} random"
    return out


# --------------------------------------------------------------------------
# 2. canonicity under renaming


def _pi_member(rng, max_n=11):
    g = random_proper_interval_graph(rng, rng.randint(1, 10))
    g = add_twin(rng, g) if rng.random() < 0.2 else g
    return g if g.n <= max_n else None


def _pca_noncobip_member(rng):
    maker = rng.choice([random_unit_circular_graph, random_proper_arc_graph])
    g = maker(rng, rng.randint(4, 9))
    if g.is_connected() and not g.complement().is_bipartite():
        return add_twin(rng, g) if rng.random() < 0.2 else g
    return None


def _cc_member(rng):
    g = random_convex_bipartite(rng, rng.randint(1, 5), rng.randint(1, 5), circular=True)
    return g if is_circular_convex(g) else None


def _coconvex_member(rng):
    return random_coconvex_graph(rng, rng.randint(2, 10))


def _members(rng, make, count):
    out = []
    while len(out) < count:
        g = make(rng)
        if g is not None:
            out.append(g)
    return out


@_timed
def criterion_2() -> Outcome:
    out = Outcome(2, "canonical forms constant on renaming orbits", budget=BUDGET_CANONICITY)
    rng = random.Random(2002)
    families = [
        ("CA hypergraph", lambda: random_ca_hypergraph(rng, rng.randint(1, 9), rng.randint(0, 8), colors=2, max_mult=2), lambda h: canonical_arc(h).serialized),
        ("interval hypergraph", lambda: random_interval_hypergraph(rng, rng.randint(1, 9), rng.randint(0, 8), colors=2, max_mult=2), lambda h: canonical_interval(h).serialized),
    ]
    for name, make, key in families:
        for _ in range(200):
            h = make()
            base = key(h)
            for _ in range(10):
                out.checked += 1
                if key(h.relabel(fresh_names(rng, h.vertices))) != base:
                    out.fail((name, h))
    graph_families = [
        ("proper interval", _pi_member, canonical_label_proper_interval),
        ("non-co-bipartite PCA", _pca_noncobip_member, canonical_label_pca_noncobip),
        ("circular convex", _cc_member, canonical_label_circular_convex),
        ("co-convex", _coconvex_member, canonical_label_coconvex),
    ]
    for name, make, label in graph_families:
        for g in _members(rng, make, 200):
            base = label(g).form
            for _ in range(10):
                out.checked += 1
                if label(g.relabel(fresh_names(rng, g.vertices))).form != base:
                    out.fail((name, g))
    return out


# --------------------------------------------------------------------------
# 3. model validity


@_timed
def criterion_3() -> Outcome:
    out = Outcome(3, "every emitted model validates (proper/tight where promised)")
    rng = random.Random(3003)
    counts = {}

    def count(kind):
        counts[kind] = counts.get(kind, 0) + 1
        out.checked += 1

    for _ in range(300):
        h = random_ca_hypergraph(rng, rng.randint(1, 9), rng.randint(0, 8), colors=2, max_mult=2)
        res = canonical_arc(h)
        count("arc")
        if not validate_model(h, res.model, res.labeling):
            out.fail(("arc", h))
        try:
            res = canonical_tight_arc(h)
        except NotTightCA:
            continue
        count("tight arc")
        if not (validate_model(h, res.model, res.labeling) and classify_model(res.model).is_tight):
            out.fail(("tight arc", h))
    for _ in range(300):
        h = random_interval_hypergraph(rng, rng.randint(1, 9), rng.randint(0, 8), colors=2, max_mult=2)
        res = canonical_interval(h)
        count("interval")
        if not validate_model(h, res.model, res.labeling):
            out.fail(("interval", h))
        try:
            res = canonical_tight_interval(h)
        except NotTightInterval:
            continue
        count("tight interval")
        if not (validate_model(h, res.model, res.labeling) and classify_model(res.model).is_tight):
            out.fail(("tight interval", h))
    makers = [_pi_member, _pca_noncobip_member, _coconvex_member]
    for g in _members(rng, lambda r: r.choice(makers)(r), 500):
        if is_pca(g):
            res = proper_arc_model_pca(g)
            count("proper")
            if not (validate_graph_model(g, res.model) and classify_model(res.model).is_proper):
                out.fail(("proper", g))
        if is_proper_interval(g):
            res = proper_model_proper_interval(g)
            count("proper interval")
            if not (validate_graph_model(g, res.model) and classify_model(res.model).is_proper):
                out.fail(("proper interval", g))
            star = g.relabel(res.labeling)
            tight = neighbors_to_tight(star, list(range(1, g.n + 1)))
            count("tight neighborhoods")
            if not (validate_graph_model(star, tight) and classify_model(tight).is_tight):
                out.fail(("tight neighborhoods", g))
        if is_coconvex(g):
            res = coconvex_arc_model(g)
            count("co-convex")
            if not validate_graph_model(g, res.model):
                out.fail(("co-convex", g))
        if is_pca(g) or is_coconvex(g):
            res = canonical_arc_model(g)
            count("canonical arc")
            if not validate_graph_model(g, res.model):
                out.fail(("canonical arc", g))
    if out.checked < 1000:
        out.fail(f"only {out.checked} models generated")
    out.notes = ", ".join(f"{k} {v}" for k, v in sorted(counts.items()))
    return out


# --------------------------------------------------------------------------
# 4. uniqueness of tight arc orderings


@_timed
def criterion_4() -> Outcome:
    out = Outcome(4, "tight orderings of strictly connected CA hypergraphs are congruent")
    rng = random.Random(4004)
    while out.checked < 100:
        n = rng.randint(3, 6)
        h = random_ca_hypergraph(rng, n, rng.randint(2, 7))
        if not strict_components(h).strictly_connected:
            continue
        found = set(enumerate_tight_orderings(h))
        if not found:
            continue
        out.checked += 1
        if found != congruent_orderings(sorted(found)[0], twin_classes(h)):
            out.fail(h)
    return out


# --------------------------------------------------------------------------
# 5. exact SSP round trip


@_timed
def criterion_5() -> Outcome:
    out = Outcome(5, "ssp_ca recovers proper interval and non-co-bipartite PCA graphs exactly", budget=BUDGET_SSP_EXACT)
    rng = random.Random(5005)
    pi = _members(rng, lambda r: _pi_member(r, max_n=10), 200)
    pca = _members(rng, _pca_noncobip_member, 200)
    non_pi = sum(not is_proper_interval(g) for g in pca)
    small = 0
    for g in pi + pca:
        h = closed_neighborhoods(g)
        out.checked += 1
        try:
            if ssp_ca(h) != g:
                out.fail(g)
        except NoSolution:
            out.fail(g)
        if g.n <= 6:
            small += 1
            if brute_force_ssp(h) != [g]:
                out.fail(("not unique", g))
    out.notes = f"{non_pi} PCA graphs are not proper interval; {small} oracle uniqueness checks"
    return out


# --------------------------------------------------------------------------
# 6. SSP round trip up to isomorphism


@_timed
def criterion_6() -> Outcome:
    out = Outcome(6, "co-convex SSP solutions reproduce N[G] and are isomorphic to G")
    rng = random.Random(6006)
    iso_checked = 0
    for _ in range(200):
        g = _coconvex_member(rng)
        h = closed_neighborhoods(g)
        out.checked += 1
        try:
            sol = ssp_coconvex(h)
        except NoSolution:
            out.fail(g)
            continue
        if closed_neighborhoods(sol) != h:
            out.fail(("N differs", g))
        if g.n <= 8:
            iso_checked += 1
            if brute_force_iso(sol, g) is None:
                out.fail(("not isomorphic", g))
    out.notes = f"{iso_checked} isomorphism checks"
    return out


# --------------------------------------------------------------------------
# 7. circular-ones matrices


def _row_circular(row, perm) -> bool:
    bits = [row[c] for c in perm]
    k = len(bits)
    ones = sum(bits)
    if ones in (0, k):
        return True
    # exactly one 0 -> 1 transition around the cycle
    return sum(1 for i in range(k) if bits[i - 1] == 0 and bits[i] == 1) == 1


def _row_consecutive(row, perm) -> bool:
    bits = [row[c] for c in perm]
    idx = [i for i, b in enumerate(bits) if b]
    return not idx or idx[-1] - idx[0] + 1 == len(idx)


def _brute_circular(m, cols) -> bool:
    if cols <= 1:
        return True
    for rest in permutations(range(1, cols)):
        perm = (0, *rest)
        if all(_row_circular(r, perm) for r in m):
            return True
    return False


@_timed
def criterion_7() -> Outcome:
    out = Outcome(7, "circular_ones equals brute-force column search", budget=BUDGET_MATRICES)
    rng = random.Random(7007)
    for _ in range(500):
        rows, cols = rng.randint(1, 7), rng.randint(1, 7)
        p = rng.random()
        m = [[1 if rng.random() < p else 0 for _ in range(cols)] for _ in range(rows)]
        out.checked += 1
        perm = circular_ones(m)
        if (perm is not None) != _brute_circular(m, cols):
            out.fail(m)
        elif perm is not None and (sorted(perm) != list(range(cols)) or not all(_row_circular(r, perm) for r in m)):
            out.fail(("bad permutation", m))
        perm = consecutive_ones(m)
        if perm is not None and not all(_row_consecutive(r, perm) for r in m):
            out.fail(("bad consecutive permutation", m))
    return out


# --------------------------------------------------------------------------
# 8. class inclusions


@_timed
def criterion_8() -> Outcome:
    out = Outcome(8, "class inclusions hold on random graphs")
    rng = random.Random(8008)
    T = ClassTag
    for _ in range(2000):
        g = random_graph(rng, rng.randint(1, 8))
        tags = recognize(g)
        out.checked += 1
        if T.ProperInterval in tags and T.PCA not in tags:
            out.fail(("PI but not PCA", g))
        if T.PCA in tags and T.TCA not in tags:
            out.fail(("PCA but not TCA", g))
        if T.TCA in tags and not g.complement().is_bipartite() and T.PCA not in tags:
            out.fail(("TCA, not co-bipartite, not PCA", g))
        pi_alt = T.Interval in tags and is_interval(closed_neighborhoods(g))
        if (T.ProperInterval in tags) != pi_alt:
            out.fail(("PI differs from Interval and N[G] interval", g))
    return out


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 9)])
def test_acceptance(criterion, report):
    out = criterion()
    report(out.line())
    print(out.line())
    assert out.ok, out.line()


if __name__ == "__main__":
    results = [c() for c in CRITERIA]
    for r in results:
        print(r.line(), flush=True)
    sys.exit(0 if all(r.ok for r in results) else 1)
