"""Census and verification engine.

Reproduces the tree censuses (sign of the ABC-ABS gap per order, near
ties), and empirically verifies the structural statements over
enumerated universes: the min-degree-2 bound (p1), subdivision
invariance of the gap (p2), line graphs (t1), and the two
pendent-count hypotheses (t2, t3).
"""

from __future__ import annotations

import heapq
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from . import treegen
from .graphs import Graph, Shape, classify_shape, from_edge_list, min_degree
from .graph6 import to_graph6
from .indices import (
    DEFAULT_ZERO_TOL,
    Sign,
    gap_extended_precision,
    index_report,
    sign_of_gap,
)
from .linegraph import line_graph
from .smallgraphs import GraphUniverse

DEFAULT_WITNESS_CAP = 100
RECHECK_DPS = 50


@dataclass(frozen=True)
class ClassificationRecord:
    """Sign census of the ABC-ABS gap over all trees of one order."""

    order: int
    total: int
    positive: int
    negative: int
    zero: int
    tol: float
    min_abs_gap: float
    min_abs_gap_graph6: str
    negative_witnesses: tuple[str, ...]  # capped; counts stay exact
    witness_cap: int

    @property
    def negative_ratio(self) -> float:
        return self.negative / self.total


@dataclass(frozen=True)
class TieRecord:
    graph6: str
    abc: float
    abs: float
    abs_gap: float


@dataclass(frozen=True)
class VerificationReport:
    statement: str
    universe: str
    checked: int
    hypothesis_holds: int
    conclusion_failures: tuple[str, ...]  # graph6 witnesses
    elapsed: float
    min_margin: float | None = None

    @property
    def ok(self) -> bool:
        return not self.conclusion_failures


# --- tree census ------------------------------------------------------

def _scan_partition(args) -> dict:
    n, parts, part, tol, cap = args
    positive = negative = zero = 0
    min_abs = float("inf")
    min_g6 = ""
    neg_witnesses: list[tuple[int, str]] = []
    zero_candidates: list[str] = []
    idx = part
    for seq in treegen.partitioned_sequences(n, parts, part):
        abc, abs_ = treegen.abc_abs_sums(seq)
        gap = abc - abs_
        a = abs(gap)
        if a < min_abs or (a == min_abs and min_g6):
            g6 = to_graph6(treegen.sequence_to_graph(seq))
            if a < min_abs or g6 < min_g6:
                min_abs = a
                min_g6 = g6
        sign = sign_of_gap(gap, tol)
        if sign is Sign.ZERO_WITHIN_TOL:
            # re-verify at extended precision before counting as zero
            hp = gap_extended_precision(treegen.degree_pairs(seq), RECHECK_DPS)
            if abs(hp) > tol:
                sign = Sign.POSITIVE if hp > 0 else Sign.NEGATIVE
            else:
                zero += 1
                zero_candidates.append(to_graph6(treegen.sequence_to_graph(seq)))
        if sign is Sign.POSITIVE:
            positive += 1
        elif sign is Sign.NEGATIVE:
            negative += 1
            if len(neg_witnesses) < cap:
                neg_witnesses.append((idx, to_graph6(treegen.sequence_to_graph(seq))))
        idx += parts
    return {
        "positive": positive,
        "negative": negative,
        "zero": zero,
        "min_abs": min_abs,
        "min_g6": min_g6,
        "neg": neg_witnesses,
        "zero_candidates": zero_candidates,
    }


def classify_trees(
    n: int,
    tol: float = DEFAULT_ZERO_TOL,
    workers: int = 1,
    witness_cap: int = DEFAULT_WITNESS_CAP,
) -> ClassificationRecord:
    """Full sign census over all free trees of order n.

    The result is independent of the worker count: partitions are
    index-strided slices of the deterministic stream and the merge is
    order-normalized.
    """
    if n < 3:
        raise ValueError(f"census needs order >= 3, got {n}")
    parts = max(1, workers)
    jobs = [(n, parts, part, tol, witness_cap) for part in range(parts)]
    if parts == 1:
        partials = [_scan_partition(jobs[0])]
    else:
        with ProcessPoolExecutor(max_workers=parts) as pool:
            partials = list(pool.map(_scan_partition, jobs))
    positive = sum(p["positive"] for p in partials)
    negative = sum(p["negative"] for p in partials)
    zero = sum(p["zero"] for p in partials)
    best = min(
        ((p["min_abs"], p["min_g6"]) for p in partials if p["min_g6"]),
    )
    witnesses = sorted((w for p in partials for w in p["neg"]))[:witness_cap]
    return ClassificationRecord(
        order=n,
        total=positive + negative + zero,
        positive=positive,
        negative=negative,
        zero=zero,
        tol=tol,
        min_abs_gap=best[0],
        min_abs_gap_graph6=best[1],
        negative_witnesses=tuple(g6 for _, g6 in witnesses),
        witness_cap=witness_cap,
    )


def find_near_ties(n: int, top_k: int) -> list[TieRecord]:
    """The top_k trees of order n with the smallest |ABC - ABS|,
    ascending; ties broken by graph6 string."""
    if n < 3:
        raise ValueError(f"near-tie search needs order >= 3, got {n}")
    if top_k < 1:
        raise ValueError(f"top_k must be >= 1, got {top_k}")

    def records():
        for seq in treegen.free_tree_sequences(n):
            abc, abs_ = treegen.abc_abs_sums(seq)
            g6 = to_graph6(treegen.sequence_to_graph(seq))
            yield (abs(abc - abs_), g6, abc, abs_)

    best = heapq.nsmallest(top_k, records())
    return [TieRecord(graph6=g6, abc=abc, abs=abs_, abs_gap=a) for a, g6, abc, abs_ in best]


def near_zero_candidates(
    n: int, threshold: float = 1e-6
) -> list[tuple[str, float, float]]:
    """Trees of order n with |gap| <= threshold, with the gap re-evaluated
    at extended precision: (graph6, gap, gap_extended)."""
    out = []
    for seq in treegen.free_tree_sequences(n):
        abc, abs_ = treegen.abc_abs_sums(seq)
        gap = abc - abs_
        if abs(gap) <= threshold:
            hp = gap_extended_precision(treegen.degree_pairs(seq), RECHECK_DPS)
            out.append((to_graph6(treegen.sequence_to_graph(seq)), gap, float(hp)))
    return out


@dataclass(frozen=True)
class NegativeTreeResult:
    order: int
    graph: Graph
    graph6: str
    gap: float
    unique: bool


def smallest_negative_tree(
    tol: float = DEFAULT_ZERO_TOL, max_order: int = 20
) -> NegativeTreeResult:
    """Scan orders 3, 4, ... and return the first tree whose gap is
    below -tol (ABC < ABS)."""
    for n in range(3, max_order + 1):
        hits = []
        for seq in treegen.free_tree_sequences(n):
            abc, abs_ = treegen.abc_abs_sums(seq)
            if abc - abs_ < -tol:
                hits.append((seq, abc - abs_))
        if hits:
            hits.sort(key=lambda h: to_graph6(treegen.sequence_to_graph(h[0])))
            seq, gap = hits[0]
            g = treegen.sequence_to_graph(seq)
            return NegativeTreeResult(
                order=n,
                graph=g,
                graph6=to_graph6(g),
                gap=gap,
                unique=len(hits) == 1,
            )
    raise RuntimeError(f"no negative tree found up to order {max_order}")


def ratio_table(
    n_from: int, n_to: int, tol: float = DEFAULT_ZERO_TOL, workers: int = 1
) -> list[tuple[int, int, int, float]]:
    """(n, total, negative, negative/total) per order in the range."""
    if not 3 <= n_from <= n_to:
        raise ValueError(f"need 3 <= n_from <= n_to, got {n_from}..{n_to}")
    rows = []
    for n in range(n_from, n_to + 1):
        rec = classify_trees(n, tol=tol, workers=workers)
        rows.append((n, rec.total, rec.negative, rec.negative_ratio))
    return rows


# --- statement verifiers ----------------------------------------------

def _universe_graphs(universes: GraphUniverse | Sequence[GraphUniverse]):
    if isinstance(universes, GraphUniverse):
        universes = [universes]
    label = ", ".join(f"{u.source}:n={u.order}({len(u)})" for u in universes)
    return universes, label


def verify_min_degree2(
    universes: GraphUniverse | Sequence[GraphUniverse],
    tol: float = 1e-12,
) -> VerificationReport:
    """p1: min degree >= 2 forces gap <= 0, zero exactly on cycles."""
    universes, label = _universe_graphs(universes)
    t0 = time.perf_counter()
    checked = holds = 0
    failures = []
    for u in universes:
        for g in u:
            checked += 1
            if g.n < 3 or min_degree(g) < 2:
                continue
            holds += 1
            gap = index_report(g).gap
            is_cycle = classify_shape(g) is Shape.CYCLE
            if gap > tol or ((abs(gap) <= tol) != is_cycle):
                failures.append(to_graph6(g))
    return VerificationReport(
        statement="p1",
        universe=label,
        checked=checked,
        hypothesis_holds=holds,
        conclusion_failures=tuple(failures),
        elapsed=time.perf_counter() - t0,
    )


def _random_tree_edges(rng: random.Random, n: int) -> list[tuple[int, int]]:
    return [(rng.randrange(i), i) for i in range(1, n)]


def verify_subdivision_invariance(
    trials: int = 10_000,
    seed: int = 0,
    tol: float = 1e-12,
    max_order: int = 12,
) -> VerificationReport:
    """p2: inserting a vertex on an edge at a degree-2 vertex keeps the
    gap fixed.  Randomized trees and unicyclic graphs, seeded."""
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    rng = random.Random(seed)
    t0 = time.perf_counter()
    checked = 0
    failures = []
    while checked < trials:
        n = rng.randint(3, max_order)
        edges = _random_tree_edges(rng, n)
        if rng.random() < 0.5:
            non_edges = [
                (u, v)
                for u in range(n)
                for v in range(u + 1, n)
                if (u, v) not in edges and (v, u) not in edges
            ]
            if non_edges:
                edges.append(rng.choice(non_edges))
        g = from_edge_list(n, edges)
        deg2 = [v for v in range(n) if g.degrees[v] == 2]
        if not deg2:
            continue
        checked += 1
        x = rng.choice(deg2)
        w = rng.choice(g.adj[x])
        subdivided = index_report(_subdivide(g, x, w)).gap
        if abs(index_report(g).gap - subdivided) > tol:
            failures.append(to_graph6(g))
    return VerificationReport(
        statement="p2",
        universe=f"seeded random trees/unicyclic, seed={seed}, trials={trials}",
        checked=checked,
        hypothesis_holds=checked,
        conclusion_failures=tuple(failures),
        elapsed=time.perf_counter() - t0,
    )


def _subdivide(g: Graph, x: int, w: int) -> Graph:
    from .graphs import subdivide_at_degree2

    return subdivide_at_degree2(g, x, (x, w))


def verify_line_graphs(
    universes: GraphUniverse | Sequence[GraphUniverse],
    tol: float = DEFAULT_ZERO_TOL,
) -> VerificationReport:
    """t1: the line graph of any connected root of order >= 5 other
    than a path or cycle has ABS > ABC (gap strictly negative)."""
    universes, label = _universe_graphs(universes)
    t0 = time.perf_counter()
    checked = holds = 0
    failures = []
    min_margin = None
    for u in universes:
        for k in u:
            checked += 1
            if k.n < 5 or classify_shape(k) in (Shape.PATH, Shape.CYCLE):
                continue
            holds += 1
            gap = index_report(line_graph(k)).gap
            margin = -gap
            if min_margin is None or margin < min_margin:
                min_margin = margin
            if not gap < -tol:
                failures.append(to_graph6(k))
    return VerificationReport(
        statement="t1",
        universe=label,
        checked=checked,
        hypothesis_holds=holds,
        conclusion_failures=tuple(failures),
        elapsed=time.perf_counter() - t0,
        min_margin=min_margin,
    )


def bounded_pendents_no_degree2(g: Graph) -> bool:
    """t2 hypothesis: at least one edge, pendent count <= floor(m/2),
    and no vertex of degree 2."""
    if g.m < 1:
        return False
    pendents = sum(1 for d in g.degrees if d == 1)
    return pendents <= g.m // 2 and all(d != 2 for d in g.degrees)


def bounded_pendents_isolated_degree2(g: Graph) -> bool:
    """t3 hypothesis: at least one edge, pendent count <= floor(m/2),
    and no degree-2 vertex has a neighbor of degree 2, 3, or 4."""
    if g.m < 1:
        return False
    pendents = sum(1 for d in g.degrees if d == 1)
    if pendents > g.m // 2:
        return False
    for v in range(g.n):
        if g.degrees[v] == 2 and any(g.degrees[w] in (2, 3, 4) for w in g.adj[v]):
            return False
    return True


def _verify_hypothesis(
    statement: str,
    hypothesis: Callable[[Graph], bool],
    universes: GraphUniverse | Sequence[GraphUniverse],
    tol: float,
) -> VerificationReport:
    universes, label = _universe_graphs(universes)
    t0 = time.perf_counter()
    checked = holds = 0
    failures = []
    min_margin = None
    for u in universes:
        for g in u:
            checked += 1
            if not hypothesis(g):
                continue
            holds += 1
            gap = index_report(g).gap
            margin = -gap
            if min_margin is None or margin < min_margin:
                min_margin = margin
            if not gap < -tol:
                failures.append(to_graph6(g))
    return VerificationReport(
        statement=statement,
        universe=label,
        checked=checked,
        hypothesis_holds=holds,
        conclusion_failures=tuple(failures),
        elapsed=time.perf_counter() - t0,
        min_margin=min_margin,
    )


def verify_no_degree2_bound(universes, tol: float = DEFAULT_ZERO_TOL) -> VerificationReport:
    """t2: the no-degree-2 / bounded-pendent hypothesis forces ABS > ABC."""
    return _verify_hypothesis("t2", bounded_pendents_no_degree2, universes, tol)


def verify_isolated_degree2_bound(universes, tol: float = DEFAULT_ZERO_TOL) -> VerificationReport:
    """t3: the isolated-degree-2 / bounded-pendent hypothesis forces
    ABS > ABC."""
    return _verify_hypothesis("t3", bounded_pendents_isolated_degree2, universes, tol)
