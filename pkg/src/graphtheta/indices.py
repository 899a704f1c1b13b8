"""Degree-based topological indices and the ABC-ABS gap.

Per-edge contributions take the degree pair (d_u, d_v) so they can be
evaluated without a Graph at hand (the tree census works directly on
degree pairs extracted from level sequences).

Whole-graph values are accumulated with ``math.fsum`` (exactly rounded
compensated summation): the surveys turn on the sign of gaps as small
as ~1e-4, which must sit far above accumulated rounding error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

import mpmath

from .graphs import Graph, DisconnectedGraphError, GraphError, is_connected

DEFAULT_ZERO_TOL = 1e-9


def _check_degrees(du: int, dv: int) -> None:
    if du < 1 or dv < 1:
        raise GraphError(f"degrees must be positive, got ({du},{dv})")


def randic_edge(du: int, dv: int) -> float:
    """Randic (product-connectivity) contribution 1/sqrt(d_u*d_v)."""
    _check_degrees(du, dv)
    return 1.0 / math.sqrt(du * dv)


def sc_edge(du: int, dv: int) -> float:
    """Sum-connectivity contribution 1/sqrt(d_u+d_v)."""
    _check_degrees(du, dv)
    return 1.0 / math.sqrt(du + dv)


def abc_edge(du: int, dv: int) -> float:
    """Atom-bond-connectivity contribution sqrt((d_u+d_v-2)/(d_u*d_v))."""
    _check_degrees(du, dv)
    return math.sqrt((du + dv - 2) / (du * dv))


def abs_edge(du: int, dv: int) -> float:
    """Atom-bond sum-connectivity contribution sqrt((d_u+d_v-2)/(d_u+d_v))."""
    _check_degrees(du, dv)
    return math.sqrt((du + dv - 2) / (du + dv))


def edge_margin(x: int, y: int) -> float:
    """abs_edge(x,y) - abc_edge(x,y) for y >= x >= 1, y >= 2.

    Strictly increasing in each argument over integer degrees; negative
    exactly when x = 1.
    """
    if not (1 <= x <= y and y >= 2):
        raise GraphError(f"edge_margin needs y >= x >= 1 and y >= 2, got ({x},{y})")
    return abs_edge(x, y) - abc_edge(x, y)


@dataclass(frozen=True)
class IndexReport:
    """All four index values of one graph plus the gap ABC - ABS."""

    randic: float
    sum_connectivity: float
    abc: float
    abs: float
    gap: float


class Sign(Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    ZERO_WITHIN_TOL = "zero"


def sums_from_degree_pairs(pairs: Iterable[tuple[int, int]]) -> tuple[float, float]:
    """Compensated (abc, abs) sums over a stream of edge degree pairs."""
    pairs = list(pairs)
    abc = math.fsum(abc_edge(a, b) for a, b in pairs)
    abs_ = math.fsum(abs_edge(a, b) for a, b in pairs)
    return abc, abs_


def index_report(g: Graph) -> IndexReport:
    """Evaluate R, SC, ABC, ABS and the gap on a connected graph."""
    if not is_connected(g):
        raise DisconnectedGraphError("index_report needs a connected graph")
    pairs = list(g.edge_degree_pairs())
    abc, abs_ = sums_from_degree_pairs(pairs)
    return IndexReport(
        randic=math.fsum(randic_edge(a, b) for a, b in pairs),
        sum_connectivity=math.fsum(sc_edge(a, b) for a, b in pairs),
        abc=abc,
        abs=abs_,
        gap=abc - abs_,
    )


def sign_of_gap(gap: float, tol: float = DEFAULT_ZERO_TOL) -> Sign:
    if tol <= 0:
        raise GraphError(f"tolerance must be positive, got {tol}")
    if abs(gap) <= tol:
        return Sign.ZERO_WITHIN_TOL
    return Sign.POSITIVE if gap > 0 else Sign.NEGATIVE


def sign_class(report: IndexReport, tol: float = DEFAULT_ZERO_TOL) -> Sign:
    return sign_of_gap(report.gap, tol)


def gap_extended_precision(pairs: Iterable[tuple[int, int]], dps: int = 50) -> mpmath.mpf:
    """Re-evaluate the ABC - ABS gap at ``dps`` decimal digits.

    Used to confirm that a near-zero double-precision gap is not a
    rounding artifact before it is reported as a true tie.
    """
    with mpmath.workdps(dps):
        total = mpmath.mpf(0)
        for a, b in pairs:
            e = mpmath.mpf(a + b - 2)
            total += mpmath.sqrt(e / (a * b)) - mpmath.sqrt(e / (a + b))
        return total
