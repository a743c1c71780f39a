"""
Asymptotic right-hand sides for record totals over P_n.

Each estimate is the bracketed factor multiplying B_n. It is paired with the
exact total divided by B_n, computed from big integers in 96-bit working
precision, and the relative error between the two.

Neither weak total uses its closed Bell combination, since both disagree with
enumeration; their exact sides come from the transfer-state scans. The weak
height estimate follows the closed combination, so it stays well above the
other three against the enumerated total.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum

import mpmath

from closedform import thm1iii_strong_h1_total_all, thm2ii_strong_height_total_all
from combinum import bell
from oracle.transfer import height_one_totals, weak_height_totals
from asym.saddle import AsymDomainError, solve_xi

logger = logging.getLogger(__name__)

WORKING_BITS: int = 96

# Ceiling on rel_err for n >= 50. Measured maxima at n = 50: strong-h1 0.0240,
# strong-height 0.0233, weak-h1 0.0071, weak-height 0.1440.
REL_ERR_CEILING: float = 0.03
WEAK_HEIGHT_REL_ERR_CEILING: float = 0.16


class AsymStat(Enum):
    """Totals over P_n with a stated asymptotic estimate."""
    STRONG_H1_ALL = "strong-h1"
    STRONG_HEIGHT_ALL = "strong-height"
    WEAK_H1_ALL = "weak-h1"
    WEAK_HEIGHT_ALL = "weak-height"


def rel_err_ceiling(stat: AsymStat) -> float:
    """Largest rel_err expected for n >= 50."""
    if stat is AsymStat.WEAK_HEIGHT_ALL:
        return WEAK_HEIGHT_REL_ERR_CEILING
    return REL_ERR_CEILING


@dataclass(frozen=True)
class AsymEstimate:
    """
    An asymptotic estimate next to the exact value, both in units of B_n.

    Attributes:
        stat: Which total
        n: Index
        xi: Root of xi e^xi = n + 1
        estimate: Asymptotic bracketed factor
        exact_ratio: Exact total / B_n
        rel_err: |exact_ratio / estimate - 1|
    """
    stat: AsymStat
    n: int
    xi: float
    estimate: float
    exact_ratio: float
    rel_err: float


def exact_numerator(stat: AsymStat, n: int) -> int:
    """Exact total over P_n for the statistic."""
    if stat is AsymStat.STRONG_H1_ALL:
        return thm1iii_strong_h1_total_all(n)
    if stat is AsymStat.STRONG_HEIGHT_ALL:
        return thm2ii_strong_height_total_all(n)
    if stat is AsymStat.WEAK_H1_ALL:
        return height_one_totals(n).weak_all()
    return sum(weak_height_totals(n))


def exact_ratio(numerator: int, denominator: int) -> float:
    """numerator / denominator as a float, divided at WORKING_BITS of precision."""
    with mpmath.workprec(WORKING_BITS):
        return float(mpmath.mpf(numerator) / mpmath.mpf(denominator))


def _bracket(stat: AsymStat, n: int, xi: float) -> float:
    if stat in (AsymStat.STRONG_H1_ALL, AsymStat.WEAK_H1_ALL):
        return (n + 1) / (2 * xi) + 0.5
    if stat is AsymStat.STRONG_HEIGHT_ALL:
        return (n + 2) * (n + 1) / (6 * xi * xi) - 2.0 / 3.0
    return (n + 2) * (n + 1) / (6 * xi * xi) + (n + 1) / (6 * xi) - 7.0 / 6.0


def estimate(stat: AsymStat, n: int) -> AsymEstimate:
    """
    Asymptotic factor, exact factor and relative error for one total.

    Args:
        stat: Which total over P_n
        n: Index (n >= 2)

    Returns:
        AsymEstimate
    """
    if n < 2:
        raise AsymDomainError(f"need n >= 2, got n={n}")
    xi = solve_xi(n)
    approx = _bracket(stat, n, xi)
    exact = exact_ratio(exact_numerator(stat, n), bell(n))
    rel_err = abs(exact / approx - 1.0) if approx else math.inf
    logger.debug(f"[ASYM] {stat.value} n={n}: estimate={approx!r} exact={exact!r} rel_err={rel_err!r}")
    return AsymEstimate(stat=stat, n=n, xi=xi, estimate=approx, exact_ratio=exact, rel_err=rel_err)
