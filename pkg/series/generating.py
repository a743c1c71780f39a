"""
Product generating functions for record heights.

strong_series expands
    x^k prod_{j=2}^k (q_1 + x(q_2 + ... + q_{j-1} - (j-2) q_1)) / prod_{j=1}^k (1 - jx)
and weak_series expands
    x^k prod_{j=2}^k (q_1(1 - (j-2)x) + x(q_2 + ... + q_{j-1}))
        / prod_{j=1}^k ((1 - x)(1 - (j-1)x) - x^2 (q_1 + ... + q_{j-1}))
up to x^N, with the markers replaced according to a WeightSpec. Denominators
are inverted factor by factor. Coefficients read off these series give a
second, independent oracle for every statistic.
"""

import logging
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from series.qpoly import ONE, QPoly
from series.weights import WeightSpec
from series.xseries import NonUnitConstantTerm, TruncationError, XSeries

logger = logging.getLogger(__name__)


class SeriesKind(Enum):
    STRONG = "strong"
    WEAK = "weak"


class SeriesStat(Enum):
    """Statistics the series path can produce for one (n, k) cell."""
    COUNT = "count"                          # S_{n,k}
    H1_COUNT = "h1_count"                    # partitions with exactly r height-one records
    H1_TOTAL = "h1_total"                    # height-one records summed
    HEIGHT_TOTAL = "height_total"            # heights summed
    MAX_HEIGHT_AT_MOST = "max_height_at_most"


def _check(k: int, trunc: int) -> None:
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    if trunc < k:
        raise TruncationError(f"truncation order {trunc} is below k={k}")


def _divide_by_factors(numerator: XSeries, factors) -> XSeries:
    result = numerator
    for factor in factors:
        if factor.coeff(0) != ONE:
            raise NonUnitConstantTerm(f"denominator factor has constant term {factor.coeff(0)}")
        result = result * factor.reciprocal()
    return result


@lru_cache(maxsize=512)
def strong_series(k: int, trunc: int, weights: WeightSpec) -> XSeries:
    """
    Generating function of P_{n,k} by strong-record heights, truncated at x^trunc.

    Args:
        k: Number of blocks
        trunc: Truncation order N (N >= k)
        weights: Marker assignment

    Returns:
        XSeries whose x^n coefficient is the weighted count over P_{n,k}
    """
    _check(k, trunc)
    if k == 0:
        return XSeries.one(trunc)
    q1 = weights.weight(1) if k >= 2 else ONE
    numerator = XSeries.one(trunc).shift(k)
    for j in range(2, k + 1):
        linear = weights.partial_sum(2, j - 1) - q1 * (j - 2)
        numerator = numerator * XSeries.polynomial(trunc, [q1, linear])
    factors = [XSeries.polynomial(trunc, [ONE, QPoly.constant(-j)]) for j in range(1, k + 1)]
    series = _divide_by_factors(numerator, factors)
    logger.debug(f"[SERIES] strong k={k} N={trunc} weights={weights.preset.value}")
    return series


@lru_cache(maxsize=512)
def weak_series(k: int, trunc: int, weights: WeightSpec) -> XSeries:
    """
    Generating function of P_{n,k} by weak-record heights, truncated at x^trunc.

    Args:
        k: Number of blocks
        trunc: Truncation order N (N >= k)
        weights: Marker assignment

    Returns:
        XSeries whose x^n coefficient is the weighted count over P_{n,k}
    """
    _check(k, trunc)
    if k == 0:
        return XSeries.one(trunc)
    q1 = weights.weight(1) if k >= 2 else ONE
    numerator = XSeries.one(trunc).shift(k)
    for j in range(2, k + 1):
        linear = weights.partial_sum(2, j - 1) - q1 * (j - 2)
        numerator = numerator * XSeries.polynomial(trunc, [q1, linear])
    factors = []
    for j in range(1, k + 1):
        # (1 - x)(1 - (j-1)x) - x^2 (q_1 + ... + q_{j-1})
        markers = weights.partial_sum(1, j - 1)
        factors.append(
            XSeries.polynomial(trunc, [ONE, QPoly.constant(-j), QPoly.constant(j - 1) - markers])
        )
    series = _divide_by_factors(numerator, factors)
    logger.debug(f"[SERIES] weak k={k} N={trunc} weights={weights.preset.value}")
    return series


def coeff(s: XSeries, n: int) -> QPoly:
    """Coefficient of x^n."""
    return s.coeff(n)


def coeff_qr(s: XSeries, n: int, r: int) -> Fraction:
    """Rational coefficient of q^r x^n."""
    return s.coeff_qr(n, r)


def q_derivative_at_one(s: XSeries) -> XSeries:
    """Coefficientwise d/dq at q = 1."""
    return s.q_derivative_at_one()


def _as_int(value: Fraction) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"series coefficient {value} is not an integer")
    return value.numerator


def series_statistic(
    kind: SeriesKind,
    stat: SeriesStat,
    n: int,
    k: int,
    param: Optional[int] = None,
    trunc: Optional[int] = None,
) -> int:
    """
    Read one statistic of P_{n,k} off the generating functions.

    Args:
        kind: Strong or weak records
        stat: Which statistic
        n: Number of elements
        k: Number of blocks
        param: r for H1_COUNT, h for MAX_HEIGHT_AT_MOST
        trunc: Truncation order to build with (default n); sharing a larger
            order across calls reuses cached series

    Returns:
        Integer value of the statistic
    """
    trunc = max(n, k) if trunc is None else trunc
    build = strong_series if kind is SeriesKind.STRONG else weak_series
    if stat is SeriesStat.COUNT:
        return _as_int(build(k, trunc, WeightSpec.all_ones()).coeff(n).evaluate(1))
    if stat is SeriesStat.H1_COUNT:
        return _as_int(build(k, trunc, WeightSpec.height_one()).coeff_qr(n, param))
    if stat is SeriesStat.H1_TOTAL:
        return _as_int(build(k, trunc, WeightSpec.height_one()).coeff(n).derivative().evaluate(1))
    if stat is SeriesStat.HEIGHT_TOTAL:
        return _as_int(build(k, trunc, WeightSpec.total_height()).coeff(n).derivative().evaluate(1))
    if stat is SeriesStat.MAX_HEIGHT_AT_MOST:
        if kind is not SeriesKind.STRONG:
            raise ValueError("maximum height is defined for strong records only")
        return _as_int(build(k, trunc, WeightSpec.max_cutoff(param)).coeff(n).evaluate(1))
    raise ValueError(f"unknown statistic {stat}")
