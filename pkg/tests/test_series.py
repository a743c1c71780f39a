"""Tests for QPoly, XSeries and the record generating functions."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from closedform import thm1i_strong_h1_count, thm2i_strong_height_total, thm2iii_max_height_at_most
from combinum import stirling2
from oracle import oracle_stats, weak_height_totals
from series import (
    ONE,
    Q,
    ZERO,
    NonUnitConstantTerm,
    QPoly,
    SeriesKind,
    SeriesStat,
    TruncationError,
    WeightSpec,
    XSeries,
    coeff,
    coeff_qr,
    q_derivative_at_one,
    series_statistic,
    strong_series,
    weak_series,
)

small_fractions = st.fractions(min_value=-20, max_value=20, max_denominator=6)
qpolys = st.dictionaries(st.integers(min_value=0, max_value=5), small_fractions, max_size=4).map(QPoly)


# --- QPoly -------------------------------------------------------------------

@given(qpolys, qpolys, qpolys)
def test_qpoly_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * ONE == a


@given(qpolys, qpolys)
def test_qpoly_derivative_product_rule(a, b):
    assert (a * b).derivative() == a.derivative() * b + a * b.derivative()


@given(qpolys, small_fractions)
def test_qpoly_evaluate_is_homomorphism(a, x):
    assert (a * a + a).evaluate(x) == a.evaluate(x) ** 2 + a.evaluate(x)


def test_qpoly_basics():
    p = QPoly({0: 1, 2: 3})
    assert p.degree == 2
    assert ZERO.degree == -1
    assert p.coefficient(1) == 0
    assert p.coefficient(2) == 3
    assert p.evaluate(2) == 13
    assert p.derivative() == QPoly({1: 6})
    assert (Q + 1) ** 2 == QPoly({0: 1, 1: 2, 2: 1})
    with pytest.raises(ValueError):
        p.coefficient(-1)


# --- XSeries -----------------------------------------------------------------

unit_series = st.lists(qpolys, min_size=0, max_size=5).map(
    lambda tail: XSeries(5, [ONE] + tail)
)


@given(unit_series)
def test_reciprocal_inverts(s):
    assert s * s.reciprocal() == XSeries.one(5)


def test_geometric_series():
    s = XSeries.polynomial(4, [1, -1]).reciprocal()
    assert s.coeffs == (ONE, ONE, ONE, ONE, ONE)


def test_reciprocal_requires_unit_constant():
    with pytest.raises(NonUnitConstantTerm):
        XSeries.polynomial(3, [0, 1]).reciprocal()
    with pytest.raises(NonUnitConstantTerm):
        XSeries.polynomial(3, [Q, 1]).reciprocal()


def test_truncation_and_coefficient_access():
    s = XSeries.polynomial(2, [1, 2, 3, 4])
    assert s.trunc == 2
    assert s.coeff(2) == 3
    with pytest.raises(TruncationError):
        s.coeff(3)
    with pytest.raises(ValueError):
        s.coeff_qr(1, -1)
    assert (s * XSeries.polynomial(5, [1, 1])).trunc == 2
    assert s.shift(1).coeffs == (ZERO, ONE, QPoly.constant(2))


# --- generating functions ----------------------------------------------------

def test_strong_kernel_is_stirling():
    s = strong_series(2, 4, WeightSpec.all_ones())
    assert [coeff(s, n) for n in (2, 3, 4)] == [1, 3, 7]


def test_strong_height_one_marker():
    s = strong_series(2, 4, WeightSpec.height_one())
    assert coeff(s, 4) == QPoly({1: 7})
    assert coeff_qr(s, 4, 1) == 7


def test_strong_total_height_derivative():
    s = strong_series(3, 4, WeightSpec.total_height())
    assert coeff(s, 4).derivative().evaluate(1) == 13
    assert q_derivative_at_one(s).coeff(4) == 13


def test_weak_height_one_marker():
    s = weak_series(2, 4, WeightSpec.height_one())
    assert coeff(s, 4) == QPoly({1: 6, 2: 1})


def test_weak_total_height_derivative():
    s = weak_series(2, 4, WeightSpec.total_height())
    assert q_derivative_at_one(s).coeff(4) == 8


def test_single_block_series():
    for build in (strong_series, weak_series):
        s = build(1, 3, WeightSpec.total_height())
        assert s.coeffs == (ZERO, ONE, ONE, ONE)


def test_diagonal_coefficient():
    assert coeff(strong_series(3, 3, WeightSpec.all_ones()), 3) == 1


def test_truncation_below_k_rejected():
    with pytest.raises(TruncationError):
        strong_series(5, 3, WeightSpec.all_ones())


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_uniform_marker_strong(k):
    uniform = strong_series(k, 8, WeightSpec.uniform())
    assert uniform == strong_series(k, 8, WeightSpec.all_ones()) * Q ** (k - 1)


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_uniform_marker_weak(k):
    trunc = 8
    expected = XSeries.one(trunc).shift(k) * Q ** (k - 1)
    for j in range(1, k + 1):
        factor = XSeries.polynomial(trunc, [ONE, QPoly.constant(-j), (ONE - Q) * (j - 1)])
        expected = expected / factor
    assert weak_series(k, trunc, WeightSpec.uniform()) == expected


def test_custom_weights_match_presets():
    custom = WeightSpec.of([Q, ONE, ONE, ONE])
    assert strong_series(4, 7, custom) == strong_series(4, 7, WeightSpec.height_one())
    with pytest.raises(ValueError):
        strong_series(6, 7, custom)


def test_kernel_counts_match_tables():
    for k in range(1, 13):
        s = strong_series(k, 12, WeightSpec.all_ones())
        for n in range(13):
            assert coeff(s, n) == stirling2(n, k)


@pytest.mark.parametrize("kind", list(SeriesKind))
def test_series_statistics_match_oracle(kind):
    for n in range(1, 10):
        for k in range(1, n + 1):
            bundle = oracle_stats(n, k)
            by_r = bundle.strong_h1_by_r if kind is SeriesKind.STRONG else bundle.weak_h1_by_r
            total = bundle.strong_total_height if kind is SeriesKind.STRONG else bundle.weak_total_height
            assert series_statistic(kind, SeriesStat.COUNT, n, k, trunc=9) == bundle.count
            assert series_statistic(kind, SeriesStat.HEIGHT_TOTAL, n, k, trunc=9) == total
            assert series_statistic(kind, SeriesStat.H1_TOTAL, n, k, trunc=9) == sum(r * c for r, c in by_r.items())
            for r in range(n):
                assert series_statistic(kind, SeriesStat.H1_COUNT, n, k, r, trunc=9) == by_r.get(r, 0)


def test_max_height_statistic():
    for n in range(1, 10):
        for k in range(1, n + 1):
            bundle = oracle_stats(n, k)
            for h in range(k):
                value = series_statistic(SeriesKind.STRONG, SeriesStat.MAX_HEIGHT_AT_MOST, n, k, h)
                assert value == bundle.max_height_at_most[h]
    with pytest.raises(ValueError):
        series_statistic(SeriesKind.WEAK, SeriesStat.MAX_HEIGHT_AT_MOST, 4, 2, 1)


@pytest.mark.parametrize("h", [0, 1, 2, 4])
def test_max_cutoff_preset_matches_closed_form(h):
    for k in range(1, 9):
        s = strong_series(k, 10, WeightSpec.max_cutoff(h))
        for n in range(k, 11):
            assert coeff(s, n) == thm2iii_max_height_at_most(n, k, h)


def test_series_agree_with_closed_forms_beyond_enumeration():
    n = 16
    for k in (2, 5, 9):
        assert series_statistic(SeriesKind.STRONG, SeriesStat.HEIGHT_TOTAL, n, k) == thm2i_strong_height_total(n, k)
        assert series_statistic(SeriesKind.WEAK, SeriesStat.HEIGHT_TOTAL, n, k) == weak_height_totals(n)[k]
        assert series_statistic(SeriesKind.STRONG, SeriesStat.H1_COUNT, n, k, 2) == thm1i_strong_h1_count(n, k, 2)


def test_coefficients_are_exact_rationals():
    s = weak_series(3, 6, WeightSpec.height_one())
    for c in s.coeffs:
        assert all(isinstance(v, Fraction) for v in c.coeffs.values())
