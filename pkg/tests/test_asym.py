"""Tests for the saddle point and the asymptotic estimates."""

import math

import pytest

from asym import (
    REL_ERR_CEILING,
    WEAK_HEIGHT_REL_ERR_CEILING,
    AsymDomainError,
    AsymStat,
    bell_ratio,
    estimate,
    exact_numerator,
    exact_ratio,
    rel_err_ceiling,
    solve_xi,
    xi_expansion,
)
from closedform import thm1iii_strong_h1_total_all
from combinum import bell
from oracle import oracle_stats_all, weak_height_totals

SIZES = (50, 100, 200, 400)


@pytest.mark.parametrize("n", [0, 1, 9, 100, 10_000, 10**9])
def test_solve_xi_residual(n):
    xi = solve_xi(n)
    assert xi > 0
    assert abs(xi * math.exp(xi) - (n + 1)) / (n + 1) <= 1e-12


def test_solve_xi_omega_constant():
    assert solve_xi(0) == pytest.approx(0.5671432904097838, rel=1e-12)


def test_solve_xi_increasing():
    values = [solve_xi(n) for n in range(0, 200, 7)]
    assert values == sorted(values)


def test_solve_xi_rejects_negative():
    with pytest.raises(AsymDomainError):
        solve_xi(-1)


def test_xi_expansion():
    assert math.isfinite(xi_expansion(3))
    assert abs(xi_expansion(10_000) - solve_xi(10_000)) < 0.1
    with pytest.raises(AsymDomainError):
        xi_expansion(2)


def test_bell_ratio():
    assert bell_ratio(50, 0) == 1.0
    n = 400
    approx = bell_ratio(n, 1)
    exact = exact_ratio(bell(n + 1), bell(n))
    assert abs(approx / exact - 1) < 0.1
    assert bell_ratio(n, -1) == pytest.approx(solve_xi(n) / n)


@pytest.mark.parametrize("n, h", [(1, 0), (100, 20), (100, -20)])
def test_bell_ratio_domain(n, h):
    with pytest.raises(AsymDomainError):
        bell_ratio(n, h)


def test_exact_ratio_precision():
    # int / int is correctly rounded however large the operands are
    assert exact_ratio(bell(401), bell(400)) == pytest.approx(bell(401) / bell(400), rel=1e-12)
    assert exact_ratio(1, 3) == pytest.approx(1 / 3, rel=1e-15)


def test_exact_numerators_small_n():
    assert exact_numerator(AsymStat.STRONG_H1_ALL, 4) == 21
    assert exact_numerator(AsymStat.STRONG_HEIGHT_ALL, 4) == 23
    assert exact_numerator(AsymStat.WEAK_H1_ALL, 4) == 22
    assert exact_numerator(AsymStat.WEAK_HEIGHT_ALL, 4) == 24
    assert exact_numerator(AsymStat.WEAK_HEIGHT_ALL, 10) == 736893
    for n in range(2, 8):
        bundle = oracle_stats_all(n)
        assert exact_numerator(AsymStat.WEAK_H1_ALL, n) == bundle.weak_h1_total()
        assert exact_numerator(AsymStat.WEAK_HEIGHT_ALL, n) == bundle.weak_total_height
    assert exact_numerator(AsymStat.WEAK_HEIGHT_ALL, 200) == sum(weak_height_totals(200))


def test_estimate_fields():
    result = estimate(AsymStat.STRONG_H1_ALL, 100)
    assert result.n == 100
    assert result.xi == solve_xi(100)
    assert result.exact_ratio == exact_ratio(thm1iii_strong_h1_total_all(100), bell(100))
    assert result.rel_err == pytest.approx(abs(result.exact_ratio / result.estimate - 1))


def test_estimate_rejects_small_n():
    with pytest.raises(AsymDomainError):
        estimate(AsymStat.WEAK_HEIGHT_ALL, 1)


@pytest.mark.parametrize("stat", list(AsymStat))
def test_error_ceiling_and_strict_decay(stat):
    errors = [estimate(stat, n).rel_err for n in SIZES]
    assert all(e < rel_err_ceiling(stat) for e in errors)
    assert all(later < earlier for earlier, later in zip(errors, errors[1:]))


@pytest.mark.parametrize("stat, expected", [
    (AsymStat.STRONG_H1_ALL, 0.0240),
    (AsymStat.STRONG_HEIGHT_ALL, 0.0233),
    (AsymStat.WEAK_H1_ALL, 0.00705),
    (AsymStat.WEAK_HEIGHT_ALL, 0.1440),
])
def test_measured_error_at_fifty(stat, expected):
    assert estimate(stat, 50).rel_err == pytest.approx(expected, rel=0.02)


def test_ceilings():
    assert rel_err_ceiling(AsymStat.STRONG_H1_ALL) == REL_ERR_CEILING == 0.03
    assert rel_err_ceiling(AsymStat.WEAK_HEIGHT_ALL) == WEAK_HEIGHT_REL_ERR_CEILING
    assert estimate(AsymStat.WEAK_HEIGHT_ALL, 400).rel_err > REL_ERR_CEILING
