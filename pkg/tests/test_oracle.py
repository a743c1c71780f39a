"""Tests for exhaustive aggregation and the transfer-state counter."""

import pytest

from closedform import thm1ii_strong_h1_total, thm1iii_strong_h1_total_all
from combinum import bell, stirling2
from oracle import (
    OracleCapExceeded,
    StatBundle,
    height_one_totals,
    oracle_stats,
    oracle_stats_all,
    profile_word,
    weak_height_totals,
)


def test_profile_word():
    # strong heights 1, 2; weak heights 1, 0, 2, 2
    assert profile_word((1, 2, 2, 1, 3, 2, 1, 3, 2)) == (1, 1, 3, 5, 2)
    assert profile_word((1, 2, 1, 2)) == (1, 2, 1, 2, 1)
    assert profile_word(()) == (0, 0, 0, 0, 0)


def test_cell_four_three():
    bundle = oracle_stats(4, 3)
    assert bundle.count == 6
    assert bundle.strong_h1_by_r == {1: 1, 2: 5}
    assert bundle.strong_total_height == 13
    assert bundle.max_height_exact == {0: 0, 1: 5, 2: 1}
    assert bundle.max_height_at_most == {0: 0, 1: 5, 2: 6}


def test_cell_four_two():
    bundle = oracle_stats(4, 2)
    assert bundle.count == 7
    assert bundle.weak_h1_by_r == {1: 6, 2: 1}
    assert bundle.weak_total_height == 8
    assert bundle.strong_h1_total() == 7


@pytest.mark.parametrize("n", [1, 2, 5, 8])
def test_single_block_cell(n):
    bundle = oracle_stats(n, 1)
    assert bundle.count == 1
    assert bundle.strong_h1_total() == 0
    assert bundle.weak_h1_total() == 0
    assert bundle.strong_total_height == 0
    assert bundle.weak_total_height == 0
    assert bundle.max_height_exact == {0: 1}


@pytest.mark.parametrize("n, strong, weak", [(1, 0, 0), (3, 5, 5), (4, 23, 24)])
def test_all_partitions_height_totals(n, strong, weak):
    bundle = oracle_stats_all(n)
    assert bundle.k is None
    assert bundle.count == bell(n)
    assert bundle.strong_total_height == strong
    assert bundle.weak_total_height == weak


def test_weak_height_one_total_over_p4():
    assert oracle_stats_all(4).weak_h1_total() == 22
    assert oracle_stats_all(4).weak_h1_total() >= oracle_stats_all(4).strong_h1_total()


def test_counts_match_stirling():
    for n in range(9):
        for k in range(n + 1):
            assert oracle_stats(n, k).count == stirling2(n, k)


@pytest.mark.parametrize("n, k", [(0, 1), (3, 0), (3, 4), (3, -1)])
def test_empty_cells(n, k):
    bundle = oracle_stats(n, k)
    assert bundle.count == 0


def test_empty_partition_row():
    bundle = oracle_stats(0, 0)
    assert bundle.count == 1
    assert bundle.strong_total_height == 0


@pytest.mark.parametrize("workers", [2, 3, 8])
def test_parallel_fold_matches_sequential(workers):
    assert oracle_stats(10, 4, workers=workers) == oracle_stats(10, 4)


def test_merge_is_componentwise_sum():
    left = oracle_stats(5, 2)
    right = oracle_stats(5, 3)
    merged = StatBundle(n=5, k=None).finalize().merge(left).merge(right)
    assert merged.count == left.count + right.count
    assert merged.strong_total_height == left.strong_total_height + right.strong_total_height
    assert merged.weak_h1_total() == left.weak_h1_total() + right.weak_h1_total()


def test_merge_rejects_different_n():
    with pytest.raises(ValueError):
        oracle_stats(4, 2).merge(oracle_stats(5, 2))


def test_cap_exceeded():
    with pytest.raises(OracleCapExceeded):
        oracle_stats(13, 2)
    with pytest.raises(OracleCapExceeded):
        oracle_stats_all(7, cap=6)


# --- transfer-state counter --------------------------------------------------

def test_transfer_small_case():
    totals = height_one_totals(4)
    assert totals.counts == [0, 1, 7, 6, 1]
    assert totals.strong == [0, 0, 7, 11, 3]
    assert totals.weak[2] == 8
    assert totals.weak == [0, 0, 8, 11, 3]
    assert totals.weak_all() == 22
    assert totals.strong_all() == 21


def test_transfer_empty():
    totals = height_one_totals(0)
    assert totals.counts == [1]
    assert totals.strong_all() == 0


def test_transfer_matches_oracle():
    for n in range(1, 10):
        totals = height_one_totals(n)
        for k in range(1, n + 1):
            bundle = oracle_stats(n, k)
            assert totals.counts[k] == bundle.count
            assert totals.strong[k] == bundle.strong_h1_total()
            assert totals.weak[k] == bundle.weak_h1_total()


def test_transfer_matches_closed_forms_at_scale():
    for n in (20, 60):
        totals = height_one_totals(n)
        assert totals.strong_all() == thm1iii_strong_h1_total_all(n)
        for k in (1, 2, n // 2, n):
            assert totals.strong[k] == thm1ii_strong_h1_total(n, k)
        assert sum(totals.counts) == bell(n)


def test_weak_height_scan_small_cases():
    assert weak_height_totals(0) == [0]
    assert weak_height_totals(1) == [0, 0]
    assert weak_height_totals(4) == [0, 0, 8, 13, 3]
    assert weak_height_totals(5) == [0, 0, 20, 60, 34, 4]


def test_weak_height_scan_matches_oracle():
    for n in range(1, 10):
        totals = weak_height_totals(n)
        for k in range(1, n + 1):
            assert totals[k] == oracle_stats(n, k).weak_total_height


@pytest.mark.parametrize("n, expected", [(5, 118), (6, 608), (7, 3307), (8, 19009), (9, 115326), (10, 736893)])
def test_weak_height_scan_totals_over_pn(n, expected):
    assert sum(weak_height_totals(n)) == expected


def test_weak_height_scan_matches_exhaustive_p10():
    assert sum(weak_height_totals(10)) == oracle_stats_all(10).weak_total_height


def test_weak_height_scan_rejects_negative():
    with pytest.raises(ValueError):
        weak_height_totals(-1)
