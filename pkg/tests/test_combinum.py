"""Tests for the Stirling, Bell and binomial tables."""

import threading

import pytest

from combinum import (
    BinomialMode,
    NumberTables,
    TableCapExceeded,
    bell,
    binomial,
    stirling1_signed,
    stirling1_unsigned,
    stirling2,
)


@pytest.mark.parametrize("n, k, expected", [
    (0, 0, 1),
    (3, 5, 0),
    (4, 2, 7),
    (5, 3, 25),
    (6, 2, 31),
    (3, -1, 0),
    (-1, 0, 0),
])
def test_stirling2_values(n, k, expected):
    assert stirling2(n, k) == expected


@pytest.mark.parametrize("n, k, expected", [
    (3, 3, 1),
    (3, 2, -3),
    (3, 1, 2),
    (0, 0, 1),
    (4, 1, -6),
])
def test_stirling1_signed_values(n, k, expected):
    assert stirling1_signed(n, k) == expected


def test_stirling1_unsigned_is_absolute_value():
    for n in range(8):
        for k in range(n + 1):
            assert stirling1_unsigned(n, k) == abs(stirling1_signed(n, k))


@pytest.mark.parametrize("n, expected", [(0, 1), (1, 1), (2, 2), (3, 5), (4, 15), (6, 203)])
def test_bell_values(n, expected):
    assert bell(n) == expected


def test_bell_negative_index_rejected():
    with pytest.raises(ValueError):
        bell(-1)


def test_stirling2_recursion_and_bell_sum():
    for n in range(1, 30):
        for k in range(1, n + 1):
            assert stirling2(n, k) == k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)
        assert sum(stirling2(n, k) for k in range(n + 1)) == bell(n)


def test_stirling1_recursion_and_sign():
    for n in range(1, 31):
        for k in range(1, n + 1):
            value = stirling1_signed(n, k)
            assert value == stirling1_signed(n - 1, k - 1) - (n - 1) * stirling1_signed(n - 1, k)
            assert value != 0
            assert (value > 0) == ((n - k) % 2 == 0)


def test_rising_factorial_expansion():
    """x(x+1)...(x+n-1) has coefficients |s(n, j)|."""
    poly = [1]
    for n in range(1, 13):
        shift = n - 1
        poly = [(poly[j - 1] if j else 0) + shift * (poly[j] if j < len(poly) else 0) for j in range(len(poly) + 1)]
        assert poly == [stirling1_unsigned(n, j) for j in range(n + 1)]


def test_stirling_matrices_are_inverse():
    """sum_j s(n, j) S(j, m) is the Kronecker delta."""
    for n in range(10):
        for m in range(10):
            total = sum(stirling1_signed(n, j) * stirling2(j, m) for j in range(n + 1))
            assert total == (1 if n == m else 0)


@pytest.mark.parametrize("n, k, mode, expected", [
    (5, 2, BinomialMode.PASCAL, 10),
    (-1, 0, BinomialMode.PASCAL, 1),
    (-1, 0, BinomialMode.FALLING_FACTORIAL, 1),
    (-1, 2, BinomialMode.FALLING_FACTORIAL, 1),
    (-1, 3, BinomialMode.FALLING_FACTORIAL, -1),
    (4, 7, BinomialMode.PASCAL, 0),
    (4, -1, BinomialMode.FALLING_FACTORIAL, 0),
])
def test_binomial(n, k, mode, expected):
    assert binomial(n, k, mode) == expected


def test_binomial_modes_agree_on_non_negative_n():
    for n in range(12):
        for k in range(-2, 14):
            assert binomial(n, k, BinomialMode.PASCAL) == binomial(n, k, BinomialMode.FALLING_FACTORIAL)


def test_table_cap_exceeded():
    tables = NumberTables(cap=10)
    assert tables.stirling2(10, 3) == 9330
    with pytest.raises(TableCapExceeded):
        tables.stirling2(11, 3)
    with pytest.raises(TableCapExceeded):
        tables.bell(11)


def test_tables_grow_on_demand():
    tables = NumberTables(cap=200)
    assert tables.bell(4) == 15
    assert tables.bell(150) == bell(150)
    assert tables.max_n >= 150


def test_concurrent_readers_see_consistent_tables():
    tables = NumberTables(cap=300)
    results = []
    lock = threading.Lock()

    def reader(n):
        value = tables.stirling2(n, n // 2)
        with lock:
            results.append((n, value))

    threads = [threading.Thread(target=reader, args=(n,)) for n in range(50, 300, 10)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()

    assert len(results) == len(threads)
    for n, value in results:
        assert value == stirling2(n, n // 2)


def test_lowered_cap_applies_to_built_rows():
    tables = NumberTables(cap=20)
    assert tables.bell(15) == 1382958545
    tables.set_cap(10)
    with pytest.raises(TableCapExceeded):
        tables.bell(15)
    assert tables.bell(10) == 115975
    with pytest.raises(ValueError):
        tables.set_cap(-1)
