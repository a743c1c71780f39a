"""
Memoized Stirling and Bell number tables.

This module provides the NumberTables class, which grows triangular tables of
signed Stirling numbers of the first kind, Stirling numbers of the second kind
and Bell numbers on demand, plus module-level accessors backed by one shared
instance.
"""

import logging
import math
import threading
from enum import Enum
from typing import List, Tuple

logger = logging.getLogger(__name__)

DEFAULT_TABLE_CAP: int = 4096
INITIAL_ROWS: int = 32


class TableCapExceeded(RuntimeError):
    """Raised when a row beyond the configured table cap is requested."""

    def __init__(self, requested: int, cap: int) -> None:
        super().__init__(f"row {requested} exceeds table cap {cap}")
        self.requested = requested
        self.cap = cap


class BinomialMode(Enum):
    """Convention used for binomial coefficients outside Pascal's triangle."""
    PASCAL = "pascal"
    FALLING_FACTORIAL = "falling_factorial"


class NumberTables:
    """
    Lazily grown tables of s_{n,k}, S_{n,k} and B_n.

    Rows are built under a lock and published as a single tuple, so readers
    never observe a partially built table. Published rows are never mutated.

    Attributes:
        cap: Largest row index the tables may grow to
    """

    def __init__(self, cap: int = DEFAULT_TABLE_CAP) -> None:
        """
        Initialize the tables with row 0 only.

        Args:
            cap: Largest row index the tables may grow to
        """
        self.cap = cap
        self._lock = threading.Lock()
        # (s1 rows, s2 rows, bell values), replaced wholesale on growth
        self._published: Tuple[Tuple[Tuple[int, ...], ...], Tuple[Tuple[int, ...], ...], Tuple[int, ...]] = (
            ((1,),),
            ((1,),),
            (1,),
        )

    def set_cap(self, cap: int) -> None:
        """Change the largest row that may be requested."""
        if cap < 0:
            raise ValueError(f"table cap must be non-negative, got {cap}")
        self.cap = cap
        logger.debug(f"[TABLES] Table cap set to {cap}")

    @property
    def max_n(self) -> int:
        """Highest row built so far."""
        return len(self._published[2]) - 1

    @property
    def s1(self) -> Tuple[Tuple[int, ...], ...]:
        return self._published[0]

    @property
    def s2(self) -> Tuple[Tuple[int, ...], ...]:
        return self._published[1]

    @property
    def bell_numbers(self) -> Tuple[int, ...]:
        return self._published[2]

    def ensure(self, n: int) -> None:
        """
        Make sure row n is built, growing geometrically.

        Args:
            n: Row index that must be available

        Raises:
            TableCapExceeded: If n is larger than the cap
        """
        if n > self.cap:
            raise TableCapExceeded(n, self.cap)
        if n <= self.max_n:
            return

        with self._lock:
            if n <= self.max_n:
                return
            target = min(self.cap, max(n, 2 * self.max_n, INITIAL_ROWS))
            s1_rows, s2_rows, bells = self._published
            s1_list: List[Tuple[int, ...]] = list(s1_rows)
            s2_list: List[Tuple[int, ...]] = list(s2_rows)
            bell_list: List[int] = list(bells)

            for row in range(len(bell_list), target + 1):
                prev1 = s1_list[row - 1]
                prev2 = s2_list[row - 1]
                new1 = [0] * (row + 1)
                new2 = [0] * (row + 1)
                for k in range(1, row + 1):
                    up1 = prev1[k] if k < row else 0
                    up2 = prev2[k] if k < row else 0
                    new1[k] = -(row - 1) * up1 + prev1[k - 1]
                    new2[k] = k * up2 + prev2[k - 1]
                s1_list.append(tuple(new1))
                s2_list.append(tuple(new2))
                # B_{m+1} = sum_j C(m, j) B_j
                m = row - 1
                bell_list.append(sum(math.comb(m, j) * bell_list[j] for j in range(m + 1)))

            self._published = (tuple(s1_list), tuple(s2_list), tuple(bell_list))
            logger.debug(f"[TABLES] Grew number tables to row {target}")

    def stirling2(self, n: int, k: int) -> int:
        if n < 0 or k < 0 or k > n:
            return 0
        self.ensure(n)
        return self.s2[n][k]

    def stirling1_signed(self, n: int, k: int) -> int:
        if n < 0 or k < 0 or k > n:
            return 0
        self.ensure(n)
        return self.s1[n][k]

    def stirling1_unsigned(self, n: int, k: int) -> int:
        return abs(self.stirling1_signed(n, k))

    def bell(self, n: int) -> int:
        if n < 0:
            raise ValueError(f"Bell number index must be non-negative, got {n}")
        self.ensure(n)
        return self.bell_numbers[n]


TABLES = NumberTables()


def stirling2(n: int, k: int) -> int:
    """S_{n,k}; zero when k < 0, n < 0 or k > n."""
    return TABLES.stirling2(n, k)


def stirling1_signed(n: int, k: int) -> int:
    """Signed s_{n,k}; zero outside the triangle."""
    return TABLES.stirling1_signed(n, k)


def stirling1_unsigned(n: int, k: int) -> int:
    """|s_{n,k}|, the number of permutations of [n] with k cycles."""
    return TABLES.stirling1_unsigned(n, k)


def bell(n: int) -> int:
    """B_n for n >= 0."""
    return TABLES.bell(n)


def binomial(n: int, k: int, mode: BinomialMode = BinomialMode.PASCAL) -> int:
    """
    Binomial coefficient under an explicit out-of-triangle convention.

    PASCAL returns 0 for k < 0, for k > n >= 0 and for negative n with k > 0;
    C(n, 0) is 1 for every n. FALLING_FACTORIAL returns
    n(n-1)...(n-k+1)/k! for any integer n and k >= 0, and 0 for k < 0.

    Args:
        n: Upper index (any integer)
        k: Lower index (any integer)
        mode: Convention to apply

    Returns:
        The binomial coefficient as an integer
    """
    if k < 0:
        return 0
    if k == 0:
        return 1
    if mode is BinomialMode.PASCAL:
        if n < 0 or k > n:
            return 0
        return math.comb(n, k)
    falling = 1
    for i in range(k):
        falling *= n - i
    return falling // math.factorial(k)
