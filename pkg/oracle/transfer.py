"""
Height-one and weak height record totals by left-to-right state scans.

Words are tracked by their current maximum m and by where the last letter
sits relative to m: equal to m, equal to m - 1, or lower. Each state carries
the number of words in it and the running sums of strong and weak height-one
records over those words, which is enough to extend by one letter. The scan
costs O(n^2) big-integer operations and reaches n in the hundreds.
"""

import logging
from dataclasses import dataclass
from typing import List

logger = logging.getLogger(__name__)

AT_MAX = 0
ONE_BELOW = 1
LOWER = 2


@dataclass(frozen=True)
class HeightOneTotals:
    """
    Totals of height-one records over P_{n,k}, indexed by k = 0..n.

    Attributes:
        n: Number of elements
        strong: strong[k] = strong records of height one summed over P_{n,k}
        weak: weak[k] = weak records of height one summed over P_{n,k}
        counts: counts[k] = |P_{n,k}|
    """
    n: int
    strong: List[int]
    weak: List[int]
    counts: List[int]

    def strong_all(self) -> int:
        return sum(self.strong)

    def weak_all(self) -> int:
        return sum(self.weak)


def height_one_totals(n: int) -> HeightOneTotals:
    """
    Strong and weak height-one record totals for every k at once.

    Args:
        n: Number of elements (n >= 0)

    Returns:
        HeightOneTotals with lists of length n + 1
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    counts = [0] * (n + 1)
    strong = [0] * (n + 1)
    weak = [0] * (n + 1)
    if n == 0:
        counts[0] = 1
        return HeightOneTotals(n=0, strong=strong, weak=weak, counts=counts)

    # state[m][relation] = [words, strong height-one sum, weak height-one sum]
    def empty_states(size: int) -> List[List[List[int]]]:
        return [[[0, 0, 0] for _ in range(3)] for _ in range(size + 2)]

    states = empty_states(n)
    states[1][AT_MAX] = [1, 0, 0]

    for length in range(1, n):
        nxt = empty_states(n)
        for m in range(1, length + 1):
            for relation in (AT_MAX, ONE_BELOW, LOWER):
                words, s_sum, w_sum = states[m][relation]
                if not words:
                    continue
                # new block m + 1: strong and weak record, height one iff last was m
                bump = words if relation == AT_MAX else 0
                target = nxt[m + 1][AT_MAX]
                target[0] += words
                target[1] += s_sum + bump
                target[2] += w_sum + bump
                # repeat m: weak record, height one iff last was m - 1
                target = nxt[m][AT_MAX]
                target[0] += words
                target[1] += s_sum
                target[2] += w_sum + (words if relation == ONE_BELOW else 0)
                if m >= 2:
                    target = nxt[m][ONE_BELOW]
                    target[0] += words
                    target[1] += s_sum
                    target[2] += w_sum
                if m >= 3:
                    lower = m - 2
                    target = nxt[m][LOWER]
                    target[0] += lower * words
                    target[1] += lower * s_sum
                    target[2] += lower * w_sum
        states = nxt

    for m in range(1, n + 1):
        for relation in (AT_MAX, ONE_BELOW, LOWER):
            words, s_sum, w_sum = states[m][relation]
            counts[m] += words
            strong[m] += s_sum
            weak[m] += w_sum
    logger.debug(f"[ORACLE] Transfer scan for n={n} complete")
    return HeightOneTotals(n=n, strong=strong, weak=weak, counts=counts)


def weak_height_totals(n: int) -> List[int]:
    """
    Sum of weak record heights over P_{n,k}, for every k at once.

    Words are grouped by their current maximum m only. Each group carries
    its word count, its running height sum and the sum of m - last letter,
    which is the height a repeat of m or a new block would pick up next.

    Args:
        n: Number of elements (n >= 0)

    Returns:
        List of length n + 1; entry k is the total over P_{n,k}
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    totals = [0] * (n + 1)
    if n == 0:
        return totals

    # groups[m] = [words, height sum, gap sum]
    groups = [[0, 0, 0] for _ in range(n + 2)]
    groups[1] = [1, 0, 0]
    for length in range(1, n):
        nxt = [[0, 0, 0] for _ in range(n + 2)]
        for m in range(1, length + 1):
            words, heights, gaps = groups[m]
            if not words:
                continue
            # new block m + 1 at height m + 1 - last
            target = nxt[m + 1]
            target[0] += words
            target[1] += heights + gaps + words
            # repeat m at height m - last
            target = nxt[m]
            target[0] += words
            target[1] += heights + gaps
            # letters 1..m-1 are not records; gaps m - j sum to m(m-1)/2
            if m >= 2:
                target[0] += (m - 1) * words
                target[1] += (m - 1) * heights
                target[2] += words * (m * (m - 1) // 2)
        groups = nxt

    for m in range(1, n + 1):
        totals[m] = groups[m][1]
    logger.debug(f"[ORACLE] Weak height scan for n={n} complete")
    return totals
