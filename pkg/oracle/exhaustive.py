"""
Exhaustive aggregation of record statistics.

This module folds every word of P_{n,k} into a StatBundle. Large cells are
split into prefix chunks which can be folded on a thread pool; chunks are
merged in prefix order, so the result does not depend on the worker count.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, Optional, Sequence, Tuple

from rgf.enumeration import iter_words, prefix_chunks
from oracle.stat_bundle import StatBundle

logger = logging.getLogger(__name__)

DEFAULT_CAP: int = 12
CHUNK_DEPTH: int = 5


class OracleCapExceeded(RuntimeError):
    """Raised when exhaustive enumeration is requested beyond the cap."""

    def __init__(self, n: int, cap: int) -> None:
        super().__init__(f"n={n} exceeds the enumeration cap {cap}")
        self.n = n
        self.cap = cap


def profile_word(word: Sequence[int]) -> Tuple[int, int, int, int, int]:
    """
    Single left-to-right scan of one word.

    Args:
        word: Restricted growth word

    Returns:
        (strong height-1 records, weak height-1 records, strong height sum,
        weak height sum, largest strong height); only heights >= 1 count
    """
    strong_h1 = weak_h1 = strong_total = weak_total = max_height = 0
    if not word:
        return 0, 0, 0, 0, 0
    top = previous = word[0]
    for value in word[1:]:
        if value >= top:
            height = value - previous
            if height > 0:
                weak_total += height
                if height == 1:
                    weak_h1 += 1
                if value > top:
                    top = value
                    strong_total += height
                    if height == 1:
                        strong_h1 += 1
                    if height > max_height:
                        max_height = height
        previous = value
    return strong_h1, weak_h1, strong_total, weak_total, max_height


def _fold(n: int, k: int, prefix: Sequence[int]) -> StatBundle:
    count = 0
    strong_by_r: Dict[int, int] = {}
    weak_by_r: Dict[int, int] = {}
    max_exact: Dict[int, int] = {}
    strong_total = weak_total = 0
    for word in iter_words(n, k, prefix):
        s1, w1, st, wt, mh = profile_word(word)
        count += 1
        strong_by_r[s1] = strong_by_r.get(s1, 0) + 1
        weak_by_r[w1] = weak_by_r.get(w1, 0) + 1
        max_exact[mh] = max_exact.get(mh, 0) + 1
        strong_total += st
        weak_total += wt
    bundle = StatBundle(
        n=n,
        k=k,
        count=count,
        strong_h1_by_r=strong_by_r,
        weak_h1_by_r=weak_by_r,
        strong_total_height=strong_total,
        weak_total_height=weak_total,
        max_height_exact=max_exact,
    )
    return bundle.finalize()


def _check_cap(n: int, cap: Optional[int]) -> None:
    limit = DEFAULT_CAP if cap is None else cap
    if n > limit:
        raise OracleCapExceeded(n, limit)


def oracle_stats(
    n: int,
    k: int,
    cap: Optional[int] = None,
    workers: int = 1,
    chunk_depth: int = CHUNK_DEPTH,
) -> StatBundle:
    """
    Aggregate every statistic over P_{n,k} by exhaustive enumeration.

    Args:
        n: Number of elements (0 <= n <= cap)
        k: Number of blocks
        cap: Enumeration cap (default: DEFAULT_CAP)
        workers: Threads used to fold prefix chunks
        chunk_depth: Prefix length used to split the cell when workers > 1

    Returns:
        Finalized StatBundle; k = 0 gives the empty-partition row

    Raises:
        OracleCapExceeded: If n exceeds the cap
    """
    _check_cap(n, cap)
    if k < 0 or k > n or (k == 0 and n > 0):
        return StatBundle(n=n, k=k).finalize()

    if workers <= 1:
        return _fold(n, k, ())

    chunks = prefix_chunks(n, k, chunk_depth)
    logger.debug(f"[ORACLE] Folding P({n},{k}) over {len(chunks)} chunks with {workers} workers")
    with ThreadPoolExecutor(max_workers=workers) as executor:
        parts = list(executor.map(lambda prefix: _fold(n, k, prefix), chunks))

    result = StatBundle(n=n, k=k).finalize()
    for part in parts:
        result = result.merge(part)
    return result


def oracle_stats_all(n: int, cap: Optional[int] = None, workers: int = 1) -> StatBundle:
    """
    Componentwise sum of oracle_stats(n, k) over k = 0..n.

    Args:
        n: Number of elements
        cap: Enumeration cap (default: DEFAULT_CAP)
        workers: Threads used per cell

    Returns:
        Finalized StatBundle with k = None and count = B_n
    """
    _check_cap(n, cap)
    result = StatBundle(n=n, k=None).finalize()
    for k in range(n + 1):
        result = result.merge(oracle_stats(n, k, cap=cap, workers=workers))
    logger.debug(f"[ORACLE] P({n}) aggregated: {result.count} partitions")
    return result
