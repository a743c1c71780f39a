"""
Lexicographic enumeration of restricted growth functions.

Words are produced in strictly increasing lexicographic order. A stream for
P_{n,k} can be split into independent sub-streams by fixing a prefix, which
lets callers fold chunks concurrently and still merge deterministically.
"""

import logging
from typing import Iterator, List, Sequence, TextIO, Tuple

from rgf.words import EMPTY_RGF, Rgf, format_word

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]


def _prefix_state(prefix: Sequence[int]) -> Tuple[List[int], int]:
    """Running maxima of a prefix, and its final maximum."""
    maxima = []
    top = 0
    for value in prefix:
        if value > top:
            top = value
        maxima.append(top)
    return maxima, top


def iter_words(n: int, k: int, prefix: Sequence[int] = ()) -> Iterator[Word]:
    """
    Yield the words of P_{n,k} that start with prefix, in lexicographic order.

    The prefix is assumed to be a valid restricted growth prefix; prefixes that
    cannot be completed to exactly k blocks yield nothing.

    Args:
        n: Word length
        k: Number of blocks
        prefix: Fixed leading letters

    Yields:
        Words as plain tuples
    """
    if n == 0:
        if k == 0 and not prefix:
            yield ()
        return
    if k < 1 or k > n:
        return

    fixed = len(prefix)
    maxima, top = _prefix_state(prefix)
    if fixed > n or top > k or n - fixed < k - top:
        return

    word = list(prefix) + [0] * (n - fixed)
    maxima = maxima + [0] * (n - fixed)

    def fill(start: int) -> None:
        # smallest feasible completion of positions start..n-1
        current = maxima[start - 1] if start > 0 else 0
        for i in range(start, n):
            if n - 1 - i >= k - max(current, 1):
                value = 1
            else:
                value = current + 1
            if value > current:
                current = value
            word[i] = value
            maxima[i] = current

    fill(fixed)
    yield tuple(word)

    while True:
        i = n - 1
        while i >= max(fixed, 1):
            previous_max = maxima[i - 1]
            value = word[i] + 1
            # raising a letter never makes completion harder
            if value <= previous_max + 1 and value <= k:
                word[i] = value
                maxima[i] = max(previous_max, value)
                fill(i + 1)
                break
            i -= 1
        else:
            return
        yield tuple(word)


def enumerate_rgfs(n: int, k: int) -> Iterator[Rgf]:
    """
    Yield every element of P_{n,k} exactly once, in lexicographic order.

    Args:
        n: Number of elements
        k: Number of blocks

    Yields:
        Rgf instances; (0, 0) yields the empty word
    """
    if n == 0 and k == 0:
        yield EMPTY_RGF
        return
    for word in iter_words(n, k):
        yield Rgf(word=word, k=k)


def enumerate_all(n: int) -> Iterator[Rgf]:
    """Yield every partition of [n], grouped by k = 0..n, each group lexicographic."""
    for k in range(n + 1):
        yield from enumerate_rgfs(n, k)


def prefix_chunks(n: int, k: int, depth: int) -> List[Word]:
    """
    Split P_{n,k} into independent chunks by their first letters.

    Args:
        n: Word length
        k: Number of blocks
        depth: Prefix length to split on (clamped to [0, n])

    Returns:
        Completable prefixes in lexicographic order; streaming iter_words over
        them in this order reproduces the full lexicographic stream
    """
    if n == 0 or k < 1 or k > n:
        return [()]
    depth = max(0, min(depth, n))
    chunks: List[Word] = []

    def extend(prefix: List[int], top: int) -> None:
        if len(prefix) == depth:
            if n - depth >= k - top:
                chunks.append(tuple(prefix))
            return
        for value in range(1, min(top + 1, k) + 1):
            new_top = max(top, value)
            if n - len(prefix) - 1 < k - new_top:
                continue
            prefix.append(value)
            extend(prefix, new_top)
            prefix.pop()

    extend([], 0)
    logger.debug(f"[ENUM] Split P({n},{k}) into {len(chunks)} chunks at depth {depth}")
    return chunks


def write_words(stream: TextIO, rgfs: Iterator[Rgf]) -> int:
    """
    Write one RGF per line.

    Args:
        stream: Text stream to write to
        rgfs: Words to export

    Returns:
        Number of lines written
    """
    count = 0
    for r in rgfs:
        stream.write(format_word(r))
        stream.write("\n")
        count += 1
    return count
