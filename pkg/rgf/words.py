"""
Canonical word form of set partitions.

This module provides the Rgf and BlockPartition dataclasses, validation of
restricted growth words, and the bijection between the word form and the
standard block form.
"""

import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Sequence, Tuple

logger = logging.getLogger(__name__)


class NotAnRgf(ValueError):
    """
    Raised when a word violates the restricted growth conditions.

    Attributes:
        position: 1-based position of the first violation
        reason: Short description of the violated condition
    """

    def __init__(self, position: int, reason: str) -> None:
        super().__init__(f"not a restricted growth function at position {position}: {reason}")
        self.position = position
        self.reason = reason


class MalformedPartition(ValueError):
    """Raised when blocks do not form a standard-form partition of [n]."""


@dataclass(frozen=True)
class Rgf:
    """
    A validated restricted growth function.

    Attributes:
        word: Block labels pi_1..pi_n (1-based labels)
        k: Number of blocks, equal to max(word)
    """
    word: Tuple[int, ...]
    k: int

    @property
    def n(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return format_word(self)


EMPTY_RGF = Rgf(word=(), k=0)


@dataclass(frozen=True)
class BlockPartition:
    """
    A set partition of [n] in standard form.

    Attributes:
        blocks: Blocks ordered by increasing minimum
    """
    blocks: Tuple[FrozenSet[int], ...]

    @property
    def n(self) -> int:
        return sum(len(block) for block in self.blocks)

    @classmethod
    def of(cls, blocks: Iterable[Iterable[int]]) -> "BlockPartition":
        """Build a partition from plain iterables, keeping the given block order."""
        return cls(blocks=tuple(frozenset(block) for block in blocks))

    def __str__(self) -> str:
        return "|".join("{" + ",".join(str(i) for i in sorted(block)) + "}" for block in self.blocks)


def validate(word: Sequence[int]) -> Rgf:
    """
    Validate a word as a restricted growth function.

    Args:
        word: Nonempty sequence of positive integers

    Returns:
        The validated Rgf

    Raises:
        NotAnRgf: Naming the first violated condition and its position
    """
    if len(word) == 0:
        raise NotAnRgf(1, "word is empty")
    top = 0
    for index, value in enumerate(word, start=1):
        if not isinstance(value, int) or isinstance(value, bool):
            raise NotAnRgf(index, f"value {value!r} is not an integer")
        if value < 1:
            raise NotAnRgf(index, f"value {value} is not positive")
        if value > top + 1:
            raise NotAnRgf(index, f"value {value} exceeds 1 + max of prefix ({top})")
        if value > top:
            top = value
    return Rgf(word=tuple(word), k=top)


def to_blocks(r: Rgf) -> BlockPartition:
    """
    Convert an Rgf to its standard-form block partition.

    Args:
        r: Validated Rgf

    Returns:
        BlockPartition with block i holding the positions labelled i
    """
    blocks = [set() for _ in range(r.k)]
    for position, label in enumerate(r.word, start=1):
        blocks[label - 1].add(position)
    return BlockPartition(blocks=tuple(frozenset(block) for block in blocks))


def from_blocks(p: BlockPartition) -> Rgf:
    """
    Convert a standard-form block partition to its Rgf.

    Args:
        p: Block partition of [n] with increasing block minima

    Returns:
        The canonical word

    Raises:
        MalformedPartition: On empty blocks, overlaps, gaps or misordered minima
    """
    n = p.n
    labels = [0] * n
    previous_min = 0
    for label, block in enumerate(p.blocks, start=1):
        if not block:
            raise MalformedPartition(f"block {label} is empty")
        low = min(block)
        if low <= previous_min:
            raise MalformedPartition(f"block {label} minimum {low} does not exceed previous minimum {previous_min}")
        previous_min = low
        for element in block:
            if not 1 <= element <= n:
                raise MalformedPartition(f"element {element} of block {label} lies outside [1, {n}]")
            if labels[element - 1]:
                raise MalformedPartition(f"element {element} appears in blocks {labels[element - 1]} and {label}")
            labels[element - 1] = label
    return Rgf(word=tuple(labels), k=len(p.blocks))


def format_word(r: Rgf) -> str:
    """Text form: digits when k <= 9, space-separated values otherwise."""
    if r.k <= 9:
        return "".join(str(value) for value in r.word)
    return " ".join(str(value) for value in r.word)


def parse_word(text: str) -> Rgf:
    """
    Parse the text form written by format_word and validate it.

    Args:
        text: Digit string, or whitespace-separated integers

    Returns:
        The validated Rgf
    """
    text = text.strip()
    if " " in text:
        values = [int(part) for part in text.split()]
    else:
        values = [int(ch) for ch in text]
    return validate(values)
