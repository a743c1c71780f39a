"""
Record extraction for restricted growth functions.

A position i is a strong record when its letter exceeds every earlier letter,
and a weak record when it is at least every earlier letter. The height of a
record is pi_i - pi_{i-1} for i > 1 and 0 at position 1, for both kinds.
"""

from dataclasses import dataclass
from enum import Enum
from typing import List

from rgf.words import Rgf


class RecordKind(Enum):
    """Record kind."""
    STRONG = "strong"
    WEAK = "weak"


@dataclass(frozen=True)
class RecordEvent:
    """
    One record occurrence.

    Attributes:
        position: 1-based position in the word
        value: Block label at that position
        height: value - word[position - 1] (0 at position 1)
        kind: STRONG or WEAK
    """
    position: int
    value: int
    height: int
    kind: RecordKind


def _records(r: Rgf, kind: RecordKind) -> List[RecordEvent]:
    events: List[RecordEvent] = []
    if not r.word:
        return events
    events.append(RecordEvent(position=1, value=r.word[0], height=0, kind=kind))
    top = r.word[0]
    previous = r.word[0]
    for position, value in enumerate(r.word[1:], start=2):
        is_record = value > top if kind is RecordKind.STRONG else value >= top
        if is_record:
            events.append(RecordEvent(position=position, value=value, height=value - previous, kind=kind))
        if value > top:
            top = value
        previous = value
    return events


def strong_records(r: Rgf) -> List[RecordEvent]:
    """
    Strong records of r, one per first occurrence of each block label.

    Args:
        r: Validated Rgf

    Returns:
        Events in position order; the first has height 0, the rest height >= 1
    """
    return _records(r, RecordKind.STRONG)


def weak_records(r: Rgf) -> List[RecordEvent]:
    """
    Weak records of r.

    Height-0 events (a repeat of the current maximum right after it) are
    returned; statistics indexed by height ignore them.

    Args:
        r: Validated Rgf

    Returns:
        Events in position order, a superset of the strong-record positions
    """
    return _records(r, RecordKind.WEAK)
