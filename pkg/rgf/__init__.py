"""
Restricted growth functions.

This package contains the canonical word form of set partitions, block-form
conversion, lexicographic enumeration and record extraction.
"""

from rgf.words import (
    EMPTY_RGF,
    BlockPartition,
    MalformedPartition,
    NotAnRgf,
    Rgf,
    format_word,
    from_blocks,
    parse_word,
    to_blocks,
    validate,
)
from rgf.enumeration import (
    enumerate_all,
    enumerate_rgfs,
    iter_words,
    prefix_chunks,
    write_words,
)
from rgf.records import RecordEvent, RecordKind, strong_records, weak_records

__all__ = [
    "EMPTY_RGF",
    "BlockPartition",
    "MalformedPartition",
    "NotAnRgf",
    "Rgf",
    "format_word",
    "from_blocks",
    "parse_word",
    "to_blocks",
    "validate",
    "enumerate_all",
    "enumerate_rgfs",
    "iter_words",
    "prefix_chunks",
    "write_words",
    "RecordEvent",
    "RecordKind",
    "strong_records",
    "weak_records",
]
