"""
Exact-arithmetic number kernel.

Provides memoized Stirling numbers of both kinds, Bell numbers and binomial
coefficients over Python integers.
"""

from combinum.tables import (
    DEFAULT_TABLE_CAP,
    TABLES,
    BinomialMode,
    NumberTables,
    TableCapExceeded,
    bell,
    binomial,
    stirling1_signed,
    stirling1_unsigned,
    stirling2,
)

__all__ = [
    "DEFAULT_TABLE_CAP",
    "TABLES",
    "BinomialMode",
    "NumberTables",
    "TableCapExceeded",
    "bell",
    "binomial",
    "stirling1_signed",
    "stirling1_unsigned",
    "stirling2",
]
