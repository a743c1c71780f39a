"""
Brute-force ground truth.

Provides exhaustive aggregation of record statistics over P_{n,k} and P_n,
and transfer-state counters for height-one and weak height totals at sizes
enumeration cannot reach.
"""

from oracle.stat_bundle import StatBundle
from oracle.exhaustive import (
    DEFAULT_CAP,
    OracleCapExceeded,
    oracle_stats,
    oracle_stats_all,
    profile_word,
)
from oracle.transfer import HeightOneTotals, height_one_totals, weak_height_totals

__all__ = [
    "StatBundle",
    "DEFAULT_CAP",
    "OracleCapExceeded",
    "oracle_stats",
    "oracle_stats_all",
    "profile_word",
    "HeightOneTotals",
    "height_one_totals",
    "weak_height_totals",
]
