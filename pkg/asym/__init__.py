"""
Asymptotic estimates for record statistics over all partitions of [n].
"""

from asym.saddle import (
    AsymDomainError,
    XiConvergenceError,
    bell_ratio,
    solve_xi,
    xi_expansion,
)
from asym.estimates import (
    REL_ERR_CEILING,
    WEAK_HEIGHT_REL_ERR_CEILING,
    AsymEstimate,
    AsymStat,
    estimate,
    exact_numerator,
    exact_ratio,
    rel_err_ceiling,
)

__all__ = [
    "AsymDomainError",
    "XiConvergenceError",
    "bell_ratio",
    "solve_xi",
    "xi_expansion",
    "REL_ERR_CEILING",
    "WEAK_HEIGHT_REL_ERR_CEILING",
    "AsymEstimate",
    "AsymStat",
    "estimate",
    "exact_numerator",
    "exact_ratio",
    "rel_err_ceiling",
]
