"""
Closed-form record statistics.

Exact evaluation of every stated formula for strong and weak record heights
over set partitions, with an integrality check on each result.
"""

from closedform.formulas import (
    THM3I_BINOMIAL_MODE,
    FormulaDomainError,
    FormulaId,
    FormulaResult,
    IntegralityError,
    evaluate,
    thm1i_strong_h1_count,
    thm1ii_strong_h1_total,
    thm1iii_strong_h1_total_all,
    thm2i_strong_height_total,
    thm2ii_strong_height_total_all,
    thm2iii_max_height_at_most,
    thm2iii_max_height_exact,
    thm3i_weak_h1_count,
    thm3ii_weak_h1_total,
    thm3iii_weak_h1_total_all,
    thm3iv_weak_height_total,
    thm3v_weak_height_total_all,
)

__all__ = [
    "THM3I_BINOMIAL_MODE",
    "FormulaDomainError",
    "FormulaId",
    "FormulaResult",
    "IntegralityError",
    "evaluate",
    "thm1i_strong_h1_count",
    "thm1ii_strong_h1_total",
    "thm1iii_strong_h1_total_all",
    "thm2i_strong_height_total",
    "thm2ii_strong_height_total_all",
    "thm2iii_max_height_at_most",
    "thm2iii_max_height_exact",
    "thm3i_weak_h1_count",
    "thm3ii_weak_h1_total",
    "thm3iii_weak_h1_total_all",
    "thm3iv_weak_height_total",
    "thm3v_weak_height_total_all",
]
