"""
Statistic registry shared by the table and verify commands.

Each Statistic ties a table id to its closed form, its generating-function
reading and the oracle field that counts it, so the three paths can be asked
for the same number in the same way.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Optional, Union

from closedform import FormulaId, IntegralityError, evaluate
from oracle import StatBundle
from series import SeriesKind, SeriesStat, series_statistic

logger = logging.getLogger(__name__)

Value = Union[int, Fraction]


class Scope(Enum):
    """What a statistic is indexed by."""
    ALL = "all"  # n only, summed over P_n
    CELL = "cell"  # (n, k)
    CELL_PARAM = "cell_param"  # (n, k, r) or (n, k, h)


@dataclass(frozen=True)
class Statistic:
    """
    One record statistic.

    Attributes:
        name: Table id used on the command line
        formula: Closed form that states it
        kind: Strong or weak records
        series_stat: What to read off the generating function
        scope: Indexing of the statistic
    """
    name: str
    formula: FormulaId
    kind: SeriesKind
    series_stat: SeriesStat
    scope: Scope


_STRONG = SeriesKind.STRONG
_WEAK = SeriesKind.WEAK

STATISTICS: Dict[str, Statistic] = {
    s.name: s
    for s in (
        Statistic("strong-h1-count", FormulaId.THM1I, _STRONG, SeriesStat.H1_COUNT, Scope.CELL_PARAM),
        Statistic("strong-h1-total", FormulaId.THM1II, _STRONG, SeriesStat.H1_TOTAL, Scope.CELL),
        Statistic("strong-h1-total-all", FormulaId.THM1III, _STRONG, SeriesStat.H1_TOTAL, Scope.ALL),
        Statistic("strong-height-total", FormulaId.THM2I, _STRONG, SeriesStat.HEIGHT_TOTAL, Scope.CELL),
        Statistic("strong-height-total-all", FormulaId.THM2II, _STRONG, SeriesStat.HEIGHT_TOTAL, Scope.ALL),
        Statistic("max-height-at-most", FormulaId.THM2III, _STRONG, SeriesStat.MAX_HEIGHT_AT_MOST, Scope.CELL_PARAM),
        Statistic("max-height-exact", FormulaId.THM2III_EXACT, _STRONG, SeriesStat.MAX_HEIGHT_AT_MOST, Scope.CELL_PARAM),
        Statistic("weak-h1-count", FormulaId.THM3I, _WEAK, SeriesStat.H1_COUNT, Scope.CELL_PARAM),
        Statistic("weak-h1-total", FormulaId.THM3II, _WEAK, SeriesStat.H1_TOTAL, Scope.CELL),
        Statistic("weak-h1-total-all", FormulaId.THM3III, _WEAK, SeriesStat.H1_TOTAL, Scope.ALL),
        Statistic("weak-height-total", FormulaId.THM3IV, _WEAK, SeriesStat.HEIGHT_TOTAL, Scope.CELL),
        Statistic("weak-height-total-all", FormulaId.THM3V, _WEAK, SeriesStat.HEIGHT_TOTAL, Scope.ALL),
    )
}

BY_FORMULA: Dict[FormulaId, Statistic] = {s.formula: s for s in STATISTICS.values()}


def param_range(stat: Statistic, n: int, k: int) -> range:
    """
    Default r or h values for a CELL_PARAM statistic.

    Strong height-one counts take r in 0..k-1, weak ones r in 0..n-1. The
    maximum-height counts take h in 1..k-1, or h = 0 alone when k = 1.
    """
    if stat.formula is FormulaId.THM1I:
        return range(k)
    if stat.formula is FormulaId.THM3I:
        return range(n)
    return range(1, k) if k >= 2 else range(1)


def closedform_value(stat: Statistic, n: int, k: Optional[int] = None, param: Optional[int] = None) -> Value:
    """
    Closed-form value; a non-integral evaluation comes back as its Fraction.

    Raises:
        FormulaDomainError: Outside the formula's validity range
    """
    try:
        return evaluate(stat.formula, n, k, param).value
    except IntegralityError as e:
        logger.debug(f"[VERIFY] {e}")
        return e.value


def oracle_value(stat: Statistic, bundle: StatBundle, param: Optional[int] = None) -> int:
    """Read a statistic out of an oracle bundle for the matching cell or P_n."""
    formula = stat.formula
    if formula is FormulaId.THM1I:
        return bundle.strong_h1_by_r.get(param, 0)
    if formula is FormulaId.THM3I:
        return bundle.weak_h1_by_r.get(param, 0)
    if formula is FormulaId.THM2III:
        return bundle.max_height_at_most[min(param, bundle.height_limit)]
    if formula is FormulaId.THM2III_EXACT:
        return bundle.max_height_exact.get(param, 0)
    if formula in (FormulaId.THM1II, FormulaId.THM1III):
        return bundle.strong_h1_total()
    if formula in (FormulaId.THM3II, FormulaId.THM3III):
        return bundle.weak_h1_total()
    if formula in (FormulaId.THM2I, FormulaId.THM2II):
        return bundle.strong_total_height
    return bundle.weak_total_height


def _series_cell(stat: Statistic, n: int, k: int, param: Optional[int], trunc: int) -> int:
    if stat.formula is FormulaId.THM2III_EXACT:
        at_most = series_statistic(stat.kind, stat.series_stat, n, k, param, trunc)
        if param == 0:
            return at_most
        return at_most - series_statistic(stat.kind, stat.series_stat, n, k, param - 1, trunc)
    return series_statistic(stat.kind, stat.series_stat, n, k, param, trunc)


def series_value(
    stat: Statistic,
    n: int,
    k: Optional[int] = None,
    param: Optional[int] = None,
    trunc: Optional[int] = None,
) -> int:
    """
    Generating-function value. ALL statistics sum the cells k = 1..n.

    Args:
        trunc: Shared truncation order (at least n) so cached series are reused
    """
    trunc = n if trunc is None else max(trunc, n)
    if stat.scope is Scope.ALL:
        return sum(_series_cell(stat, n, j, None, trunc) for j in range(1, n + 1))
    return _series_cell(stat, n, k, param, trunc)
