"""
Exact closed forms for record statistics of set partitions.

Every formula is evaluated over Fractions and must collapse to an integer.
The weak height-one totals over P_{n,k} and P_n are evaluated exactly as
written; enumeration disagrees with them from n = 2, and callers are
expected to report both values rather than trust either. The weak height
totals are kept as written too. They agree with enumeration up to n = 4 but
fall short from n = 5 on, for example 18 against 20 at (5, 2).

Binomials inside the weak height-one count use THM3I_BINOMIAL_MODE. Both
conventions were compared against enumeration; they only differ on terms
multiplied by S_{0,k} = 0, so the Pascal convention is pinned.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, Optional, Tuple

from combinum import (
    BinomialMode,
    bell,
    binomial,
    stirling1_signed,
    stirling1_unsigned,
    stirling2,
)

logger = logging.getLogger(__name__)

THM3I_BINOMIAL_MODE = BinomialMode.PASCAL

HALF = Fraction(1, 2)
SIXTH = Fraction(1, 6)
THIRD = Fraction(1, 3)


class FormulaId(Enum):
    """The eleven stated results, plus the exact-h reading of the maximum height count."""
    THM1I = "thm1i"
    THM1II = "thm1ii"
    THM1III = "thm1iii"
    THM2I = "thm2i"
    THM2II = "thm2ii"
    THM2III = "thm2iii"
    THM2III_EXACT = "thm2iii-exact"
    THM3I = "thm3i"
    THM3II = "thm3ii"
    THM3III = "thm3iii"
    THM3IV = "thm3iv"
    THM3V = "thm3v"


class FormulaDomainError(ValueError):
    """Raised when a formula is evaluated outside its stated validity range."""


class IntegralityError(ArithmeticError):
    """
    Raised when a formula evaluates to a non-integer.

    Attributes:
        formula_id: Formula that was evaluated
        inputs: Arguments it was evaluated at
        value: The offending rational value
    """

    def __init__(self, formula_id: FormulaId, inputs: Tuple[int, ...], value: Fraction) -> None:
        super().__init__(f"{formula_id.value}{inputs} evaluated to non-integer {value}")
        self.formula_id = formula_id
        self.inputs = inputs
        self.value = value


@dataclass(frozen=True)
class FormulaResult:
    """
    A formula value together with what produced it.

    Attributes:
        value: Integer value of the formula
        formula_id: Which formula
        inputs: (n,), (n, k) or (n, k, r|h)
    """
    value: int
    formula_id: FormulaId
    inputs: Tuple[int, ...]


def _integral(formula_id: FormulaId, inputs: Tuple[int, ...], value: Fraction) -> int:
    value = Fraction(value)
    if value.denominator != 1:
        raise IntegralityError(formula_id, inputs, value)
    return value.numerator


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise FormulaDomainError(message)


def _require_cell(n: int, k: int) -> None:
    _require(n >= k >= 1, f"need n >= k >= 1, got n={n}, k={k}")


def thm1i_strong_h1_count(n: int, k: int, r: int) -> int:
    """Number of k-partitions of [n] with exactly r strong records of height one."""
    _require_cell(n, k)
    _require(r >= 0, f"need r >= 0, got r={r}")
    total = 0
    for j in range(k):
        sign = -1 if (r - j) % 2 else 1
        total += sign * binomial(k - 1 - j, r - j) * stirling1_unsigned(k - 1, j) * stirling2(n - k + 1 + j, k)
    return total


def thm1ii_strong_h1_total(n: int, k: int) -> int:
    """Total number of strong records of height one over P_{n,k}."""
    _require_cell(n, k)
    _require(n >= 2, f"need n >= 2, got n={n}")
    value = (
        HALF * stirling2(n + 1, k)
        + HALF * stirling2(n, k)
        - stirling2(n - 1, k)
        - stirling2(n - 1, k - 1)
        - HALF * stirling2(n - 1, k - 2)
    )
    return _integral(FormulaId.THM1II, (n, k), value)


def thm1iii_strong_h1_total_all(n: int) -> int:
    """Total number of strong records of height one over P_n."""
    _require(n >= 2, f"need n >= 2, got n={n}")
    value = HALF * bell(n + 1) + HALF * bell(n) - Fraction(5, 2) * bell(n - 1)
    return _integral(FormulaId.THM1III, (n,), value)


def thm2i_strong_height_total(n: int, k: int) -> int:
    """Sum of the heights of the strong records over P_{n,k}."""
    _require_cell(n, k)
    return (k - 1) * stirling2(n, k) + binomial(k, 3) * stirling2(n - 1, k)


def thm2ii_strong_height_total_all(n: int) -> int:
    """Sum of the heights of the strong records over P_n."""
    _require(n >= 1, f"need n >= 1, got n={n}")
    value = SIXTH * bell(n + 2) - Fraction(2, 3) * bell(n) - SIXTH * bell(n - 1)
    return _integral(FormulaId.THM2II, (n,), value)


def thm2iii_max_height_at_most(n: int, k: int, h: int) -> int:
    """
    Number of k-partitions of [n] whose largest strong-record height is at most h.

    The stated count is for maximum height h, but its derivation keeps every
    marker q_i with i <= h, which counts maximum height at most h. For k >= 2
    the value at h = 0 is 0; for k = 1 every h >= 0 gives S_{n,1}.
    """
    _require_cell(n, k)
    _require(h >= 0, f"need h >= 0, got h={h}")
    if k == 1:
        return stirling2(n, 1)
    if h == 0:
        return 0
    h = min(h, k - 1)
    span = k - h
    return sum(stirling1_signed(span, j) * stirling2(n - span + j, k) for j in range(1, span + 1))


def thm2iii_max_height_exact(n: int, k: int, h: int) -> int:
    """Number of k-partitions of [n] whose largest strong-record height is exactly h."""
    _require_cell(n, k)
    _require(h >= 0, f"need h >= 0, got h={h}")
    if h == 0:
        return thm2iii_max_height_at_most(n, k, 0)
    return thm2iii_max_height_at_most(n, k, h) - thm2iii_max_height_at_most(n, k, h - 1)


def thm3i_weak_h1_count(n: int, k: int, r: int, mode: BinomialMode = THM3I_BINOMIAL_MODE) -> int:
    """
    Number of k-partitions of [n] with exactly r weak records of height one.

    The sum uses a free symbol m for the record count; it is read as r.
    """
    _require_cell(n, k)
    _require(r >= 0, f"need r >= 0, got r={r}")
    m = r
    total = 0
    for i in range(k):
        cycles = stirling1_unsigned(k - 1, i)
        if not cycles:
            continue
        for a in range((n + i - k) // 2 + 1):
            sign = -1 if (m + a - i) % 2 else 1
            total += (
                sign
                * binomial(n + i - a - k, a, mode)
                * binomial(k + a - 1 - i, m - i, mode)
                * stirling2(n + 1 + i - 2 * a - k, k)
                * cycles
            )
        for a in range((n + i - 1 - k) // 2 + 1):
            sign = -1 if (m + a - i) % 2 else 1
            outer = sign * binomial(k + a - i, m - i, mode) * cycles
            if not outer:
                continue
            for j in range(n + i - 1 - 2 * a - k + 1):
                total += outer * binomial(j - 1 + a, a, mode) * stirling2(j, k)
    return total


def thm3ii_weak_h1_total(n: int, k: int) -> int:
    """
    Total number of weak records of height one over P_{n,k}, as the closed form reads.

    Enumeration gives different values; see the module docstring.
    """
    _require_cell(n, k)
    value = (
        HALF * stirling2(n + 2, k)
        + HALF * stirling2(n + 1, k)
        + n * stirling2(n - 1, k)
        - stirling2(n, k - 1)
        - HALF * stirling2(n, k - 2)
        - stirling2(n - 1, k)
        - sum(binomial(n, j) * stirling2(n - 1 - j, k - 1) for j in range(n))
    )
    return _integral(FormulaId.THM3II, (n, k), value)


def thm3iii_weak_h1_total_all(n: int) -> int:
    """
    Total number of weak records of height one over P_n, as the closed form reads.

    Enumeration gives different values; see the module docstring.
    """
    _require(n >= 2, f"need n >= 2, got n={n}")
    value = (
        HALF * bell(n + 1)
        + HALF * bell(n)
        + (n - 1) * bell(n - 2)
        - Fraction(3, 2) * bell(n - 1)
        - bell(n - 2)
        - sum(binomial(n, j + 1) * bell(j) for j in range(n))
    )
    return _integral(FormulaId.THM3III, (n,), value)


def thm3iv_weak_height_total(n: int, k: int) -> int:
    """
    Sum of the heights of the weak records over P_{n,k}, as the closed form reads.

    Enumeration gives larger values in some cells from n = 5, starting at (5, 2).
    """
    _require_cell(n, k)
    return (
        (k - 1) * stirling2(n, k)
        + binomial(k, 3) * stirling2(n - 1, k)
        + binomial(k + 1, 3) * stirling2(n - 2, k)
    )


def thm3v_weak_height_total_all(n: int) -> int:
    """
    Sum of the heights of the weak records over P_n, as the closed form reads.

    Enumeration gives larger values from n = 5; see the module docstring.
    """
    _require(n >= 2, f"need n >= 2, got n={n}")
    value = (
        SIXTH * bell(n + 2)
        + SIXTH * bell(n + 1)
        - Fraction(7, 6) * bell(n)
        - THIRD * bell(n - 1)
        + THIRD * bell(n - 2)
    )
    return _integral(FormulaId.THM3V, (n,), value)


_CELL: Dict[FormulaId, Callable[[int, int], int]] = {
    FormulaId.THM1II: thm1ii_strong_h1_total,
    FormulaId.THM2I: thm2i_strong_height_total,
    FormulaId.THM3II: thm3ii_weak_h1_total,
    FormulaId.THM3IV: thm3iv_weak_height_total,
}
_CELL_PARAM: Dict[FormulaId, Callable[[int, int, int], int]] = {
    FormulaId.THM1I: thm1i_strong_h1_count,
    FormulaId.THM2III: thm2iii_max_height_at_most,
    FormulaId.THM2III_EXACT: thm2iii_max_height_exact,
    FormulaId.THM3I: thm3i_weak_h1_count,
}
_ALL: Dict[FormulaId, Callable[[int], int]] = {
    FormulaId.THM1III: thm1iii_strong_h1_total_all,
    FormulaId.THM2II: thm2ii_strong_height_total_all,
    FormulaId.THM3III: thm3iii_weak_h1_total_all,
    FormulaId.THM3V: thm3v_weak_height_total_all,
}


def evaluate(formula_id: FormulaId, n: int, k: Optional[int] = None, param: Optional[int] = None) -> FormulaResult:
    """
    Evaluate a formula by id.

    Args:
        formula_id: Which formula
        n: Number of elements
        k: Number of blocks (cell formulas only)
        param: r or h (formulas that take one)

    Returns:
        FormulaResult

    Raises:
        FormulaDomainError: On missing arguments or out-of-range inputs
        IntegralityError: If the value is not an integer
    """
    if formula_id in _ALL:
        return FormulaResult(_ALL[formula_id](n), formula_id, (n,))
    if k is None:
        raise FormulaDomainError(f"{formula_id.value} needs k")
    if formula_id in _CELL:
        return FormulaResult(_CELL[formula_id](n, k), formula_id, (n, k))
    if param is None:
        raise FormulaDomainError(f"{formula_id.value} needs a parameter")
    return FormulaResult(_CELL_PARAM[formula_id](n, k, param), formula_id, (n, k, param))
