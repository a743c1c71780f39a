"""
Truncated power series in x with QPoly coefficients.

This module provides the XSeries class. Only the x-degree is truncated;
q-degrees are kept in full.
"""

import logging
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from series.qpoly import ONE, ZERO, QPoly, Scalar

logger = logging.getLogger(__name__)


class TruncationError(ValueError):
    """Raised when a coefficient beyond the truncation order is requested."""


class NonUnitConstantTerm(ArithmeticError):
    """Raised when inverting a series whose constant term is not a nonzero rational."""


class XSeries:
    """
    Immutable power series sum_{n <= trunc} c_n(q) x^n.

    Attributes:
        trunc: Highest x-degree retained
    """

    __slots__ = ("trunc", "_coeffs")

    def __init__(self, trunc: int, coeffs: Sequence[Union[QPoly, Scalar]] = ()) -> None:
        if trunc < 0:
            raise ValueError(f"truncation order must be non-negative, got {trunc}")
        padded: List[QPoly] = [QPoly.coerce(c) for c in list(coeffs)[: trunc + 1]]
        padded.extend([ZERO] * (trunc + 1 - len(padded)))
        self.trunc = trunc
        self._coeffs: Tuple[QPoly, ...] = tuple(padded)

    @classmethod
    def one(cls, trunc: int) -> "XSeries":
        return cls(trunc, [ONE])

    @classmethod
    def polynomial(cls, trunc: int, coeffs: Sequence[Union[QPoly, Scalar]]) -> "XSeries":
        """Series of a polynomial in x given lowest degree first; higher terms are dropped."""
        return cls(trunc, coeffs)

    @property
    def coeffs(self) -> Tuple[QPoly, ...]:
        return self._coeffs

    def coeff(self, n: int) -> QPoly:
        """Coefficient of x^n."""
        if n < 0 or n > self.trunc:
            raise TruncationError(f"x-degree {n} outside 0..{self.trunc}")
        return self._coeffs[n]

    def coeff_qr(self, n: int, r: int) -> Fraction:
        """Rational coefficient of q^r x^n."""
        if r < 0:
            raise ValueError(f"negative q-degree {r}")
        return self.coeff(n).coefficient(r)

    def _common(self, other: "XSeries") -> int:
        return min(self.trunc, other.trunc)

    def __add__(self, other: "XSeries") -> "XSeries":
        trunc = self._common(other)
        return XSeries(trunc, [self._coeffs[i] + other._coeffs[i] for i in range(trunc + 1)])

    def __sub__(self, other: "XSeries") -> "XSeries":
        trunc = self._common(other)
        return XSeries(trunc, [self._coeffs[i] - other._coeffs[i] for i in range(trunc + 1)])

    def __neg__(self) -> "XSeries":
        return XSeries(self.trunc, [-c for c in self._coeffs])

    def __mul__(self, other: "XSeries | QPoly | Scalar") -> "XSeries":
        if not isinstance(other, XSeries):
            factor = QPoly.coerce(other)
            return XSeries(self.trunc, [c * factor for c in self._coeffs])
        trunc = self._common(other)
        product = [ZERO] * (trunc + 1)
        for i in range(trunc + 1):
            left = self._coeffs[i]
            if left.is_zero():
                continue
            for j in range(trunc + 1 - i):
                right = other._coeffs[j]
                if not right.is_zero():
                    product[i + j] = product[i + j] + left * right
        return XSeries(trunc, product)

    __rmul__ = __mul__

    def shift(self, power: int) -> "XSeries":
        """Multiply by x^power, dropping terms beyond trunc."""
        if power < 0:
            raise ValueError("shift power must be non-negative")
        return XSeries(self.trunc, [ZERO] * power + list(self._coeffs))

    def reciprocal(self) -> "XSeries":
        """
        1 / self up to trunc.

        Raises:
            NonUnitConstantTerm: If the constant term is zero or depends on q
        """
        head = self._coeffs[0]
        if head.is_zero() or not head.is_constant():
            raise NonUnitConstantTerm(f"constant term {head} is not a nonzero rational")
        inverse_head = 1 / head.constant_term()
        result: List[QPoly] = [QPoly.constant(inverse_head)]
        for n in range(1, self.trunc + 1):
            acc = ZERO
            for i in range(1, n + 1):
                if not self._coeffs[i].is_zero():
                    acc = acc + self._coeffs[i] * result[n - i]
            result.append(acc * (-inverse_head))
        return XSeries(self.trunc, result)

    def __truediv__(self, other: "XSeries") -> "XSeries":
        return self * other.reciprocal()

    def map_coeffs(self, func) -> "XSeries":
        return XSeries(self.trunc, [func(c) for c in self._coeffs])

    def q_derivative_at_one(self) -> "XSeries":
        """Series of d/dq c_n(q) evaluated at q = 1, coefficientwise."""
        return self.map_coeffs(lambda c: QPoly.constant(c.derivative().evaluate(1)))

    def evaluate_q(self, q: Scalar) -> "XSeries":
        return self.map_coeffs(lambda c: QPoly.constant(c.evaluate(q)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, XSeries):
            return NotImplemented
        return self.trunc == other.trunc and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self.trunc, self._coeffs))

    def __repr__(self) -> str:
        return f"XSeries(trunc={self.trunc}, coeffs={list(self._coeffs)!r})"
