"""
Polynomials in the record marker q with exact rational coefficients.
"""

from fractions import Fraction
from typing import Dict, Iterator, Tuple, Union

Scalar = Union[int, Fraction]


class QPoly:
    """
    Immutable polynomial in q over the rationals.

    Zero coefficients are never stored, so equal polynomials have equal
    coefficient maps.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: "Dict[int, Scalar] | None" = None) -> None:
        cleaned: Dict[int, Fraction] = {}
        for degree, value in (coeffs or {}).items():
            if degree < 0:
                raise ValueError(f"negative q-degree {degree}")
            value = Fraction(value)
            if value:
                cleaned[degree] = value
        self._coeffs: Tuple[Tuple[int, Fraction], ...] = tuple(sorted(cleaned.items()))

    @classmethod
    def constant(cls, value: Scalar) -> "QPoly":
        return cls({0: value})

    @classmethod
    def monomial(cls, degree: int, value: Scalar = 1) -> "QPoly":
        return cls({degree: value})

    @classmethod
    def coerce(cls, value: "QPoly | Scalar") -> "QPoly":
        return value if isinstance(value, QPoly) else cls.constant(value)

    @property
    def coeffs(self) -> Dict[int, Fraction]:
        return dict(self._coeffs)

    @property
    def degree(self) -> int:
        """Degree in q; -1 for the zero polynomial."""
        return self._coeffs[-1][0] if self._coeffs else -1

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_constant(self) -> bool:
        return self.degree <= 0

    def coefficient(self, degree: int) -> Fraction:
        """Coefficient of q^degree."""
        if degree < 0:
            raise ValueError(f"negative q-degree {degree}")
        for d, value in self._coeffs:
            if d == degree:
                return value
        return Fraction(0)

    def constant_term(self) -> Fraction:
        return self.coefficient(0)

    def items(self) -> Iterator[Tuple[int, Fraction]]:
        return iter(self._coeffs)

    def evaluate(self, q: Scalar) -> Fraction:
        return sum((value * Fraction(q) ** degree for degree, value in self._coeffs), Fraction(0))

    def derivative(self) -> "QPoly":
        return QPoly({degree - 1: degree * value for degree, value in self._coeffs if degree})

    def __add__(self, other: "QPoly | Scalar") -> "QPoly":
        other = QPoly.coerce(other)
        merged = dict(self._coeffs)
        for degree, value in other._coeffs:
            merged[degree] = merged.get(degree, 0) + value
        return QPoly(merged)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly({degree: -value for degree, value in self._coeffs})

    def __sub__(self, other: "QPoly | Scalar") -> "QPoly":
        return self + (-QPoly.coerce(other))

    def __rsub__(self, other: "QPoly | Scalar") -> "QPoly":
        return QPoly.coerce(other) - self

    def __mul__(self, other: "QPoly | Scalar") -> "QPoly":
        other = QPoly.coerce(other)
        product: Dict[int, Fraction] = {}
        for d1, v1 in self._coeffs:
            for d2, v2 in other._coeffs:
                product[d1 + d2] = product.get(d1 + d2, 0) + v1 * v2
        return QPoly(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "QPoly":
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = QPoly.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QPoly.constant(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"QPoly({dict(self._coeffs)!r})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for degree, value in self._coeffs:
            if degree == 0:
                terms.append(str(value))
            elif degree == 1:
                terms.append(f"{value}*q")
            else:
                terms.append(f"{value}*q^{degree}")
        return " + ".join(terms)


ZERO = QPoly()
ONE = QPoly.constant(1)
Q = QPoly.monomial(1)
