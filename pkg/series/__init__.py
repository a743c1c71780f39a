"""
Truncated formal power series engine.

Provides exact-rational polynomials in the marker q, truncated series in x
with QPoly coefficients, marker presets, and the product generating functions
for strong and weak record heights.
"""

from series.qpoly import ONE, Q, ZERO, QPoly
from series.xseries import NonUnitConstantTerm, TruncationError, XSeries
from series.weights import WeightPreset, WeightSpec
from series.generating import (
    SeriesKind,
    SeriesStat,
    coeff,
    coeff_qr,
    q_derivative_at_one,
    series_statistic,
    strong_series,
    weak_series,
)

__all__ = [
    "ONE",
    "Q",
    "ZERO",
    "QPoly",
    "NonUnitConstantTerm",
    "TruncationError",
    "XSeries",
    "WeightPreset",
    "WeightSpec",
    "SeriesKind",
    "SeriesStat",
    "coeff",
    "coeff_qr",
    "q_derivative_at_one",
    "series_statistic",
    "strong_series",
    "weak_series",
]
