"""
Marker assignments for record heights.

A WeightSpec says which QPoly the marker q_i of a height-i record is replaced
by before the product generating functions are expanded.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from series.qpoly import ONE, Q, ZERO, QPoly


class WeightPreset(Enum):
    """Named marker assignments."""
    ALL_ONES = "all_ones"            # q_i = 1
    HEIGHT_ONE = "height_one"        # q_1 = q, q_i = 1 for i >= 2
    TOTAL_HEIGHT = "total_height"    # q_i = q^i
    MAX_CUTOFF = "max_cutoff"        # q_i = 1 for i <= h, else 0
    UNIFORM = "uniform"              # q_i = q
    CUSTOM = "custom"                # explicit tuple, q_1 first


@dataclass(frozen=True)
class WeightSpec:
    """
    Rule i -> QPoly for the markers q_1, q_2, ...

    Attributes:
        preset: Which rule to apply
        cutoff: h for MAX_CUTOFF
        custom: Explicit weights for CUSTOM, q_1 first
    """
    preset: WeightPreset
    cutoff: Optional[int] = None
    custom: Tuple[QPoly, ...] = ()

    @classmethod
    def all_ones(cls) -> "WeightSpec":
        return cls(WeightPreset.ALL_ONES)

    @classmethod
    def height_one(cls) -> "WeightSpec":
        return cls(WeightPreset.HEIGHT_ONE)

    @classmethod
    def total_height(cls) -> "WeightSpec":
        return cls(WeightPreset.TOTAL_HEIGHT)

    @classmethod
    def max_cutoff(cls, h: int) -> "WeightSpec":
        if h < 0:
            raise ValueError(f"cutoff must be non-negative, got {h}")
        return cls(WeightPreset.MAX_CUTOFF, cutoff=h)

    @classmethod
    def uniform(cls) -> "WeightSpec":
        return cls(WeightPreset.UNIFORM)

    @classmethod
    def of(cls, weights) -> "WeightSpec":
        return cls(WeightPreset.CUSTOM, custom=tuple(QPoly.coerce(w) for w in weights))

    def weight(self, i: int) -> QPoly:
        """Marker for records of height i (i >= 1)."""
        if i < 1:
            raise ValueError(f"marker index must be >= 1, got {i}")
        if self.preset is WeightPreset.ALL_ONES:
            return ONE
        if self.preset is WeightPreset.HEIGHT_ONE:
            return Q if i == 1 else ONE
        if self.preset is WeightPreset.TOTAL_HEIGHT:
            return QPoly.monomial(i)
        if self.preset is WeightPreset.MAX_CUTOFF:
            return ONE if i <= self.cutoff else ZERO
        if self.preset is WeightPreset.UNIFORM:
            return Q
        if i > len(self.custom):
            raise ValueError(f"custom weights define q_1..q_{len(self.custom)}, q_{i} requested")
        return self.custom[i - 1]

    def partial_sum(self, low: int, high: int) -> QPoly:
        """q_low + ... + q_high; zero when the range is empty."""
        total = ZERO
        for i in range(low, high + 1):
            total = total + self.weight(i)
        return total
