"""
Aggregated record statistics for one (n, k) cell or for all of P_n.
"""

from dataclasses import dataclass, field
from typing import Dict, Optional


def _add_maps(left: Dict[int, int], right: Dict[int, int]) -> Dict[int, int]:
    merged = dict(left)
    for key, value in right.items():
        merged[key] = merged.get(key, 0) + value
    return {key: merged[key] for key in sorted(merged)}


@dataclass
class StatBundle:
    """
    Every record statistic, aggregated over a set of partitions.

    Attributes:
        n: Number of elements
        k: Number of blocks, or None for an aggregate over all of P_n
        count: Number of partitions folded in
        strong_h1_by_r: r -> partitions with exactly r strong records of height 1
        weak_h1_by_r: r -> partitions with exactly r weak records of height 1
        strong_total_height: Sum of strong-record heights >= 1
        weak_total_height: Sum of weak-record heights >= 1
        max_height_exact: h -> partitions whose largest strong height is h
        max_height_at_most: h -> partitions whose largest strong height is <= h
    """
    n: int
    k: Optional[int]
    count: int = 0
    strong_h1_by_r: Dict[int, int] = field(default_factory=dict)
    weak_h1_by_r: Dict[int, int] = field(default_factory=dict)
    strong_total_height: int = 0
    weak_total_height: int = 0
    max_height_exact: Dict[int, int] = field(default_factory=dict)
    max_height_at_most: Dict[int, int] = field(default_factory=dict)

    @property
    def height_limit(self) -> int:
        """Largest h kept in the height maps: max(k - 1, 0), or max(n - 1, 0) for P_n."""
        blocks = self.n if self.k is None else self.k
        return max(blocks - 1, 0)

    def strong_h1_total(self) -> int:
        return sum(r * c for r, c in self.strong_h1_by_r.items())

    def weak_h1_total(self) -> int:
        return sum(r * c for r, c in self.weak_h1_by_r.items())

    def finalize(self) -> "StatBundle":
        """Fill the height maps densely over 0..height_limit and rebuild the cumulative map."""
        exact = {h: self.max_height_exact.get(h, 0) for h in range(self.height_limit + 1)}
        running = 0
        at_most = {}
        for h in range(self.height_limit + 1):
            running += exact[h]
            at_most[h] = running
        self.max_height_exact = exact
        self.max_height_at_most = at_most
        self.strong_h1_by_r = {r: self.strong_h1_by_r[r] for r in sorted(self.strong_h1_by_r)}
        self.weak_h1_by_r = {r: self.weak_h1_by_r[r] for r in sorted(self.weak_h1_by_r)}
        return self

    def merge(self, other: "StatBundle") -> "StatBundle":
        """
        Componentwise sum of two bundles over the same n, keeping self.k.

        Args:
            other: Bundle to add

        Returns:
            A new finalized bundle
        """
        if other.n != self.n:
            raise ValueError(f"cannot merge bundles for n={self.n} and n={other.n}")
        merged = StatBundle(
            n=self.n,
            k=self.k,
            count=self.count + other.count,
            strong_h1_by_r=_add_maps(self.strong_h1_by_r, other.strong_h1_by_r),
            weak_h1_by_r=_add_maps(self.weak_h1_by_r, other.weak_h1_by_r),
            strong_total_height=self.strong_total_height + other.strong_total_height,
            weak_total_height=self.weak_total_height + other.weak_total_height,
            max_height_exact=_add_maps(self.max_height_exact, other.max_height_exact),
        )
        return merged.finalize()
