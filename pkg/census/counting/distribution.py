"""
Exact distributions of the number of vertex classes, by exhaustive
enumeration (no bivariate series): counts[k] = number of trees of order n
with exactly k automorphism classes.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional

from census.counting.tables import Kind, count_table
from census.enumeration import enumerate_free, enumerate_rooted
from census.errors import ExactnessError, FeasibilityError
from census.trees.orbits import orbits_free, orbits_rooted

DEFAULT_FREE_BOUND = 16
DEFAULT_ROOTED_BOUND = 15


@dataclass(frozen=True)
class DistributionTable:
    kind: Kind
    n: int
    counts: Dict[int, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def probabilities(self) -> Dict[int, Fraction]:
        total = self.total
        return {k: Fraction(c, total) for k, c in sorted(self.counts.items())}

    def mean(self) -> Fraction:
        return Fraction(sum(k * c for k, c in self.counts.items()), self.total)


def _bound_for(kind: Kind, bound: Optional[int]) -> int:
    if bound is not None:
        return bound
    return DEFAULT_FREE_BOUND if kind == "free" else DEFAULT_ROOTED_BOUND


def orbit_distribution(kind: Kind, n: int, *, bound: Optional[int] = None, progress: bool = False) -> DistributionTable:
    """
    Behavior:
      - Enumerates every tree of the given kind and order once and tallies
        its class count.
      - The row sum is checked against the counting table; a mismatch raises
        ExactnessError.
      - n above the bound (default 16 free, 15 rooted) raises FeasibilityError.
    """
    limit = _bound_for(kind, bound)
    if n > limit:
        raise FeasibilityError(f"{kind} orbit distribution", n, limit)
    tally: Counter = Counter()
    if kind == "free":
        enumerate_free(n, lambda t: tally.update([orbits_free(t).class_count]), bound=limit, progress=progress)
    elif kind == "rooted":
        enumerate_rooted(n, lambda t: tally.update([orbits_rooted(t).class_count]), bound=limit, progress=progress)
    else:
        raise ValueError(f"unknown kind {kind!r}")

    table = DistributionTable(kind, n, dict(sorted(tally.items())))
    expected = count_table(kind, n)[n]
    if table.total != expected:
        raise ExactnessError(f"{kind} distribution at n={n} sums to {table.total}, expected {expected}")
    return table


def fixed_root_count(n: int, *, bound: Optional[int] = None) -> int:
    """
    Rooted trees of order n whose root is a fixed vertex of the underlying
    free tree. A singleton class gives exactly one rooted class, so this is
    the sum of fixed-vertex counts over the free trees of order n.
    """
    limit = _bound_for("free", bound)
    if n > limit:
        raise FeasibilityError("fixed-root count", n, limit)
    total = 0

    def visit(t):
        nonlocal total
        total += orbits_free(t).fixed_count

    enumerate_free(n, visit, bound=limit)
    return total
