"""
Truncated tree series with exact coefficients and float evaluation.

r(x) = sum_{n<=N} r_n x^n is only useful well inside its disc of
convergence; near the singularity x0 the tail decays like n^{-3/2}. The
root solver therefore works with E(x) = sum_{k>=2} r(x^k)/k, whose arguments
x^k <= x0^2 stay far from x0.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Tuple

import numpy as np
from numpy.polynomial import polynomial as P

from census.counting.tables import rooted_counts

MIN_TRUNCATION = 60
# x^k below this no longer moves E(x) or E'(x) in double precision
_TAIL_CUTOFF = 1e-20


@dataclass(frozen=True)
class SeriesTruncation:
    order: int
    coefficients: Tuple[int, ...]   # coefficients[n] = r_n, coefficients[0] = 0

    @classmethod
    def build(cls, order: int) -> "SeriesTruncation":
        if order < 1:
            raise ValueError(f"truncation order must be >= 1, got {order}")
        return cls(order, (0,) + rooted_counts(order).values)

    @cached_property
    def floats(self) -> np.ndarray:
        return np.array([float(c) for c in self.coefficients])

    @cached_property
    def derivative_floats(self) -> np.ndarray:
        return P.polyder(self.floats)

    def r(self, x: float) -> float:
        return float(P.polyval(x, self.floats))

    def r_prime(self, x: float) -> float:
        return float(P.polyval(x, self.derivative_floats))

    def tail(self, x: float) -> float:
        """E(x) = sum_{k>=2} r(x^k) / k."""
        _check_unit(x)
        total = 0.0
        for k in itertools.count(2):
            z = x ** k
            if z < _TAIL_CUTOFF:
                return total
            total += self.r(z) / k

    def tail_prime(self, x: float) -> float:
        """E'(x) = sum_{k>=2} x^(k-1) r'(x^k)."""
        _check_unit(x)
        total = 0.0
        for k in itertools.count(2):
            z = x ** k
            if z < _TAIL_CUTOFF:
                return total
            total += x ** (k - 1) * self.r_prime(z)


def _check_unit(x: float) -> None:
    if not 0.0 < x < 1.0:
        raise ValueError(f"the tail sums need 0 < x < 1, got {x}")


def evaluate_r(series: SeriesTruncation, x: float) -> float:
    return series.r(x)


def evaluate_t(series: SeriesTruncation, x: float) -> float:
    """Free-tree series through t(x) = r(x) - (r(x)^2 - r(x^2)) / 2."""
    rx = series.r(x)
    return rx - (rx * rx - series.r(x * x)) / 2
