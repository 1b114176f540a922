"""
Richardson extrapolation in 1/n.

For s(n) = L + c_1/n + c_2/n^2 + ..., the depth-k transform

    R_k(n) = sum_{j=0}^{k} s(n+j) (n+j)^k (-1)^(k+j) / (j! (k-j)!)

cancels c_1..c_k. Columns are taken so that every one of them ends at the
last available term; the error estimate is |R_k - R_{k-1}|.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Callable, Dict


@dataclass(frozen=True)
class Estimate:
    value: float
    error: float
    method: str

    def to_dict(self) -> Dict[str, object]:
        return {"value": self.value, "error": self.error, "method": self.method}


def richardson(seq: Callable[[int], float], start: int, depth: int) -> float:
    """R_depth(start) using the terms seq(start) .. seq(start + depth)."""
    if depth < 0:
        raise ValueError(f"depth must be >= 0, got {depth}")
    total = 0.0
    for j in range(depth + 1):
        m = start + j
        sign = -1.0 if (depth + j) % 2 else 1.0
        total += sign * seq(m) * float(m) ** depth / (factorial(j) * factorial(depth - j))
    return total


def extrapolate(seq: Callable[[int], float], last: int, depth: int, method: str) -> Estimate:
    """Limit of seq(n) from the terms up to `last`, error from the last two columns."""
    if depth < 1:
        raise ValueError(f"depth must be >= 1, got {depth}")
    if last - depth < 1:
        raise ValueError(f"need terms up to at least {depth + 1}, got {last}")
    top = richardson(seq, last - depth, depth)
    below = richardson(seq, last - depth + 1, depth - 1)
    return Estimate(top, abs(top - below), method)
