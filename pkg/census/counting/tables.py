"""
Exact counts of unlabeled trees.

r_n  rooted trees   r(x) = x * exp(sum_{k>=1} r(x^k) / k)
t_n  free trees     t(x) = r(x) - (r(x)^2 - r(x^2)) / 2          (Otter)

Two independent routes compute r_n: the log-derivative recurrence
    n * r_{n+1} = sum_{j=1}^{n} s_j * r_{n+1-j},   s_j = sum_{d | j} d * r_d
and a truncated power-series fixed point of the exponential formula.
All arithmetic is on Python ints / Fractions; every division is checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, List, Literal, Tuple

from census.errors import ExactnessError

Kind = Literal["rooted", "free"]


@dataclass(frozen=True)
class CountTable:
    kind: Kind
    max_n: int
    values: Tuple[int, ...]   # values[i] = count for order i + 1

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.max_n:
            raise IndexError(f"order {n} outside 1..{self.max_n}")
        return self.values[n - 1]

    def items(self):
        return ((n, self.values[n - 1]) for n in range(1, self.max_n + 1))


def _exact_div(numerator: int, denominator: int, what: str) -> int:
    q, rem = divmod(numerator, denominator)
    if rem:
        raise ExactnessError(f"{what}: {numerator} is not divisible by {denominator}")
    return q


# ─── rooted: recurrence ───────────────────────────────────────────────────
@lru_cache(maxsize=8)
def _rooted_values(max_n: int) -> Tuple[int, ...]:
    r = [0] * (max_n + 1)          # 1-based
    s = [0] * (max_n + 1)          # s[j] = sum_{d | j} d * r_d, filled incrementally
    r[1] = 1
    for m in range(1, max_n + 1):
        if m > 1:
            n = m - 1
            total = sum(s[j] * r[m - j] for j in range(1, m))
            r[m] = _exact_div(total, n, f"rooted recurrence at n={m}")
        contribution = m * r[m]
        for multiple in range(m, max_n + 1, m):
            s[multiple] += contribution
    return tuple(r[1:])


def rooted_counts(max_n: int) -> CountTable:
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    return CountTable("rooted", max_n, _rooted_values(max_n))


# ─── rooted: exponential fixed point ──────────────────────────────────────
def _series_exp(a: List[Fraction], order: int) -> List[Fraction]:
    """exp(A) for a series with a[0] = 0, via b' = a' b:  m b_m = sum_i i a_i b_{m-i}."""
    b = [Fraction(0)] * (order + 1)
    b[0] = Fraction(1)
    for m in range(1, order + 1):
        b[m] = sum((i * a[i] * b[m - i] for i in range(1, m + 1)), Fraction(0)) / m
    return b


def rooted_counts_via_exp(max_n: int) -> CountTable:
    """
    Fixed-point iteration r <- x * exp(sum_k r(x^k)/k) on series truncated at
    x^max_n. Coefficient n is final after n iterations; the loop stops as soon
    as an iteration changes nothing.
    """
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    r = [Fraction(0)] * (max_n + 1)
    for _ in range(max_n):
        # exponent coefficients: [x^m] sum_k r(x^k)/k = sum_{k | m} r_{m/k} / k
        a = [Fraction(0)] * max_n
        for k in range(1, max_n):
            for q in range(1, (max_n - 1) // k + 1):
                if r[q]:
                    a[k * q] += r[q] / k
        e = _series_exp(a, max_n - 1)
        updated = [Fraction(0)] + e[:max_n]
        if updated == r:
            break
        r = updated
    values = []
    for n in range(1, max_n + 1):
        if r[n].denominator != 1:
            raise ExactnessError(f"exponential route produced a non-integer r_{n} = {r[n]}")
        values.append(r[n].numerator)
    return CountTable("rooted", max_n, tuple(values))


# ─── free trees ───────────────────────────────────────────────────────────
def free_counts(max_n: int) -> CountTable:
    """t_n = r_n - (sum_{i+j=n} r_i r_j - [n even] r_{n/2}) / 2."""
    r = rooted_counts(max_n)
    values = []
    for n in range(1, max_n + 1):
        pairs = sum(r[i] * r[n - i] for i in range(1, n))
        if n % 2 == 0:
            pairs -= r[n // 2]
        values.append(r[n] - _exact_div(pairs, 2, f"Otter identity at n={n}"))
    return CountTable("free", max_n, tuple(values))


def count_table(kind: Kind, max_n: int) -> CountTable:
    if kind == "rooted":
        return rooted_counts(max_n)
    if kind == "free":
        return free_counts(max_n)
    raise ValueError(f"unknown kind {kind!r}")


# ─── supplements ──────────────────────────────────────────────────────────
def mean_orbits_exact(n: int) -> Fraction:
    """
    E[X_n] over free trees. Each free tree T underlies exactly X(T) rooted
    classes, so sum_T X(T) = r_n and E[X_n] = r_n / t_n.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return Fraction(rooted_counts(n)[n], free_counts(n)[n])


def root_degree_counts(max_n: int) -> Dict[int, Dict[int, int]]:
    """
    {n: {d: r_{n,d}}}: rooted trees of order n whose root has degree d.

    The root's children form a multiset of rooted trees; choosing c trees of
    order s from r_s classes with repetition gives comb(r_s + c - 1, c)
    options (the cycle-index substitution Z(S_c; r(x)) restricted to order s).
    """
    r = rooted_counts(max_n)
    # forest[m][d] = multisets of d rooted trees with m vertices in total
    forest: List[Dict[int, int]] = [dict() for _ in range(max_n)]
    forest[0][0] = 1
    for s in range(1, max_n):
        updated: List[Dict[int, int]] = [dict(row) for row in forest]
        for m in range(max_n):
            for d, ways in forest[m].items():
                c = 1
                while m + c * s <= max_n - 1:
                    row = updated[m + c * s]
                    row[d + c] = row.get(d + c, 0) + ways * comb(r[s] + c - 1, c)
                    c += 1
        forest = updated
    out = {n: dict(sorted(forest[n - 1].items())) for n in range(1, max_n + 1)}
    for n, row in out.items():
        if sum(row.values()) != r[n]:
            raise ExactnessError(f"root-degree table row {n} sums to {sum(row.values())}, expected r_{n}={r[n]}")
    return out


def symmetric_edge_count(n: int) -> int:
    """Free trees of order n with a symmetrical edge: one rooted half of order n/2 fixes the tree."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n % 2:
        return 0
    return rooted_counts(n // 2)[n // 2]
