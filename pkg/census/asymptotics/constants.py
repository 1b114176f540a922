"""
Numeric tree constants.

    x0    radius of convergence of r(x); r(x0) = 1
    b1    r(x) = 1 - b1 (x0 - x)^(1/2) + ...
    C, D  t_n ~ C x0^-n n^-5/2,   r_n ~ D x0^-n n^-3/2
    mu_r  E[X_n] / n -> mu_r, where E[X_n] = r_n / t_n

x0 solves x exp(1 + E(x)) = 1 (the functional equation with its
y-derivative set to 1). b1 follows from the square-root expansion of the
same equation: b1 = sqrt(2 (1 + x0 E'(x0)) / x0), and transfers to
D = b1 sqrt(x0) / (2 sqrt(pi)). C, D and mu_r are also extrapolated from the
exact counts; big ints enter float arithmetic only through their logarithms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple

from scipy.optimize import brentq

from census.asymptotics.richardson import Estimate, extrapolate
from census.asymptotics.series import MIN_TRUNCATION, SeriesTruncation
from census.counting.tables import free_counts, rooted_counts
from census.errors import ConvergenceError
from census.utils.config import AsymptoticSettings

BRACKET = (0.30, 0.36)
DEFAULT_TOL = 1e-13


def singularity_gap(series: SeriesTruncation, x: float) -> float:
    """g(x) = x exp(1 + E(x)) - 1; negative below x0, positive above."""
    return x * math.exp(1.0 + series.tail(x)) - 1.0


def _root(series: SeriesTruncation, tol: float) -> float:
    lo, hi = BRACKET
    g_lo, g_hi = singularity_gap(series, lo), singularity_gap(series, hi)
    if g_lo * g_hi > 0:
        raise ConvergenceError(f"no sign change of x*exp(1+E(x))-1 on {BRACKET}: g={g_lo:.3e}, {g_hi:.3e}")
    try:
        x0 = brentq(lambda x: singularity_gap(series, x), lo, hi, xtol=tol * 1e-3, maxiter=200)
    except RuntimeError as e:
        raise ConvergenceError(f"root search on {BRACKET} did not converge: {e}") from e
    gap = abs(singularity_gap(series, x0))
    if gap > tol:
        raise ConvergenceError(f"root search stopped at x={x0!r} with |g| = {gap:.3e} > {tol:.1e}")
    return x0


def _check_truncation(n: int) -> None:
    if n < MIN_TRUNCATION:
        raise ValueError(f"truncation order must be >= {MIN_TRUNCATION}, got {n}")


# ─── x0, b1 ───────────────────────────────────────────────────────────────
def solve_singularity(truncation: int, tol: float = DEFAULT_TOL) -> Estimate:
    """
    Behavior:
      - Brent's method (bisection + secant/inverse interpolation) on the
        bracket (0.30, 0.36); no sign change raises ConvergenceError.
      - The error is the shift against half the truncation order plus the
        solver tolerance.
    """
    _check_truncation(truncation)
    x0 = _root(SeriesTruncation.build(truncation), tol)
    coarse = _root(SeriesTruncation.build(truncation // 2), tol)
    return Estimate(x0, abs(x0 - coarse) + tol, "root of x*exp(1+E(x))=1 (brentq)")


def _b1(series: SeriesTruncation, x0: float) -> float:
    return math.sqrt(2.0 * (1.0 + x0 * series.tail_prime(x0)) / x0)


def compute_b1(truncation: int, x0: float) -> Estimate:
    _check_truncation(truncation)
    b1 = _b1(SeriesTruncation.build(truncation), x0)
    coarse = _b1(SeriesTruncation.build(truncation // 2), x0)
    return Estimate(b1, abs(b1 - coarse), "sqrt(2(1+x0 E'(x0))/x0)")


def d_from_b1(b1: Estimate, x0: Estimate) -> Estimate:
    value = b1.value * math.sqrt(x0.value) / (2.0 * math.sqrt(math.pi))
    rel = b1.error / b1.value + 0.5 * x0.error / x0.value
    return Estimate(value, value * rel, "b1*sqrt(x0)/(2 sqrt(pi))")


# ─── C, D, mu_r by extrapolation ──────────────────────────────────────────
def extrapolate_C_D(max_n: int, x0: float, depth: int = 3) -> Tuple[Estimate, Estimate]:
    """
    Richardson limits of t_n n^(5/2) x0^n and r_n n^(3/2) x0^n, ending at
    max_n. Terms are computed as exp(log count + ... + n log x0).
    """
    if max_n < MIN_TRUNCATION:
        raise ValueError(f"max_n must be >= {MIN_TRUNCATION}, got {max_n}")
    r, t = rooted_counts(max_n), free_counts(max_n)
    log_x0 = math.log(x0)

    def scaled(count: int, n: int, power: float) -> float:
        return math.exp(math.log(count) + power * math.log(n) + n * log_x0)

    c = extrapolate(lambda n: scaled(t[n], n, 2.5), max_n, depth, f"richardson depth {depth} of t_n n^5/2 x0^n")
    d = extrapolate(lambda n: scaled(r[n], n, 1.5), max_n, depth, f"richardson depth {depth} of r_n n^3/2 x0^n")
    return c, d


def estimate_mu_r(
    max_n: int,
    depth: int = 3,
    C: Optional[Estimate] = None,
    D: Optional[Estimate] = None,
) -> Tuple[Estimate, Optional[Estimate]]:
    """
    (headline, ratio) estimates of mu_r.

    headline: Richardson limit of the exact ratios r_n / (n t_n) = E[X_n] / n.
    ratio:    D / C, when both are given (None otherwise).
    """
    r, t = rooted_counts(max_n), free_counts(max_n)
    headline = extrapolate(
        lambda n: float(Fraction(r[n], n * t[n])), max_n, depth, f"richardson depth {depth} of r_n/(n t_n)"
    )
    if C is None or D is None:
        return headline, None
    value = D.value / C.value
    ratio = Estimate(value, value * (C.error / C.value + D.error / D.value), "D/C")
    return headline, ratio


# ─── bundle ───────────────────────────────────────────────────────────────
@dataclass(frozen=True)
class AsymptoticConstants:
    x0: Estimate
    b1: Estimate
    C: Estimate
    D: Estimate
    mu_r: Estimate
    D_from_b1: Estimate
    mu_r_ratio: Estimate
    truncation: int
    max_n: int

    def to_dict(self) -> Dict[str, object]:
        out: Dict[str, object] = {
            name: getattr(self, name).to_dict()
            for name in ("x0", "b1", "C", "D", "mu_r", "D_from_b1", "mu_r_ratio")
        }
        out["truncation"] = self.truncation
        out["max_n"] = self.max_n
        return out


def compute_constants(settings: AsymptoticSettings = AsymptoticSettings()) -> AsymptoticConstants:
    x0 = solve_singularity(settings.truncation, settings.tol)
    b1 = compute_b1(settings.truncation, x0.value)
    C, D = extrapolate_C_D(settings.max_n, x0.value, settings.richardson_depth)
    mu, ratio = estimate_mu_r(settings.max_n, settings.richardson_depth, C, D)
    return AsymptoticConstants(
        x0=x0,
        b1=b1,
        C=C,
        D=D,
        mu_r=mu,
        D_from_b1=d_from_b1(b1, x0),
        mu_r_ratio=ratio,
        truncation=settings.truncation,
        max_n=settings.max_n,
    )
