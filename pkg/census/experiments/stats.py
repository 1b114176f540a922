"""
Sample statistics and normality diagnostics.

  variance        unbiased, divisor count - 1
  skewness        adjusted Fisher-Pearson G1      (scipy.stats.skew, bias=False)
  excess kurtosis adjusted G2                     (scipy.stats.kurtosis, bias=False)
  ks_distance     sup |F_n - Phi| of the standardized sample (scipy.stats.kstest);
                  lattice samples compare F_n(v) with Phi at v + step/2
  histogram       numpy "auto" bins (max of Sturges and Freedman-Diaconis)

Moments that are undefined (constant samples, fewer than 4 values for the
kurtosis) are reported as None and the sample is flagged degenerate when its
variance is zero.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional, Sequence

import numpy as np
from scipy import stats as sp_stats

from census.sampling.rng import RngState
from census.utils.config import NormalityThresholds

BIN_RULE = "auto"


@dataclass(frozen=True)
class SampleStats:
    count: int
    mean: float
    variance: float
    std_error: float
    skewness: Optional[float]
    excess_kurtosis: Optional[float]
    minimum: float
    maximum: float
    histogram_counts: List[int] = field(default_factory=list)
    histogram_edges: List[float] = field(default_factory=list)
    bin_rule: str = BIN_RULE
    ks_distance: Optional[float] = None
    ks_step: Optional[float] = None
    degenerate: bool = False

    def to_dict(self) -> Dict[str, object]:
        return asdict(self)


def standardize(values: Sequence[float]) -> np.ndarray:
    """(x - mean) / std with the unbiased std; a constant sample maps to zeros."""
    x = np.asarray(values, dtype=float)
    if x.size < 2:
        return np.zeros_like(x)
    sd = x.std(ddof=1)
    if sd == 0:
        return np.zeros_like(x)
    return (x - x.mean()) / sd


def _lattice_ks(x: np.ndarray, step: float) -> float:
    """
    Both one-sided limits of the ECDF at every observed value v: F_n(v) against
    Phi at v + step/2, and F_n just below v against Phi at v - step/2. Unobserved
    lattice values between two observed ones are covered by the second check.
    """
    values, counts = np.unique(x, return_counts=True)
    ecdf = np.cumsum(counts) / x.size
    left = np.concatenate(([0.0], ecdf[:-1]))
    mean, sd = x.mean(), x.std(ddof=1)
    upper = sp_stats.norm.cdf((values + step / 2 - mean) / sd)
    lower = sp_stats.norm.cdf((values - step / 2 - mean) / sd)
    return float(max(np.max(np.abs(ecdf - upper)), np.max(np.abs(left - lower))))


def describe(values: Sequence[float], step: Optional[float] = None) -> SampleStats:
    """`step` is the lattice spacing of a discrete sample (1 for counts), used by the KS distance."""
    x = np.asarray(values, dtype=float)
    if x.size == 0:
        raise ValueError("cannot describe an empty sample")
    count = int(x.size)
    mean = float(x.mean())
    variance = float(x.var(ddof=1)) if count > 1 else 0.0
    degenerate = variance == 0.0

    skewness = kurt = ks = None
    if not degenerate:
        if count >= 3:
            skewness = float(sp_stats.skew(x, bias=False))
        if count >= 4:
            kurt = float(sp_stats.kurtosis(x, fisher=True, bias=False))
        if step is None:
            ks = float(sp_stats.kstest(standardize(x), "norm").statistic)
        else:
            ks = _lattice_ks(x, step)

    if degenerate:
        counts, edges = np.histogram(x, bins=1, range=(mean - 0.5, mean + 0.5))
    else:
        counts, edges = np.histogram(x, bins=BIN_RULE)

    return SampleStats(
        count=count,
        mean=mean,
        variance=variance,
        std_error=math.sqrt(variance / count),
        skewness=skewness,
        excess_kurtosis=kurt,
        minimum=float(x.min()),
        maximum=float(x.max()),
        histogram_counts=[int(c) for c in counts],
        histogram_edges=[float(e) for e in edges],
        ks_distance=ks,
        ks_step=step,
        degenerate=degenerate,
    )


# ─── normality ────────────────────────────────────────────────────────────
def normality_check(stats: SampleStats, thresholds: NormalityThresholds = NormalityThresholds()) -> Dict[str, bool]:
    """
    Per-diagnostic verdicts plus "passed". A degenerate sample has no
    shape to test and fails every diagnostic.
    """

    def within(value: Optional[float], limit: float) -> bool:
        return value is not None and abs(value) <= limit

    verdict = {
        "skewness": within(stats.skewness, thresholds.skewness),
        "excess_kurtosis": within(stats.excess_kurtosis, thresholds.excess_kurtosis),
        "ks": within(stats.ks_distance, thresholds.ks),
    }
    verdict["passed"] = all(verdict.values())
    return verdict


def exponential_control(count: int, rng: RngState) -> np.ndarray:
    """A clearly non-normal control sample (unit exponential) for the same diagnostics."""
    return rng.generator.exponential(1.0, size=count)


def binomial_interval(successes: int, trials: int, confidence: float = 0.95) -> Dict[str, float]:
    """Wilson score interval for a binomial proportion."""
    ci = sp_stats.binomtest(successes, trials).proportion_ci(confidence_level=confidence, method="wilson")
    return {"low": float(ci.low), "high": float(ci.high), "confidence": confidence}
