"""
Uniform free trees by rejection from uniform rooted trees.

A free tree T underlies exactly X(T) rooted classes, one per vertex class.
Drawing a uniform rooted tree and keeping it with probability 1/X(T) makes
every free tree equally likely, and the expected number of rooted draws per
accepted tree is r_n / t_n.

Two ways to keep a draw with probability 1/X(T):
  - "coin":     compute X(T) and accept with a fresh 1/X(T) coin.
  - "centroid": accept iff the drawn root is the canonical root of T (the
                unique centroid, or the centroid with the larger-or-equal
                half). Exactly one of T's X(T) equally likely rooted classes
                passes. Most rejections are decided from the root's subtree
                sizes alone, before any subtree is drawn.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Dict, List, Literal, Optional, Tuple

from census.counting.tables import free_counts, rooted_counts
from census.errors import SamplerRetryError
from census.sampling.rng import RngState
from census.sampling.rooted import sampler_for
from census.trees.canonical import is_centroid_rooting
from census.trees.orbits import distinct_rootings
from census.trees.types import FreeTree, RootedTree

Acceptance = Literal["centroid", "coin"]

DEFAULT_RETRY_CAP = 1_000_000


@dataclass
class SampleReport:
    n: int
    samples: int = 1
    draws: int = 0
    rejections: int = 0
    seed: Optional[int] = None

    def merge(self, other: "SampleReport") -> None:
        self.samples += other.samples
        self.draws += other.draws
        self.rejections += other.rejections

    def to_dict(self) -> Dict[str, object]:
        return asdict(self)


def _centroid_root_ok(n: int):
    def check(picks: List[Tuple[int, int]]) -> bool:
        return all(2 * d <= n for _, d in picks)

    return check


def _draw_centroid(n: int, rng: RngState) -> Optional[RootedTree]:
    parents = sampler_for(n).parents(n, rng, root_filter=_centroid_root_ok(n))
    if parents is None:
        return None
    rooted = RootedTree(n, tuple(parents), 0)
    # a child of exactly n/2 vertices: the root must own the larger-or-equal half
    if n % 2 == 0 and not is_centroid_rooting(rooted):
        return None
    return rooted


def _draw_coin(n: int, rng: RngState) -> Optional[RootedTree]:
    rooted = sampler_for(n).sample(n, rng)
    x = distinct_rootings(rooted.to_free())
    return rooted if rng.randbelow(x) == 0 else None


def sample_free_uniform(
    n: int,
    rng: RngState,
    *,
    acceptance: Acceptance = "centroid",
    retry_cap: int = DEFAULT_RETRY_CAP,
) -> Tuple[FreeTree, SampleReport]:
    """
    Behavior:
      - Repeats uniform rooted draws until one is accepted; the report counts
        every draw and every rejection.
      - Reaching `retry_cap` draws raises SamplerRetryError; with the expected
        r_n / t_n draws per tree that means a bug, not bad luck.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if acceptance == "centroid":
        draw = _draw_centroid
    elif acceptance == "coin":
        draw = _draw_coin
    else:
        raise ValueError(f"unknown acceptance mode {acceptance!r}")

    report = SampleReport(n, seed=rng.seed)
    while report.draws < retry_cap:
        report.draws += 1
        rooted = draw(n, rng)
        if rooted is not None:
            return rooted.to_free(), report
        report.rejections += 1
    raise SamplerRetryError(
        f"free sampler made {retry_cap} rooted draws at n={n} without an acceptance "
        f"(expected {float(Fraction(rooted_counts(n)[n], free_counts(n)[n])):.2f} per tree)"
    )


def acceptance_rate_prediction(n: int) -> Fraction:
    """t_n / r_n: the probability that one rooted draw is accepted."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return Fraction(free_counts(n)[n], rooted_counts(n)[n])
