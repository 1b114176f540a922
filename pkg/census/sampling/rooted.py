"""
Uniform rooted trees by the recursive method.

A rooted tree of order N is a root plus a forest of order N-1. Counting
forests by the recurrence (N-1) r_N = sum_{j=1}^{N-1} s_j r_{N-j}, with
s_j = sum_{d | j} d r_d, splits them by a first block of j vertices made of
j/d identical copies of one tree of order d:

    P(j, d) = d * r_d * r_{N-j} / ((N-1) * r_N)

The rest of the forest is again a forest of order N-1-j. Picks go in
increasing j, then increasing d, and are found by bisection in cumulative
weight tables, so one pick costs O(log N).
"""

from __future__ import annotations

from bisect import bisect_right
from functools import lru_cache
from itertools import accumulate
from typing import Callable, Dict, List, Optional, Tuple

from census.counting.tables import rooted_counts
from census.sampling.rng import RngState
from census.trees.types import RootedTree

# (j, d) picks at one vertex; return False to abandon the draw
RootFilter = Callable[[List[Tuple[int, int]]], bool]


class RootedSampler:
    """Weight tables for every order up to max_n; immutable once built."""

    def __init__(self, max_n: int):
        if max_n < 1:
            raise ValueError(f"max_n must be >= 1, got {max_n}")
        self.max_n = max_n
        self.r = (0,) + rooted_counts(max_n).values
        self._divisors: List[List[int]] = [[] for _ in range(max_n + 1)]
        for d in range(1, max_n + 1):
            for multiple in range(d, max_n + 1, d):
                self._divisors[multiple].append(d)
        # per j: cumulative d * r_d over the divisors of j (increasing d)
        self._divisor_cum = [list(accumulate(d * self.r[d] for d in self._divisors[j])) for j in range(max_n + 1)]
        self.s = [cum[-1] if cum else 0 for cum in self._divisor_cum]
        self._block_cum: Dict[int, List[int]] = {}

    def _blocks(self, size: int) -> List[int]:
        """Cumulative s_j * r_{size-j} for j = 1..size-1."""
        cum = self._block_cum.get(size)
        if cum is None:
            cum = list(accumulate(self.s[j] * self.r[size - j] for j in range(1, size)))
            self._block_cum[size] = cum
        return cum

    def pick(self, size: int, rng: RngState) -> Tuple[int, int]:
        """One (j, d) pick for the forest under a vertex whose subtree has `size` vertices."""
        cum = self._blocks(size)
        u = rng.randbelow(cum[-1])
        idx = bisect_right(cum, u)
        j = idx + 1
        u -= cum[idx - 1] if idx else 0
        v = u // self.r[size - j]
        d = self._divisors[j][bisect_right(self._divisor_cum[j], v)]
        return j, d

    def root_picks(self, size: int, rng: RngState) -> List[Tuple[int, int]]:
        picks = []
        remaining = size
        while remaining > 1:
            j, d = self.pick(remaining, rng)
            picks.append((j, d))
            remaining -= j
        return picks

    def parents(self, size: int, rng: RngState, root_filter: Optional[RootFilter] = None) -> Optional[List[int]]:
        """
        Local parent list (root 0, parent -1) of a uniform rooted tree of
        order `size`, or None when `root_filter` rejects the root's picks.
        """
        picks = self.root_picks(size, rng)
        if root_filter is not None and not root_filter(picks):
            return None
        parent = [-1]
        for j, d in picks:
            block = self.parents(d, rng)
            for _ in range(j // d):
                offset = len(parent)
                parent.extend(offset + p if p >= 0 else 0 for p in block)
        return parent

    def sample(self, size: int, rng: RngState) -> RootedTree:
        if not 1 <= size <= self.max_n:
            raise ValueError(f"order {size} outside 1..{self.max_n}")
        return RootedTree(size, tuple(self.parents(size, rng)), 0)


@lru_cache(maxsize=16)
def sampler_for(n: int) -> RootedSampler:
    return RootedSampler(n)


def sample_rooted_uniform(n: int, rng: RngState) -> RootedTree:
    """Every rooted tree class of order n has probability exactly 1/r_n."""
    return sampler_for(n).sample(n, rng)
