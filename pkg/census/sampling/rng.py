"""
Seeded random source.

One documented generator: numpy's PCG64 seeded through SeedSequence. Stream
i of seed s is SeedSequence(s, spawn_key=(i,)), so sample i gets the same
random bits no matter which worker draws it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Tuple

import numpy as np

ALGORITHM = "numpy.PCG64/SeedSequence"
SEED_LIMIT = 1 << 64


@dataclass
class RngState:
    seed: int
    stream: Tuple[int, ...] = ()
    generator: np.random.Generator = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not 0 <= self.seed < SEED_LIMIT:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        seq = np.random.SeedSequence(self.seed, spawn_key=self.stream)
        self.generator = np.random.Generator(np.random.PCG64(seq))

    def substream(self, index: int) -> "RngState":
        return RngState(self.seed, self.stream + (index,))

    def randbelow(self, bound: int) -> int:
        """Exact uniform integer in [0, bound) for an arbitrary-size int bound."""
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        if bound < (1 << 62):
            return int(self.generator.integers(bound))
        bits = bound.bit_length()
        nbytes = (bits + 7) // 8
        excess = nbytes * 8 - bits
        while True:
            value = int.from_bytes(self.generator.bytes(nbytes), "big") >> excess
            if value < bound:
                return value
