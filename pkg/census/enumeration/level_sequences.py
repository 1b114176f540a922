"""
Canonical level sequences.

A rooted tree on n vertices is written as the levels of its vertices in
preorder (root level 1), children visited in decreasing order of their own
sequences. The canonical sequence is the lexicographically largest among all
preorders of the tree, so sequences and isomorphism classes are in bijection.

Successor (constant amortized time): with p the last position whose level
exceeds 2 and q the last position before p one level higher up, the suffix
from p onwards is overwritten by repeating the block that starts at q.
Generation starts at the path 1, 2, ..., n and ends at the star 1, 2, ..., 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from census.errors import InvalidTreeError
from census.trees.types import RootedTree, tree_from_depths


@dataclass(frozen=True)
class LevelSequence:
    levels: Tuple[int, ...]

    def __post_init__(self):
        if not self.levels or self.levels[0] != 1:
            raise InvalidTreeError("a level sequence starts with the root at level 1")
        for i in range(1, len(self.levels)):
            if not 2 <= self.levels[i] <= self.levels[i - 1] + 1:
                raise InvalidTreeError(f"level {self.levels[i]} at position {i} breaks the preorder rule")

    def __len__(self) -> int:
        return len(self.levels)

    def to_rooted(self) -> RootedTree:
        return level_sequence_to_rooted(self.levels)


def level_sequence_to_rooted(levels: Sequence[int]) -> RootedTree:
    """Vertex i is the i-th vertex in preorder; the root is 0."""
    return tree_from_depths([lv - 1 for lv in levels])


def next_level_sequence(levels: List[int], p: Optional[int] = None) -> Optional[List[int]]:
    """
    Successor of `levels` in decreasing lexicographic order, or None after the
    star. `p` forces the position to rewrite from (used by the free-tree
    generator to jump over a whole block of invalid candidates).
    """
    if p is None:
        p = len(levels) - 1
        while p > 0 and levels[p] <= 2:
            p -= 1
    if p <= 0:
        return None
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    out = list(levels)
    shift = p - q
    for i in range(p, len(out)):
        out[i] = out[i - shift]
    return out


def iter_level_sequences(n: int) -> Iterator[LevelSequence]:
    """Every canonical level sequence of order n, from the path down to the star."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    levels: Optional[List[int]] = list(range(1, n + 1))
    while levels is not None:
        yield LevelSequence(tuple(levels))
        levels = next_level_sequence(levels)
