"""
Free-tree enumeration.

Each free tree is generated once, as the level sequence of the tree rooted
at its centroid (or at one end of its central edge). A candidate rooted
sequence is split into L, the first subtree of the root, and R, the rest of
the tree with L removed. It is a valid free-tree representative iff

    height(L) <= height(R), and on equal heights
    |L| <= |R|, and on equal sizes  L <= R lexicographically.

Invalid candidates are skipped in whole blocks: the successor is forced at
the last position of L, and when that vertex sits deeper than level 3 the
tail of R is reset to the shortest path that keeps R at least as high as L.

A slow filtering route (rooted trees whose root passes is_centroid_rooting)
is kept as an oracle for tests.
"""

from __future__ import annotations

from typing import Callable, Iterator, List, Optional, Tuple

from tqdm import tqdm

from census.enumeration.level_sequences import level_sequence_to_rooted, next_level_sequence
from census.enumeration.rooted import DEFAULT_MAX_ORDER, check_order, iter_rooted
from census.trees.canonical import is_centroid_rooting
from census.trees.types import FreeTree

FreeVisitor = Callable[[FreeTree], None]


# ─── helpers ──────────────────────────────────────────────────────────────
def _split(levels: List[int]) -> Tuple[List[int], List[int]]:
    """(L, R) as level sequences with their own roots at level 1."""
    m = next((i for i in range(2, len(levels)) if levels[i] == 2), len(levels))
    left = [lv - 1 for lv in levels[1:m]]
    rest = [1] + levels[m:]
    return left, rest


def _is_valid(levels: List[int]) -> bool:
    left, rest = _split(levels)
    lh, rh = max(left), max(rest)
    if lh != rh:
        return lh < rh
    if len(left) != len(rest):
        return len(left) < len(rest)
    return left <= rest


def _jump(levels: List[int]) -> Optional[List[int]]:
    left, _ = _split(levels)
    p = len(left)
    out = next_level_sequence(levels, p)
    if out is not None and levels[p] > 3:
        new_left, _ = _split(out)
        tail = list(range(2, max(new_left) + 2))
        out[-len(tail):] = tail
    return out


def iter_free_level_sequences(n: int) -> Iterator[List[int]]:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n <= 2:
        yield list(range(1, n + 1))
        return
    # the path rooted at its center
    levels: Optional[List[int]] = list(range(1, n // 2 + 2)) + list(range(2, (n + 1) // 2 + 1))
    while levels is not None:
        while levels is not None and not _is_valid(levels):
            levels = _jump(levels)
        if levels is None:
            return
        yield levels
        levels = next_level_sequence(levels)


def iter_free(n: int, bound: int = DEFAULT_MAX_ORDER) -> Iterator[FreeTree]:
    check_order("free-tree enumeration", n, bound)
    for levels in iter_free_level_sequences(n):
        yield level_sequence_to_rooted(levels).to_free()


# ─── visitor API ──────────────────────────────────────────────────────────
def enumerate_free(
    n: int,
    visit: Optional[FreeVisitor] = None,
    *,
    bound: int = DEFAULT_MAX_ORDER,
    progress: bool = False,
) -> int:
    """
    Visit every free tree of order n exactly once; return the number visited.

    Notes:
      - Refuses n above `bound` with FeasibilityError.
      - `progress` shows a tqdm bar sized by the exact count t_n.
    """
    trees = iter_free(n, bound)
    if progress:
        from census.counting.tables import free_counts  # counting imports this package

        trees = tqdm(trees, total=free_counts(n)[n], desc=f"free n={n}", unit="tree")
    count = 0
    for t in trees:
        if visit is not None:
            visit(t)
        count += 1
    return count


def enumerate_free_by_filter(n: int, visit: Optional[FreeVisitor] = None, *, bound: int = DEFAULT_MAX_ORDER) -> int:
    """Slow oracle: keep the rooted trees whose root is the canonical free-tree root."""
    check_order("free-tree enumeration (filter route)", n, bound)
    count = 0
    for rooted in iter_rooted(n, bound):
        if is_centroid_rooting(rooted):
            if visit is not None:
                visit(rooted.to_free())
            count += 1
    return count
