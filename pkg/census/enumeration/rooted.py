from __future__ import annotations

from typing import Callable, Iterator, Optional

from tqdm import tqdm

from census.enumeration.level_sequences import iter_level_sequences
from census.errors import FeasibilityError
from census.trees.types import RootedTree

DEFAULT_MAX_ORDER = 18

RootedVisitor = Callable[[RootedTree], None]


def check_order(what: str, n: int, bound: int) -> None:
    if n < 1:
        raise ValueError(f"{what}: n must be >= 1, got {n}")
    if n > bound:
        raise FeasibilityError(what, n, bound)


def iter_rooted(n: int, bound: int = DEFAULT_MAX_ORDER) -> Iterator[RootedTree]:
    check_order("rooted-tree enumeration", n, bound)
    for seq in iter_level_sequences(n):
        yield seq.to_rooted()


def enumerate_rooted(
    n: int,
    visit: Optional[RootedVisitor] = None,
    *,
    bound: int = DEFAULT_MAX_ORDER,
    progress: bool = False,
) -> int:
    """Visit every rooted tree of order n exactly once (root = vertex 0); return the number visited."""
    trees = iter_rooted(n, bound)
    if progress:
        from census.counting.tables import rooted_counts  # counting imports this package

        trees = tqdm(trees, total=rooted_counts(n)[n], desc=f"rooted n={n}", unit="tree")
    count = 0
    for t in trees:
        if visit is not None:
            visit(t)
        count += 1
    return count
