"""
Brute-force occurrence oracle: list every connected vertex subset of the
host with |M| vertices, then look for a degree-respecting isomorphism from M
onto the subtree it induces. Exponential, hence the bounds.
"""

from __future__ import annotations

from typing import Iterator, List, Set

from census.errors import FeasibilityError
from census.patterns.pattern import Pattern
from census.trees.types import FreeTree

DEFAULT_MAX_TREE = 20
DEFAULT_MAX_PATTERN = 8


def connected_subsets(t: FreeTree, size: int) -> Iterator[frozenset]:
    """
    Every connected vertex subset of the given size, once each. Subsets are
    grown from their smallest vertex v; a vertex joins the extension set only
    when it is larger than v and not adjacent to anything already chosen.
    """
    adjacency = t.adjacency

    def grow(chosen: List[int], frontier: Set[int], extension: List[int], v: int):
        if len(chosen) == size:
            yield frozenset(chosen)
            return
        extension = list(extension)
        while extension:
            w = extension.pop()
            closed = frontier | {w}
            added = [u for u in adjacency[w] if u > v and u not in frontier and u not in chosen]
            yield from grow(chosen + [w], closed | set(added), extension + added, v)

    for v in range(t.n):
        yield from grow([v], {v} | {u for u in adjacency[v]}, [u for u in adjacency[v] if u > v], v)


def _matches(t: FreeTree, m: Pattern, subset: frozenset) -> bool:
    shape = m.shape
    rooted = shape.rooted_at(0)
    order, parent = rooted.bfs_order, rooted.parent
    image = [-1] * shape.n
    used: Set[int] = set()

    def ok(p: int, v: int) -> bool:
        if v in used:
            return False
        d = shape.degrees[p]
        return d < 2 or t.degrees[v] == d

    def assign(i: int) -> bool:
        if i == len(order):
            return True
        p = order[i]
        candidates = subset if i == 0 else [w for w in t.adjacency[image[parent[p]]] if w in subset]
        for v in candidates:
            if ok(p, v):
                image[p] = v
                used.add(v)
                if assign(i + 1):
                    return True
                used.discard(v)
        return False

    return assign(0)


def count_pattern_oracle(
    t: FreeTree,
    m: Pattern,
    *,
    max_tree: int = DEFAULT_MAX_TREE,
    max_pattern: int = DEFAULT_MAX_PATTERN,
) -> int:
    if t.n > max_tree:
        raise FeasibilityError("pattern oracle host size", t.n, max_tree)
    if m.m > max_pattern:
        raise FeasibilityError("pattern oracle pattern size", m.m, max_pattern)
    if m.m > t.n:
        return 0
    return sum(1 for subset in connected_subsets(t, m.m) if _matches(t, m, subset))
