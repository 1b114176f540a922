"""
Brute-force automorphism oracle.

Enumerates every automorphism by backtracking over vertex bijections in BFS
order: each vertex must land on an unused neighbour of its BFS parent's image
with the same degree. A bijection that preserves the n-1 tree edges is an
automorphism. Exponential in the worst case, hence the size bound.
"""

from __future__ import annotations

from typing import Iterator, List, Sequence, Union

from census.errors import FeasibilityError
from census.trees.orbits import OrbitPartition
from census.trees.types import FreeTree, RootedTree

DEFAULT_ORACLE_BOUND = 10

AnyTree = Union[FreeTree, RootedTree]


def _shape(t: AnyTree):
    """(adjacency, BFS order, BFS parent, pinned start image or None)."""
    free = t if isinstance(t, FreeTree) else t.to_free()
    start = t.root if isinstance(t, RootedTree) else 0
    rooted = free.rooted_at(start)
    return free.adjacency, rooted.bfs_order, rooted.parent, (start if isinstance(t, RootedTree) else None)


def iter_automorphisms(t: AnyTree, bound: int = DEFAULT_ORACLE_BOUND) -> Iterator[List[int]]:
    """
    Yield every automorphism of `t` as a list image[v]. For a RootedTree only
    root-fixing automorphisms are produced.
    """
    if t.n > bound:
        raise FeasibilityError("brute-force automorphism oracle", t.n, bound)
    adjacency, order, bfs_parent, pinned = _shape(t)
    degree = [len(a) for a in adjacency]
    image = [-1] * t.n
    used = [False] * t.n

    def extend(i: int) -> Iterator[List[int]]:
        if i == t.n:
            yield list(image)
            return
        v = order[i]
        if i == 0:
            candidates: Sequence[int] = [pinned] if pinned is not None else range(t.n)
        else:
            candidates = adjacency[image[bfs_parent[v]]]
        for w in candidates:
            if used[w] or degree[w] != degree[v]:
                continue
            image[v], used[w] = w, True
            yield from extend(i + 1)
            image[v], used[w] = -1, False

    yield from extend(0)


def brute_force_aut_count(t: AnyTree, bound: int = DEFAULT_ORACLE_BOUND) -> int:
    return sum(1 for _ in iter_automorphisms(t, bound))


def brute_force_orbits(t: AnyTree, bound: int = DEFAULT_ORACLE_BOUND) -> OrbitPartition:
    """Ground-truth orbit partition: union every v with all of its automorphic images."""
    root = list(range(t.n))

    def find(x: int) -> int:
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    for image in iter_automorphisms(t, bound):
        for v, w in enumerate(image):
            rv, rw = find(v), find(w)
            if rv != rw:
                root[max(rv, rw)] = min(rv, rw)
    return OrbitPartition.from_keys([find(v) for v in range(t.n)])
