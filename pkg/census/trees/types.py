"""
Tree data types.

FreeTree   - unrooted tree on vertices 0..n-1, given by its n-1 edges
RootedTree - parent array over 0..n-1 with one designated root (parent -1)

Both are immutable after construction and validate their invariants in
__post_init__; anything malformed raises InvalidTreeError.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, List, Sequence, Tuple

from census.errors import InvalidTreeError

Edge = Tuple[int, int]


# ─── FreeTree ─────────────────────────────────────────────────────────────
@dataclass(frozen=True)
class FreeTree:
    n: int
    edges: Tuple[Edge, ...]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidTreeError(f"a tree needs at least one vertex, got n={self.n}")
        if len(self.edges) != self.n - 1:
            raise InvalidTreeError(f"a tree on {self.n} vertices has {self.n - 1} edges, got {len(self.edges)}")
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidTreeError(f"edge ({u}, {v}) uses a label outside 0..{self.n - 1}")
            if u == v:
                raise InvalidTreeError(f"self-loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise InvalidTreeError(f"duplicate edge ({u}, {v})")
            seen.add(key)
        # n-1 distinct edges + connected  =>  acyclic
        if len(_bfs_order(self.adjacency, 0)) != self.n:
            raise InvalidTreeError("edges do not form a connected graph")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "FreeTree":
        return cls(n, tuple((int(u), int(v)) for u, v in edges))

    @cached_property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        adj: List[List[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    def rooted_at(self, root: int) -> "RootedTree":
        """Choose `root`; vertex labels are kept."""
        if not 0 <= root < self.n:
            raise InvalidTreeError(f"root {root} outside 0..{self.n - 1}")
        parent = [-1] * self.n
        seen = [False] * self.n
        seen[root] = True
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in self.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    parent[w] = u
                    queue.append(w)
        return RootedTree(self.n, tuple(parent), root)

    def relabeled(self, perm: Sequence[int]) -> "FreeTree":
        """Apply the vertex permutation v -> perm[v]."""
        return FreeTree(self.n, tuple((perm[u], perm[v]) for u, v in self.edges))


# ─── RootedTree ───────────────────────────────────────────────────────────
@dataclass(frozen=True)
class RootedTree:
    n: int
    parent: Tuple[int, ...]
    root: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidTreeError(f"a tree needs at least one vertex, got n={self.n}")
        if len(self.parent) != self.n:
            raise InvalidTreeError(f"parent array has {len(self.parent)} entries, expected {self.n}")
        if not 0 <= self.root < self.n:
            raise InvalidTreeError(f"root {self.root} outside 0..{self.n - 1}")
        roots = [v for v, p in enumerate(self.parent) if p == -1]
        if roots != [self.root]:
            raise InvalidTreeError(f"exactly one root expected (vertex {self.root}), found {roots}")
        for v, p in enumerate(self.parent):
            if v != self.root and not 0 <= p < self.n:
                raise InvalidTreeError(f"parent of {v} is {p}, outside 0..{self.n - 1}")
            if p == v:
                raise InvalidTreeError(f"vertex {v} is its own parent")
        if len(self.bfs_order) != self.n:
            raise InvalidTreeError("parent array contains a cycle or does not reach every vertex")

    @classmethod
    def from_parents(cls, parent: Sequence[int]) -> "RootedTree":
        parent = tuple(int(p) for p in parent)
        roots = [v for v, p in enumerate(parent) if p == -1]
        if len(roots) != 1:
            raise InvalidTreeError(f"exactly one root expected, found {len(roots)}")
        return cls(len(parent), parent, roots[0])

    @cached_property
    def children(self) -> Tuple[Tuple[int, ...], ...]:
        ch: List[List[int]] = [[] for _ in range(self.n)]
        for v, p in enumerate(self.parent):
            if p >= 0:
                ch[p].append(v)
        return tuple(tuple(c) for c in ch)

    @cached_property
    def bfs_order(self) -> Tuple[int, ...]:
        order = [self.root]
        i = 0
        while i < len(order):
            order.extend(self.children[order[i]])
            i += 1
        return tuple(order)

    @cached_property
    def subtree_sizes(self) -> Tuple[int, ...]:
        size = [1] * self.n
        for v in reversed(self.bfs_order):
            p = self.parent[v]
            if p >= 0:
                size[p] += size[v]
        return tuple(size)

    def to_free(self) -> FreeTree:
        """Forget the root; vertex labels are kept."""
        return FreeTree(self.n, tuple((p, v) for v, p in enumerate(self.parent) if p >= 0))


# ─── helpers ──────────────────────────────────────────────────────────────
def _bfs_order(adjacency: Sequence[Sequence[int]], start: int) -> List[int]:
    seen = {start}
    order = [start]
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in adjacency[u]:
            if w not in seen:
                seen.add(w)
                order.append(w)
                queue.append(w)
    return order


def path_tree(n: int) -> FreeTree:
    return FreeTree(n, tuple((i, i + 1) for i in range(n - 1)))


def star_tree(n: int) -> FreeTree:
    """Center 0 joined to leaves 1..n-1."""
    return FreeTree(n, tuple((0, i) for i in range(1, n)))


def tree_from_depths(depths: Sequence[int]) -> RootedTree:
    """
    Build a rooted tree from a preorder depth sequence (root depth 0, each
    later entry at most one deeper than its predecessor). Vertex i is the
    i-th vertex in preorder; the root is 0.
    """
    parent = [-1] * len(depths)
    stack: List[int] = []
    for v, d in enumerate(depths):
        del stack[d:]
        if d > 0:
            if len(stack) != d:
                raise InvalidTreeError(f"depth sequence jumps from {len(stack) - 1} to {d} at position {v}")
            parent[v] = stack[-1]
        elif v != 0:
            raise InvalidTreeError("depth 0 may only appear at position 0")
        stack.append(v)
    return RootedTree(len(depths), tuple(parent), 0)
