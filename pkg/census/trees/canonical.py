"""
Canonical forms (AHU style).

Two encodings live here:

* CanonicalCode - the canonical preorder depth sequence of a rooted tree,
  children visited in decreasing order of their own sequences. It is the
  lexicographically largest depth sequence among all orderings, depends only
  on the isomorphism class, and compares across different trees. Children
  are ordered by per-level AHU ranks and only the root's sequence is built.

* interned subtree ids - per-vertex integers assigned bottom-up from the
  sorted tuple of child ids through a shared table. Equal ids <=> isomorphic
  subtrees, as long as every tree involved used the same table. Used by the
  orbit / automorphism code where only equality matters.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from census.trees.types import FreeTree, RootedTree

InternTable = Dict[Tuple[int, ...], int]


@dataclass(frozen=True, order=True)
class CanonicalCode:
    code: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.code)

    def to_hex(self) -> str:
        """
        Hex rendering of the balanced-parenthesis bit string of the depth
        sequence (1 = step down, 0 = step up), prefixed by a sentinel 1 bit.
        """
        bits = [1]
        prev = -1
        for d in self.code:
            bits.extend([0] * (prev - d + 1))
            bits.append(1)
            prev = d
        bits.extend([0] * (prev + 1))
        return format(int("".join(map(str, bits)), 2), "x")


# ─── depth-sequence codes ─────────────────────────────────────────────────
def subtree_ranks(t: RootedTree, skip_child: Optional[Tuple[int, int]] = None) -> List[int]:
    """
    AHU ranks, assigned level by level from the deepest level up.

    A vertex's key is the descending tuple of its children's ranks; the keys
    of one level are sorted and numbered. Within a level, rank order is the
    order of the subtrees' canonical depth sequences, so sorting children by
    rank sorts them by code without building any code.

    skip_child=(p, c) drops the edge p->c.
    """
    depth = [0] * t.n
    levels: List[List[int]] = [[t.root]]
    for v in t.bfs_order[1:]:
        depth[v] = depth[t.parent[v]] + 1
        if depth[v] == len(levels):
            levels.append([])
        levels[depth[v]].append(v)

    rank = [0] * t.n
    for level in reversed(levels):
        keys = {
            v: tuple(sorted((rank[c] for c in t.children[v] if skip_child != (v, c)), reverse=True))
            for v in level
        }
        numbering = {key: i for i, key in enumerate(sorted(set(keys.values())))}
        for v, key in keys.items():
            rank[v] = numbering[key]
    return rank


def emit_code(
    t: RootedTree,
    top: int,
    rank: Sequence[int],
    skip_child: Optional[Tuple[int, int]] = None,
) -> Tuple[int, ...]:
    """Canonical depth sequence of the subtree at `top`, in one preorder pass."""
    code: List[int] = []
    stack = [(top, 0)]
    while stack:
        v, d = stack.pop()
        code.append(d)
        kids = [c for c in t.children[v] if skip_child != (v, c)]
        kids.sort(key=rank.__getitem__)
        stack.extend((c, d + 1) for c in kids)
    return tuple(code)


def canonical_rooted_code(t: RootedTree) -> CanonicalCode:
    return CanonicalCode(emit_code(t, t.root, subtree_ranks(t)))


# ─── interned ids ─────────────────────────────────────────────────────────
def intern_subtree_ids(t: RootedTree, table: InternTable, skip_child: Optional[Tuple[int, int]] = None) -> List[int]:
    """Interned id of every subtree of `t` (see module docstring)."""
    ids = [0] * t.n
    for v in reversed(t.bfs_order):
        key = tuple(sorted(ids[c] for c in t.children[v] if skip_child != (v, c)))
        ids[v] = table.setdefault(key, len(table))
    return ids


# ─── centroids ────────────────────────────────────────────────────────────
def centroids(t: FreeTree) -> Tuple[int, ...]:
    """
    The one or two vertices minimising the largest component left after
    their removal. Two centroids are always adjacent and each side of the
    edge between them holds exactly n/2 vertices.
    """
    if t.n == 1:
        return (0,)
    rooted = t.rooted_at(0)
    size = rooted.subtree_sizes
    best = t.n
    found: List[int] = []
    for v in range(t.n):
        heaviest = t.n - size[v]
        for c in rooted.children[v]:
            heaviest = max(heaviest, size[c])
        if heaviest < best:
            best, found = heaviest, [v]
        elif heaviest == best:
            found.append(v)
    return tuple(sorted(found))


def split_halves(t: FreeTree, a: int, b: int) -> Tuple[RootedTree, RootedTree]:
    """
    Remove edge (a, b) and return the two components as rooted trees (rooted
    at a and at b, relabeled 0..k-1 in BFS order with the root first).
    """
    return _component(t, a, b), _component(t, b, a)


def _component(t: FreeTree, root: int, blocked: int) -> RootedTree:
    order = [root]
    local = {root: 0}
    parent = [-1]
    i = 0
    while i < len(order):
        u = order[i]
        for w in t.adjacency[u]:
            if w not in local and not (u == root and w == blocked):
                local[w] = len(order)
                order.append(w)
                parent.append(local[u])
        i += 1
    return RootedTree(len(order), tuple(parent), 0)


def canonical_free_code(t: FreeTree) -> CanonicalCode:
    """
    Canonical code of a free tree.

    - One centroid c: the rooted code of t rooted at c (length n).
    - Two centroids a-b: the code of the tree rooted at a virtual midpoint of
      edge a-b whose two children are the halves, larger half first
      (length n+1, so it never collides with a one-centroid code).
    """
    cs = centroids(t)
    if len(cs) == 1:
        return canonical_rooted_code(t.rooted_at(cs[0]))
    half_a, half_b = split_halves(t, cs[0], cs[1])
    first, second = sorted((canonical_rooted_code(half_a).code, canonical_rooted_code(half_b).code), reverse=True)
    return CanonicalCode((0,) + tuple(d + 1 for d in first) + tuple(d + 1 for d in second))


def is_centroid_rooting(t: RootedTree) -> bool:
    """
    True when t's root is the canonical root of the underlying free tree:
    the unique centroid, or for a bicentroid the centroid whose own half has
    the larger-or-equal code. Every free tree has exactly one rooted class
    that passes.
    """
    size = t.subtree_sizes
    heavy = max(t.children[t.root], key=lambda c: size[c], default=None)
    if heavy is None or 2 * size[heavy] < t.n:
        return True
    if 2 * size[heavy] > t.n:
        return False
    cut = (t.root, heavy)
    rank = subtree_ranks(t, skip_child=cut)
    return emit_code(t, t.root, rank, skip_child=cut) >= emit_code(t, heavy, rank)
