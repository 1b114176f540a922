"""
Automorphism group sizes.

|Aut(R)| for a rooted tree is the product, over vertices, of m! for every
multiplicity m of identical child subtrees. A free tree is measured at its
centroid; a bicentroid with isomorphic halves contributes the extra swap.
"""

from __future__ import annotations

from collections import Counter
from math import factorial

from census.trees.canonical import InternTable, centroids, intern_subtree_ids
from census.trees.types import FreeTree, RootedTree


def _rooted_size(t: RootedTree, ids) -> int:
    size = 1
    for v in range(t.n):
        for mult in Counter(ids[c] for c in t.children[v]).values():
            size *= factorial(mult)
    return size


def aut_size_rooted(t: RootedTree) -> int:
    table: InternTable = {}
    return _rooted_size(t, intern_subtree_ids(t, table))


def aut_size_free(t: FreeTree) -> int:
    cs = centroids(t)
    rooted = t.rooted_at(cs[0])
    table: InternTable = {}
    ids = intern_subtree_ids(rooted, table)
    size = _rooted_size(rooted, ids)
    if len(cs) == 2:
        a, b = cs
        if intern_subtree_ids(rooted, table, skip_child=(a, b))[a] == ids[b]:
            size *= 2
    return size
