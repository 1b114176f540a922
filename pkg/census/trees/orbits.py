"""
Automorphism vertex classes (orbits).

Rooted trees: u and v share a class iff the sequences of subtree ids along
their root paths (root excluded, vertex included) are equal. Free trees:
every automorphism fixes the centroid set, so the free partition is the
rooted partition at a unique centroid, or, for a bicentroid with isomorphic
halves, the half-relative partition with the two halves identified.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, Hashable, List, Literal, Optional, Sequence, Tuple

from census.trees.canonical import InternTable, centroids, intern_subtree_ids
from census.trees.types import FreeTree, RootedTree

OrbitMethod = Literal["centroid", "rootings"]


@dataclass(frozen=True)
class OrbitPartition:
    n: int
    class_of: Tuple[int, ...]
    class_count: int
    fixed_count: int

    @classmethod
    def from_keys(cls, keys: Sequence[Hashable]) -> "OrbitPartition":
        """Partition vertices by equal key; class ids follow first appearance by vertex label."""
        ids: Dict[Hashable, int] = {}
        class_of = tuple(ids.setdefault(k, len(ids)) for k in keys)
        sizes = [0] * len(ids)
        for c in class_of:
            sizes[c] += 1
        return cls(len(class_of), class_of, len(ids), sum(1 for s in sizes if s == 1))

    def classes(self) -> List[List[int]]:
        out: List[List[int]] = [[] for _ in range(self.class_count)]
        for v, c in enumerate(self.class_of):
            out[c].append(v)
        return out

    def sizes(self) -> List[int]:
        return [len(c) for c in self.classes()]

    def fixed_vertices(self) -> List[int]:
        return [members[0] for members in self.classes() if len(members) == 1]


# ─── rooted ───────────────────────────────────────────────────────────────
def orbits_rooted(t: RootedTree) -> OrbitPartition:
    table: InternTable = {}
    ids = intern_subtree_ids(t, table)
    return OrbitPartition.from_keys(_path_signatures(t, ids, {t.root: ("root",)}))


def _path_signatures(t: RootedTree, ids: Sequence[int], seeds: Dict[int, Hashable]) -> List[Hashable]:
    """
    Top-down signature per vertex: seeds give the signature of the start
    vertices; every other vertex gets (signature of parent, own subtree id),
    interned to a small int.
    """
    table: Dict[Tuple[Hashable, int], int] = {}
    sig: List[Hashable] = [None] * t.n
    for v in t.bfs_order:
        if v in seeds:
            sig[v] = seeds[v]
            continue
        key = (sig[t.parent[v]], ids[v])
        sig[v] = table.setdefault(key, len(table))
    return sig


# ─── free ─────────────────────────────────────────────────────────────────
def orbits_free(t: FreeTree, method: OrbitMethod = "centroid") -> OrbitPartition:
    """
    Orbit partition of a free tree.

    method:
      - "centroid" (default): O(n * depth) via the centroid argument above.
      - "rootings": the definition - root t at every vertex and group vertices
        by the interned id of the resulting rooted tree. O(n^2).
    """
    if method == "rootings":
        table: InternTable = {}
        return OrbitPartition.from_keys([intern_subtree_ids(t.rooted_at(v), table)[v] for v in range(t.n)])
    if method != "centroid":
        raise ValueError(f"unknown orbit method {method!r}")

    cs = centroids(t)
    rooted = t.rooted_at(cs[0])
    if len(cs) == 1:
        return orbits_rooted(rooted)

    a, b = cs
    table = {}
    ids = intern_subtree_ids(rooted, table)
    half_a = intern_subtree_ids(rooted, table, skip_child=(a, b))[a]
    if half_a != ids[b]:
        # both centroids are fixed; the rooted partition at a is the answer
        return orbits_rooted(rooted)
    half_seed = ("half",)
    return OrbitPartition.from_keys(_path_signatures(rooted, ids, {a: half_seed, b: half_seed}))


def distinct_rootings(t: FreeTree) -> int:
    """X(T): number of pairwise non-isomorphic rooted trees obtained from t."""
    return orbits_free(t).class_count


# ─── fixed vertices ───────────────────────────────────────────────────────
def fixed_vertices(t: FreeTree) -> List[int]:
    return orbits_free(t).fixed_vertices()


def fixed_set_connected(t: FreeTree, fixed: Optional[Sequence[int]] = None) -> bool:
    """True when the fixed vertices induce a connected subgraph (vacuously for an empty set)."""
    fixed = fixed_vertices(t) if fixed is None else fixed
    if not fixed:
        return True
    members = set(fixed)
    start = fixed[0]
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in t.adjacency[u]:
            if w in members and w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(members)


def symmetric_edge(t: FreeTree) -> Optional[Tuple[int, int]]:
    """The central edge whose removal leaves two isomorphic rooted halves, if any."""
    cs = centroids(t)
    if len(cs) != 2:
        return None
    a, b = cs
    rooted = t.rooted_at(a)
    table: InternTable = {}
    ids = intern_subtree_ids(rooted, table)
    if intern_subtree_ids(rooted, table, skip_child=(a, b))[a] == ids[b]:
        return a, b
    return None
