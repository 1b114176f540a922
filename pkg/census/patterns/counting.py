"""
Pattern occurrence counting.

An occurrence of pattern M in tree T is a vertex subset S of T inducing a
copy of M such that every internal pattern vertex sits on a vertex of T with
the same full degree. Occurrences are counted as distinct subsets:

    occurrences = embeddings(M -> T) / |Aut(M)|

Embeddings are found by backtracking from a centroid of M, mapping pattern
vertices in BFS order onto unused neighbours of their parent's image. In a
tree every injective edge-preserving map from a tree is an induced copy, so
no further checks are needed.
"""

from __future__ import annotations

from typing import List

from census.errors import ExactnessError
from census.patterns.pattern import Pattern, PatternCount
from census.trees.automorphisms import aut_size_free
from census.trees.canonical import centroids
from census.trees.types import FreeTree, RootedTree


def _pattern_plan(m: Pattern):
    """BFS order of the pattern from a centroid, parents, and required host degrees (0 = any)."""
    rooted = m.shape.rooted_at(centroids(m.shape)[0])
    order = rooted.bfs_order
    required = [d if d >= 2 else 0 for d in m.shape.degrees]
    return order, rooted.parent, required


def count_embeddings(t: FreeTree, m: Pattern) -> int:
    if m.m > t.n:
        return 0
    order, parent, required = _pattern_plan(m)
    adjacency = t.adjacency
    degree = t.degrees
    image = [-1] * m.m
    used = [False] * t.n

    def fits(p: int, v: int) -> bool:
        return not used[v] and (required[p] == 0 or degree[v] == required[p])

    def extend(i: int) -> int:
        if i == len(order):
            return 1
        p = order[i]
        total = 0
        for v in adjacency[image[parent[p]]]:
            if fits(p, v):
                image[p] = v
                used[v] = True
                total += extend(i + 1)
                used[v] = False
        return total

    anchor = order[0]
    total = 0
    for v in range(t.n):
        if fits(anchor, v):
            image[anchor] = v
            used[v] = True
            total += extend(1)
            used[v] = False
    return total


def count_pattern(t: FreeTree, m: Pattern) -> int:
    embeddings = count_embeddings(t, m)
    aut = aut_size_free(m.shape)
    occurrences, rem = divmod(embeddings, aut)
    if rem:
        raise ExactnessError(f"{embeddings} embeddings of {m.name} are not a multiple of |Aut| = {aut}")
    return occurrences


def count_pattern_rooted(t: RootedTree, m: Pattern) -> int:
    """Occurrences ignore the root: X_M(R) = X_M(T) for the underlying free tree."""
    return count_pattern(t.to_free(), m)


def pattern_count(t: FreeTree, m: Pattern) -> PatternCount:
    return PatternCount(t.n, m.name, count_pattern(t, m))


# ─── closed forms ─────────────────────────────────────────────────────────
def count_star_pattern(t: FreeTree, d: int) -> int:
    """Occurrences of the star with center degree d: vertices of degree exactly d."""
    if d < 2:
        raise ValueError(f"star patterns need d >= 2, got {d}")
    return sum(1 for deg in t.degrees if deg == d)


def degree_two_runs(t: FreeTree) -> List[int]:
    """Sizes of the maximal paths made of degree-2 vertices."""
    degree = t.degrees
    seen = [False] * t.n
    runs: List[int] = []
    for start in range(t.n):
        if degree[start] != 2 or seen[start]:
            continue
        seen[start] = True
        stack = [start]
        size = 0
        while stack:
            u = stack.pop()
            size += 1
            for w in t.adjacency[u]:
                if degree[w] == 2 and not seen[w]:
                    seen[w] = True
                    stack.append(w)
        runs.append(size)
    return runs


def count_path_pattern(t: FreeTree, k: int) -> int:
    """
    Occurrences of the k-vertex path: its k-2 inner vertices must be a window
    of consecutive degree-2 vertices, and a run of L such vertices holds
    max(0, L - k + 3) windows.
    """
    if k < 2:
        raise ValueError(f"path patterns need k >= 2 vertices, got {k}")
    if k == 2:
        return t.n - 1
    return sum(max(0, run - k + 3) for run in degree_two_runs(t))
