"""
Tree text formats.

Free tree record:
    n
    u v          (n-1 lines, one edge each, labels 0..n-1)

Rooted tree record:
    n root
    p_0 p_1 ... p_{n-1}     (one line; the root's entry is its own index)

Blank lines and lines starting with '#' are ignored, so several records can
be concatenated in one stream (as `census enumerate --emit trees` does).
"""

from __future__ import annotations

from typing import Iterator, List

from census.errors import InvalidTreeError
from census.trees.types import FreeTree, RootedTree


def _lines(text: str) -> List[str]:
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]


def _ints(line: str, expected: int, what: str) -> List[int]:
    parts = line.split()
    if len(parts) != expected:
        raise InvalidTreeError(f"{what}: expected {expected} integer(s), got {line!r}")
    try:
        return [int(p) for p in parts]
    except ValueError as exc:
        raise InvalidTreeError(f"{what}: non-integer entry in {line!r}") from exc


# ─── free trees ───────────────────────────────────────────────────────────
def iter_free_trees(text: str) -> Iterator[FreeTree]:
    lines = _lines(text)
    i = 0
    while i < len(lines):
        (n,) = _ints(lines[i], 1, "free tree header")
        if n < 1:
            raise InvalidTreeError(f"free tree header: n must be >= 1, got {n}")
        if i + n > len(lines):
            raise InvalidTreeError(f"free tree with n={n} is truncated")
        edges = [tuple(_ints(lines[i + 1 + k], 2, "edge")) for k in range(n - 1)]
        yield FreeTree.from_edges(n, edges)
        i += n


def parse_free_tree(text: str) -> FreeTree:
    trees = list(iter_free_trees(text))
    if len(trees) != 1:
        raise InvalidTreeError(f"expected exactly one free tree record, found {len(trees)}")
    return trees[0]


def format_free_tree(t: FreeTree) -> str:
    return "\n".join([str(t.n)] + [f"{u} {v}" for u, v in t.edges]) + "\n"


# ─── rooted trees ─────────────────────────────────────────────────────────
def iter_rooted_trees(text: str) -> Iterator[RootedTree]:
    lines = _lines(text)
    if len(lines) % 2:
        raise InvalidTreeError("rooted tree stream has a header without a parent line")
    for i in range(0, len(lines), 2):
        n, root = _ints(lines[i], 2, "rooted tree header")
        if n < 1:
            raise InvalidTreeError(f"rooted tree header: n must be >= 1, got {n}")
        if not 0 <= root < n:
            raise InvalidTreeError(f"rooted tree header: root {root} outside 0..{n - 1}")
        parent = _ints(lines[i + 1], n, "parent line")
        if parent[root] != root:
            raise InvalidTreeError(f"the root's parent entry must be its own index {root}, got {parent[root]}")
        parent[root] = -1
        yield RootedTree(n, tuple(parent), root)


def parse_rooted_tree(text: str) -> RootedTree:
    trees = list(iter_rooted_trees(text))
    if len(trees) != 1:
        raise InvalidTreeError(f"expected exactly one rooted tree record, found {len(trees)}")
    return trees[0]


def format_rooted_tree(t: RootedTree) -> str:
    parent = [t.root if v == t.root else p for v, p in enumerate(t.parent)]
    return f"{t.n} {t.root}\n" + " ".join(map(str, parent)) + "\n"
