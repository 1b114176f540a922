"""
Patterns: small free trees whose vertices of degree >= 2 are internal (their
image must keep exactly that degree in the host tree) and whose leaves are
external (any degree in the host).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Tuple

from census.errors import InvalidTreeError
from census.trees.types import FreeTree, path_tree, star_tree


@dataclass(frozen=True)
class Pattern:
    shape: FreeTree
    name: str = "custom"

    def __post_init__(self):
        if self.shape.n < 2:
            raise InvalidTreeError("a pattern needs at least two vertices (one edge)")

    @property
    def m(self) -> int:
        return self.shape.n

    @cached_property
    def internal(self) -> Tuple[int, ...]:
        return tuple(v for v, d in enumerate(self.shape.degrees) if d >= 2)

    @cached_property
    def external(self) -> Tuple[int, ...]:
        return tuple(v for v, d in enumerate(self.shape.degrees) if d == 1)


@dataclass(frozen=True)
class PatternCount:
    n: int
    pattern: str
    occurrences: int

    def to_dict(self) -> Dict[str, object]:
        return {"n": self.n, "pattern": self.pattern, "occurrences": self.occurrences}


# ─── constructors ─────────────────────────────────────────────────────────
def make_pattern(shape: FreeTree, name: str = "custom") -> Pattern:
    return Pattern(shape, name)


def star_pattern(d: int) -> Pattern:
    """Center of degree d plus d external leaves."""
    if d < 2:
        raise InvalidTreeError(f"a star pattern needs d >= 2, got {d} (path2 is the edge)")
    return Pattern(star_tree(d + 1), f"star{d}")


def path_pattern(k: int) -> Pattern:
    """k vertices in a row; the k-2 inner ones are internal."""
    if k < 2:
        raise InvalidTreeError(f"a path pattern needs k >= 2 vertices, got {k}")
    return Pattern(path_tree(k), "edge" if k == 2 else f"path{k}")


def chair_pattern() -> Pattern:
    """Degree-3 vertex with two leaves and a two-vertex arm."""
    return Pattern(FreeTree(5, ((0, 1), (0, 2), (0, 3), (3, 4))), "chair")


NAMED_PATTERNS = {
    "edge": lambda: path_pattern(2),
    "path3": lambda: path_pattern(3),
    "path4": lambda: path_pattern(4),
    "star3": lambda: star_pattern(3),
    "star4": lambda: star_pattern(4),
    "chair": chair_pattern,
}


def named_pattern(name: str) -> Pattern:
    """
    One of the built-in patterns, or the families `pathK` / `starD` for any
    K >= 2, D >= 2.
    """
    if name in NAMED_PATTERNS:
        return NAMED_PATTERNS[name]()
    for prefix, build in (("path", path_pattern), ("star", star_pattern)):
        if name.startswith(prefix) and name[len(prefix):].isdigit():
            return build(int(name[len(prefix):]))
    raise InvalidTreeError(f"unknown pattern {name!r} (known: {', '.join(NAMED_PATTERNS)}, pathK, starD)")
