from __future__ import annotations

from pathlib import Path

import pytest

from census.trees import FreeTree, path_tree, star_tree
from census.utils import report

# OEIS A000081 / A000055, orders 1..18
ROOTED = [1, 1, 2, 4, 9, 20, 48, 115, 286, 719, 1842, 4766, 12486, 32973, 87811, 235381, 634847, 1721159]
FREE = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320, 48629, 123867]


@pytest.fixture(autouse=True)
def _quiet_reports():
    report.set_quiet(True)
    yield
    report.set_quiet(False)


@pytest.fixture
def spider() -> FreeTree:
    """Center 0 with three legs of lengths 1, 2 and 2 (n = 6)."""
    return FreeTree.from_edges(6, [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5)])


@pytest.fixture
def double_broom() -> FreeTree:
    """Two degree-3 centers 0-1, each carrying two leaves (n = 6, symmetrical edge 0-1)."""
    return FreeTree.from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])


@pytest.fixture
def write_tree(tmp_path: Path):
    def write(text: str, name: str = "tree.txt") -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return write


@pytest.fixture
def small_trees(spider, double_broom):
    return [path_tree(1), path_tree(2), path_tree(5), path_tree(6), star_tree(5), spider, double_broom]
