from __future__ import annotations

import pytest

from census.enumeration import (
    LevelSequence,
    enumerate_free,
    enumerate_free_by_filter,
    enumerate_rooted,
    iter_free,
    iter_free_level_sequences,
    iter_level_sequences,
    iter_rooted,
    level_sequence_to_rooted,
    next_level_sequence,
)
from census.errors import FeasibilityError, InvalidTreeError
from census.trees import canonical_free_code, canonical_rooted_code

from conftest import FREE, ROOTED


class TestLevelSequences:
    def test_order_four_in_order(self):
        assert [s.levels for s in iter_level_sequences(4)] == [
            (1, 2, 3, 4),
            (1, 2, 3, 3),
            (1, 2, 3, 2),
            (1, 2, 2, 2),
        ]

    def test_star_has_no_successor(self):
        assert next_level_sequence([1, 2, 2, 2]) is None

    def test_successor_copies_block(self):
        assert next_level_sequence([1, 2, 3, 4, 2]) == [1, 2, 3, 3, 3]

    @pytest.mark.parametrize("levels", [(), (2, 3), (1, 3), (1, 2, 4)])
    def test_invalid_sequences(self, levels):
        with pytest.raises(InvalidTreeError):
            LevelSequence(levels)

    def test_to_rooted(self):
        t = LevelSequence((1, 2, 3, 2)).to_rooted()
        assert t.parent == (-1, 0, 1, 0)

    def test_plain_sequence_to_rooted(self):
        t = level_sequence_to_rooted([1, 2, 3, 3, 2])
        assert t.parent == (-1, 0, 1, 1, 0)
        assert t.subtree_sizes[1] == 3


class TestRootedEnumeration:
    @pytest.mark.parametrize("n", range(1, 13))
    def test_counts(self, n):
        assert enumerate_rooted(n) == ROOTED[n - 1]

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [13, 14, 15, 16])
    def test_counts_large(self, n):
        assert enumerate_rooted(n) == ROOTED[n - 1]

    def test_classes_are_distinct(self):
        codes = [canonical_rooted_code(t) for t in iter_rooted(9)]
        assert len(set(codes)) == len(codes) == 286

    def test_visitor_sees_every_tree(self):
        seen = []
        enumerate_rooted(6, seen.append)
        assert len(seen) == 20
        assert all(t.n == 6 and t.root == 0 for t in seen)

    def test_bound(self):
        with pytest.raises(FeasibilityError, match="bound 18"):
            list(iter_rooted(19))
        with pytest.raises(FeasibilityError):
            enumerate_rooted(8, bound=7)


class TestFreeEnumeration:
    @pytest.mark.parametrize("n", range(1, 16))
    def test_counts(self, n):
        assert enumerate_free(n) == FREE[n - 1]

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [16, 17, 18])
    def test_counts_large(self, n):
        assert enumerate_free(n) == FREE[n - 1]

    @pytest.mark.parametrize("n", range(1, 13))
    def test_classes_are_distinct(self, n):
        codes = [canonical_free_code(t) for t in iter_free(n)]
        assert len(set(codes)) == len(codes)

    @pytest.mark.slow
    def test_classes_are_distinct_at_sixteen(self):
        codes = {canonical_free_code(t) for t in iter_free(16)}
        assert len(codes) == 19320

    @pytest.mark.parametrize("n", range(1, 12))
    def test_matches_filter_route(self, n):
        fast, slow = [], []
        enumerate_free(n, lambda t: fast.append(canonical_free_code(t)))
        enumerate_free_by_filter(n, lambda t: slow.append(canonical_free_code(t)))
        assert sorted(fast) == sorted(slow)

    def test_starts_with_centered_path(self):
        assert next(iter_free_level_sequences(7)) == [1, 2, 3, 4, 2, 3, 4]
        assert next(iter_free_level_sequences(6)) == [1, 2, 3, 4, 2, 3]

    def test_small_orders(self):
        assert list(iter_free_level_sequences(1)) == [[1]]
        assert list(iter_free_level_sequences(2)) == [[1, 2]]

    def test_bound(self):
        with pytest.raises(FeasibilityError):
            list(iter_free(19))
        with pytest.raises(ValueError):
            list(iter_free(0))
