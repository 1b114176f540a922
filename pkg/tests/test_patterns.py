from __future__ import annotations

import random
from collections import Counter

import pytest

from census.enumeration import iter_free, iter_rooted
from census.errors import FeasibilityError, InvalidTreeError
from census.patterns import (
    NAMED_PATTERNS,
    Pattern,
    chair_pattern,
    connected_subsets,
    count_path_pattern,
    count_pattern,
    count_pattern_oracle,
    count_pattern_rooted,
    count_star_pattern,
    degree_two_runs,
    named_pattern,
    path_pattern,
    pattern_count,
    star_pattern,
)
from census.trees import FreeTree, canonical_free_code, path_tree, star_tree


class TestPatternTypes:
    def test_roles(self):
        chair = chair_pattern()
        assert chair.m == 5
        assert chair.internal == (0, 3)
        assert chair.external == (1, 2, 4)

    def test_single_vertex_is_not_a_pattern(self):
        with pytest.raises(InvalidTreeError):
            Pattern(FreeTree(1, ()))

    def test_names(self):
        assert named_pattern("edge").m == 2
        assert named_pattern("path5").name == "path5"
        assert named_pattern("star6").m == 7
        with pytest.raises(InvalidTreeError):
            named_pattern("triangle")
        with pytest.raises(InvalidTreeError):
            path_pattern(1)


class TestCounting:
    def test_spider(self, spider):
        assert count_pattern(spider, named_pattern("edge")) == 5
        assert count_pattern(spider, path_pattern(3)) == 2
        assert count_pattern(spider, path_pattern(4)) == 0
        assert count_pattern(spider, star_pattern(3)) == 1
        assert count_pattern(spider, chair_pattern()) == 2

    def test_path(self):
        t = path_tree(6)
        assert [count_pattern(t, path_pattern(k)) for k in range(2, 8)] == [5, 4, 3, 2, 1, 0]

    def test_star_host(self):
        t = star_tree(5)
        assert count_pattern(t, star_pattern(4)) == 1
        assert count_pattern(t, star_pattern(3)) == 0
        assert count_pattern(t, path_pattern(3)) == 0

    def test_rooted_ignores_root(self, spider):
        for root in range(spider.n):
            assert count_pattern_rooted(spider.rooted_at(root), chair_pattern()) == 2

    @pytest.mark.parametrize("name", ["path3", "star3", "chair"])
    def test_rooted_count_is_count_of_relabeled_free_tree(self, name):
        pattern = named_pattern(name)
        rng = random.Random(3)
        for r in iter_rooted(8):
            perm = list(range(r.n))
            rng.shuffle(perm)
            assert count_pattern_rooted(r, pattern) == count_pattern(r.to_free().relabeled(perm), pattern)

    @pytest.mark.parametrize("name", ["path4", "chair"])
    def test_relabeling_keeps_counts(self, name):
        pattern = named_pattern(name)
        rng = random.Random(11)
        for t in iter_free(9):
            perm = list(range(t.n))
            rng.shuffle(perm)
            assert count_pattern(t.relabeled(perm), pattern) == count_pattern(t, pattern)

    @pytest.mark.parametrize("name", ["path4", "star3", "chair"])
    def test_rooted_and_free_census_agree_per_free_class(self, name):
        pattern = named_pattern(name)
        per_class = {}
        for r in iter_rooted(8):
            count = count_pattern_rooted(r, pattern)
            assert per_class.setdefault(canonical_free_code(r.to_free()), count) == count
        free_counts = Counter(count_pattern(t, pattern) for t in iter_free(8))
        assert len(per_class) == 23
        assert Counter(per_class.values()) == free_counts

    def test_pattern_count_record(self, spider):
        assert pattern_count(spider, star_pattern(3)).to_dict() == {"n": 6, "pattern": "star3", "occurrences": 1}

    @pytest.mark.parametrize("name", sorted(NAMED_PATTERNS))
    @pytest.mark.parametrize("n", range(2, 10))
    def test_matches_oracle(self, name, n):
        pattern = named_pattern(name)
        for t in iter_free(n):
            assert count_pattern(t, pattern) == count_pattern_oracle(t, pattern)


class TestClosedForms:
    def test_degree_two_runs(self, spider):
        assert sorted(degree_two_runs(spider)) == [1, 1]
        assert degree_two_runs(path_tree(6)) == [4]
        assert degree_two_runs(star_tree(5)) == []

    @pytest.mark.parametrize("n", range(2, 11))
    def test_agree_with_backtracking(self, n):
        for t in iter_free(n):
            for d in (2, 3, 4):
                assert count_star_pattern(t, d) == count_pattern(t, star_pattern(d))
            for k in (2, 3, 4, 5):
                assert count_path_pattern(t, k) == count_pattern(t, path_pattern(k))

    def test_rejects_degenerate_arguments(self, spider):
        with pytest.raises(ValueError):
            count_star_pattern(spider, 1)
        with pytest.raises(ValueError):
            count_path_pattern(spider, 1)

    @pytest.mark.parametrize("d", [0, 1])
    def test_star_pattern_needs_two_leaves(self, d):
        with pytest.raises(InvalidTreeError):
            star_pattern(d)
        with pytest.raises(InvalidTreeError):
            named_pattern(f"star{d}")


class TestOracle:
    def test_connected_subsets(self):
        assert len(list(connected_subsets(star_tree(5), 3))) == 6
        assert len(list(connected_subsets(path_tree(6), 3))) == 4
        assert len(list(connected_subsets(path_tree(6), 2))) == 5
        subsets = list(connected_subsets(star_tree(6), 4))
        assert len(subsets) == len(set(subsets)) == 10

    def test_bounds(self):
        with pytest.raises(FeasibilityError, match="bound 20"):
            count_pattern_oracle(path_tree(21), path_pattern(3))
        with pytest.raises(FeasibilityError, match="bound 8"):
            count_pattern_oracle(path_tree(10), path_pattern(9))

    def test_pattern_larger_than_host(self):
        assert count_pattern_oracle(path_tree(3), path_pattern(5)) == 0
        assert count_pattern(path_tree(3), path_pattern(5)) == 0
