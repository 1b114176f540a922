from __future__ import annotations

import json
import math

import numpy as np
import pytest
from scipy import stats

from census.errors import ConfigError
from census.experiments import (
    ExperimentConfig,
    analyze_fixed_vertices,
    binomial_interval,
    chunked,
    describe,
    exponential_control,
    load_experiment_config,
    normality_check,
    partition,
    render,
    resolve_pattern,
    run_exhaustive_distribution,
    run_experiment,
    run_fixed_vertex_experiment,
    run_orbit_experiment,
    run_pattern_experiment,
    standardize,
    variance_sweep,
    write_outputs,
)
from census.enumeration import iter_free
from census.patterns import chair_pattern, count_pattern
from census.sampling import RngState
from census.trees import distinct_rootings


class TestConfig:
    def test_defaults_are_valid(self):
        cfg = ExperimentConfig()
        assert cfg.to_dict()["experiment"] == "orbit"

    @pytest.mark.parametrize(
        "raw",
        [
            {"experiment": "census"},
            {"kind": "labeled"},
            {"n": 0},
            {"samples": 0},
            {"workers": 0},
            {"mode": "guess"},
            {"experiment": "pattern"},
            {"colour": "blue"},
        ],
    )
    def test_rejects(self, raw):
        with pytest.raises(ConfigError):
            ExperimentConfig.from_mapping(raw)

    def test_file_with_overrides(self, tmp_path):
        path = tmp_path / "exp.json"
        path.write_text(json.dumps({"experiment": "pattern", "n": 30, "pattern": "star3", "samples": 10}))
        cfg = load_experiment_config(path, n=40, seed=None)
        assert (cfg.experiment, cfg.n, cfg.pattern, cfg.seed) == ("pattern", 40, "star3", 2024)


class TestParallel:
    def test_chunked(self):
        assert list(chunked(range(5), 2)) == [[0, 1], [2, 3], [4]]

    def test_partition(self):
        assert partition(10, 3) == [(0, 4), (4, 8), (8, 10)]
        assert partition(2, 8) == [(0, 1), (1, 2)]

    def test_worker_count_does_not_change_records(self):
        base = ExperimentConfig("orbit", "free", 14, 40, seed=5)
        one = run_orbit_experiment(base)
        three = run_orbit_experiment(ExperimentConfig("orbit", "free", 14, 40, seed=5, workers=3))
        assert one.records == three.records


class TestStats:
    def test_describe(self):
        s = describe([1, 2, 3, 4])
        assert s.mean == 2.5
        assert s.variance == pytest.approx(5 / 3)
        assert s.skewness == pytest.approx(0.0, abs=1e-12)
        assert sum(s.histogram_counts) == 4
        assert not s.degenerate

    def test_constant_sample(self):
        s = describe([3, 3, 3])
        assert s.degenerate
        assert s.skewness is None and s.excess_kurtosis is None and s.ks_distance is None
        assert normality_check(s)["passed"] is False
        assert list(standardize([3, 3, 3])) == [0.0, 0.0, 0.0]

    def test_empty_sample(self):
        with pytest.raises(ValueError):
            describe([])

    def test_normal_sample_passes(self):
        s = describe(np.random.default_rng(0).normal(size=20000))
        assert normality_check(s)["passed"]

    def test_exponential_control_fails(self):
        s = describe(exponential_control(5000, RngState(1)))
        verdict = normality_check(s)
        assert not verdict["skewness"]
        assert not verdict["passed"]

    def test_lattice_ks_removes_discreteness(self):
        counts = np.random.default_rng(1).binomial(100, 0.5, size=20000)
        plain = describe(counts).ks_distance
        corrected = describe(counts, step=1.0).ks_distance
        assert plain > 0.03
        assert corrected < 0.015

    def test_lattice_ks_sees_empty_lattice_values(self):
        sample = [0] * 10 + [10] * 90
        # just below 10 the ECDF is still 0.1 while the fitted normal is past its median
        sd = math.sqrt(900 / 99)
        expected = stats.norm.cdf((9.5 - 9) / sd) - 0.1
        assert describe(sample, step=1.0).ks_distance == pytest.approx(expected)
        assert expected > 0.46

    def test_binomial_interval(self):
        ci = binomial_interval(5, 100)
        assert ci["low"] < 0.05 < ci["high"]
        assert ci["confidence"] == 0.95


class TestRunners:
    def test_orbit_sampling(self):
        result = run_orbit_experiment(ExperimentConfig("orbit", "free", 12, 60, seed=9))
        assert len(result.records) == 60
        assert [rec["index"] for rec in result.records] == list(range(60))
        assert result.extra["exact_mean_X"] == "4766/551"
        assert result.extra["draws_per_tree_expected"] == pytest.approx(4766 / 551)

    def test_orbit_exhaustive_mean_is_exact(self):
        result = run_orbit_experiment(ExperimentConfig("orbit", "free", 8, mode="exhaustive"))
        assert len(result.records) == 23
        assert result.stats["X"].mean == pytest.approx(115 / 23)

    def test_free_order_five_exhaustive(self):
        result = run_orbit_experiment(ExperimentConfig("orbit", "free", 5, mode="exhaustive"))
        assert result.stats["X"].mean == 3.0

    def test_single_vertex(self):
        result = run_orbit_experiment(ExperimentConfig("orbit", "free", 1, 20, seed=1))
        assert result.stats["X"].mean == 1.0
        assert result.stats["X"].variance == 0.0
        fixed = run_fixed_vertex_experiment(ExperimentConfig("fixed", "free", 1, 5, seed=1))
        assert fixed.extra["exceedance_fraction"] == 1.0

    def test_edge_pattern_is_degenerate(self):
        result = run_pattern_experiment(ExperimentConfig("pattern", "free", 20, 30, seed=1, pattern="edge"))
        assert result.extra["degenerate"] is True
        assert {rec["count"] for rec in result.records} == {19}
        assert result.extra["normality"]["passed"] is False

    def test_rooted_and_free_pattern_counts_agree(self):
        free = run_pattern_experiment(ExperimentConfig("pattern", "free", 7, mode="exhaustive", pattern="chair"))
        rooted = run_pattern_experiment(ExperimentConfig("pattern", "rooted", 7, mode="exhaustive", pattern="chair"))
        assert len(free.records) == 11 and len(rooted.records) == 48
        # each free tree T stands for X(T) rooted trees with the same count
        weighted = sum(distinct_rootings(t) * count_pattern(t, chair_pattern()) for t in iter_free(7))
        assert sum(r["count"] for r in rooted.records) == weighted
        assert {r["count"] for r in free.records} == {r["count"] for r in rooted.records}

    def test_rooted_orbit(self):
        result = run_orbit_experiment(ExperimentConfig("orbit", "rooted", 10, 30, seed=2))
        assert all(1 <= rec["X"] <= 10 for rec in result.records)
        assert "draws_total" not in result.extra

    def test_fixed_vertices(self):
        result = run_fixed_vertex_experiment(ExperimentConfig("fixed", "free", 48, 40, seed=3))
        assert result.extra["threshold"] == 2
        assert result.extra["connected_fraction"] == 1.0
        assert 0.0 <= result.extra["exceedance_fraction"] <= 1.0

    def test_fixed_needs_free_trees(self):
        with pytest.raises(ConfigError):
            run_fixed_vertex_experiment(ExperimentConfig("fixed", "rooted", 10, 5))

    def test_fixed_report(self, spider, double_broom):
        assert analyze_fixed_vertices(spider).to_dict() == {
            "n": 6,
            "fixed_count": 2,
            "fixed": [0, 1],
            "connected": True,
            "symmetric_edge": None,
        }
        assert analyze_fixed_vertices(double_broom).symmetric_edge == (0, 1)

    def test_pattern(self):
        cfg = ExperimentConfig("pattern", "free", 30, 80, seed=4, pattern="star3")
        result = run_pattern_experiment(cfg)
        assert all("standardized" in rec for rec in result.records)
        assert set(result.extra["normality"]) == {"skewness", "excess_kurtosis", "ks", "passed"}
        assert result.stats["standardized"].mean == pytest.approx(0.0, abs=1e-9)

    def test_pattern_from_file(self, write_tree):
        pattern = resolve_pattern(str(write_tree("3\n0 1\n1 2\n", "cherry.txt")))
        assert pattern.m == 3 and pattern.name == "cherry"

    def test_exhaustive_distribution(self):
        result = run_exhaustive_distribution("free", 6)
        assert result.distribution.total == 6
        assert result.extra["mean_exact"] == "10/3"
        assert result.extra["fixed_root_count"] > 0
        assert result.summary()["distribution"]["probabilities"]

    def test_run_experiment_keeps_config(self):
        cfg = ExperimentConfig("exact-dist", "rooted", 7, seed=77)
        assert run_experiment(cfg).config == cfg

    def test_standard_error_shrinks_with_root_of_samples(self):
        single = run_orbit_experiment(ExperimentConfig("orbit", "free", 20, 800, seed=13)).stats["X"]
        double = run_orbit_experiment(ExperimentConfig("orbit", "free", 20, 1600, seed=13)).stats["X"]
        assert single.std_error / double.std_error == pytest.approx(2 ** 0.5, rel=0.12)

    def test_variance_sweep(self):
        rows = variance_sweep("free", [10, 20], samples=30, seed=1)
        assert [row["n"] for row in rows] == [10, 20]
        assert all(row["variance_over_n"] >= 0 for row in rows)


class TestOutput:
    def test_files_are_reproducible(self, tmp_path):
        cfg = ExperimentConfig("orbit", "free", 15, 25, seed=21)
        first = write_outputs(run_orbit_experiment(cfg), tmp_path / "a")
        second = write_outputs(run_orbit_experiment(cfg), tmp_path / "b")
        assert first["summary"].read_bytes() == second["summary"].read_bytes()
        assert first["samples"].read_bytes() == second["samples"].read_bytes()
        header = first["samples"].read_text().splitlines()[0]
        assert header == "index,draws,X,X_over_n"

    def test_summary_json_is_sorted(self):
        result = run_exhaustive_distribution("rooted", 5)
        text = render(result, "json")
        data = json.loads(text)
        assert list(data) == sorted(data)
        assert data["distribution"]["counts"]

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            render(run_exhaustive_distribution("rooted", 4), "xml")


@pytest.mark.slow
class TestAtScale:
    def test_free_orbit_mean_near_limit(self):
        result = run_orbit_experiment(ExperimentConfig("orbit", "free", 500, 2000, seed=2024))
        assert 0.80 <= result.extra["mean_X_over_n"] <= 0.84
        assert result.extra["std_error_X_over_n"] < 0.005

    def test_rooted_orbit_mean_near_limit(self):
        result = run_orbit_experiment(ExperimentConfig("orbit", "rooted", 500, 2000, seed=2024))
        assert 0.80 <= result.extra["mean_X_over_n"] <= 0.84

    def test_fixed_vertices_exceed_threshold(self):
        result = run_fixed_vertex_experiment(ExperimentConfig("fixed", "free", 200, 1000, seed=2024))
        assert result.extra["exceedance_fraction"] >= 0.99

    def test_star3_counts_look_normal(self):
        cfg = ExperimentConfig("pattern", "free", 400, 5000, seed=2024, pattern="star3")
        result = run_pattern_experiment(cfg)
        assert result.extra["normality"]["passed"]
        control = describe(exponential_control(5000, RngState(2024)))
        assert not normality_check(control)["passed"]
