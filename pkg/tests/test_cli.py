from __future__ import annotations

import json

import pytest

from main import EXIT_BOUND, EXIT_INTERNAL, EXIT_INVALID, EXIT_OK, main

from conftest import FREE, ROOTED


def run(capsys, *argv):
    code = main(list(argv) + ["--quiet"])
    out, err = capsys.readouterr()
    return code, out, err


class TestCounting:
    def test_count_csv(self, capsys):
        code, out, _ = run(capsys, "count", "--kind", "rooted", "--max-n", "12")
        assert code == EXIT_OK
        lines = out.splitlines()
        assert lines[0] == "n,count"
        assert [int(line.split(",")[1]) for line in lines[1:]] == ROOTED[:12]

    def test_count_exp_route_json(self, capsys):
        code, out, _ = run(capsys, "count", "--kind", "rooted", "--max-n", "8", "--route", "exp", "--format", "json")
        assert code == EXIT_OK
        assert json.loads(out)["values"]["8"] == "115"

    def test_dist(self, capsys):
        code, out, _ = run(capsys, "dist", "--kind", "free", "--n", "5")
        assert code == EXIT_OK
        assert out.splitlines() == ["k,count", "2,1", "3,1", "4,1"]

    def test_dist_refuses_large_orders(self, capsys):
        code, _, err = run(capsys, "dist", "--kind", "free", "--n", "17")
        assert code == EXIT_BOUND
        assert "16" in err

    def test_enumerate(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--kind", "free", "--n", "10", "--emit", "codes")
        assert code == EXIT_OK
        assert len(set(out.split())) == FREE[9]

    def test_enumerate_count(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--kind", "rooted", "--n", "7")
        assert (code, out.strip()) == (EXIT_OK, "48")


class TestSampling:
    def test_sample_stream_is_seeded(self, capsys):
        args = ("sample", "--kind", "free", "--n", "20", "--count", "3", "--seed", "42")
        first = run(capsys, *args)[1]
        second = run(capsys, *args)[1]
        assert first == second
        assert first.count("\n20\n") + first.startswith("20\n") == 3

    def test_stats_only(self, capsys):
        code, out, _ = run(capsys, "sample", "--kind", "free", "--n", "12", "--count", "20", "--stats-only")
        assert code == EXIT_OK
        stats = json.loads(out)
        assert stats["samples"] == 20
        assert stats["draws"] == stats["rejections"] + 20

    def test_bad_seed(self, capsys):
        code, _, _ = run(capsys, "sample", "--kind", "rooted", "--n", "5", "--seed", "-1")
        assert code == EXIT_INVALID


class TestPatternCommand:
    def test_named_pattern(self, capsys, write_tree, spider):
        from census.trees import format_free_tree

        path = write_tree(format_free_tree(spider))
        code, out, _ = run(capsys, "pattern", "--tree", str(path), "--pattern", "chair")
        assert code == EXIT_OK
        assert json.loads(out) == {"n": 6, "pattern": "chair", "occurrences": 2}

    def test_closed_forms(self, capsys, write_tree):
        path = write_tree("4\n0 1\n1 2\n2 3\n")
        assert json.loads(run(capsys, "pattern", "--tree", str(path), "--path", "3")[1])["occurrences"] == 2
        assert json.loads(run(capsys, "pattern", "--tree", str(path), "--star", "3")[1])["occurrences"] == 0

    def test_rooted_input(self, capsys, write_tree):
        path = write_tree("4 0\n0 0 0 0\n")
        code, out, _ = run(capsys, "pattern", "--tree", str(path), "--rooted-input", "--pattern", "star3")
        assert code == EXIT_OK
        assert json.loads(out)["occurrences"] == 1

    def test_invalid_tree(self, capsys, write_tree):
        path = write_tree("3\n0 1\n0 1\n")
        code, _, err = run(capsys, "pattern", "--tree", str(path), "--pattern", "edge")
        assert code == EXIT_INVALID
        assert "[Error]" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, _ = run(capsys, "pattern", "--tree", str(tmp_path / "nope.txt"), "--pattern", "edge")
        assert code == EXIT_INVALID


class TestExperiments:
    def test_orbit_exp_writes_outputs(self, capsys, tmp_path):
        out_dir = tmp_path / "run"
        code, out, _ = run(
            capsys, "orbit-exp", "--kind", "free", "--n", "14", "--samples", "30", "--seed", "3", "--out", str(out_dir)
        )
        assert code == EXIT_OK
        summary = json.loads((out_dir / "summary.json").read_text())
        assert summary == json.loads(out)
        assert summary["config"]["seed"] == 3
        assert (out_dir / "samples.csv").exists()

    def test_pattern_exp_from_config_file(self, capsys, tmp_path):
        cfg = tmp_path / "exp.yaml"
        cfg.write_text("experiment: pattern\nkind: free\nn: 25\nsamples: 40\npattern: star3\n")
        code, out, _ = run(capsys, "pattern-exp", "--config", str(cfg), "--seed", "8")
        assert code == EXIT_OK
        summary = json.loads(out)
        assert summary["config"]["seed"] == 8
        assert summary["config"]["pattern"] == "star3"

    def test_pattern_exp_needs_pattern(self, capsys):
        code, _, _ = run(capsys, "pattern-exp", "--n", "10", "--samples", "5")
        assert code == EXIT_INVALID

    def test_fixed_exp_single_tree(self, capsys, write_tree):
        path = write_tree("5\n0 1\n1 2\n2 3\n3 4\n")
        code, out, _ = run(capsys, "fixed-exp", "--tree", str(path))
        assert code == EXIT_OK
        assert json.loads(out)["fixed"] == [2]

    def test_exact_dist_csv(self, capsys):
        code, out, _ = run(capsys, "exact-dist", "--kind", "free", "--n", "4", "--format", "csv")
        assert (code, out.splitlines()) == (EXIT_OK, ["k,count", "2,2"])

    def test_exact_dist_bound(self, capsys):
        code, _, _ = run(capsys, "exact-dist", "--kind", "rooted", "--n", "16")
        assert code == EXIT_BOUND

    def test_bad_settings_file(self, capsys, tmp_path):
        settings = tmp_path / "config.yaml"
        settings.write_text("sampling:\n  retry_cap: [\n")
        code, _, _ = run(capsys, "count", "--kind", "free", "--max-n", "5", "--settings", str(settings))
        assert code == EXIT_INVALID

    def test_retry_cap_from_settings(self, capsys, tmp_path):
        settings = tmp_path / "config.yaml"
        settings.write_text("sampling:\n  retry_cap: 1\n")
        code, _, err = run(
            capsys, "sample", "--kind", "free", "--n", "16", "--count", "50", "--stats-only", "--settings", str(settings)
        )
        assert code == EXIT_INTERNAL
        assert "retry" in err or "draws" in err


def test_constants(capsys):
    code, out, _ = run(capsys, "constants", "--max-n", "120", "--truncation", "60")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["x0"]["value"] == pytest.approx(0.33832185689920, abs=1e-10)
    assert data["max_n"] == 120


class TestOracleFlags:
    def test_pattern_oracle(self, capsys, write_tree, spider):
        from census.trees import format_free_tree

        path = write_tree(format_free_tree(spider))
        code, out, _ = run(capsys, "pattern", "--tree", str(path), "--star", "3", "--oracle")
        assert code == EXIT_OK
        assert json.loads(out)["pattern"] == "star3"

    def test_pattern_oracle_bound(self, capsys, write_tree):
        edges = "".join(f"{i} {i + 1}\n" for i in range(24))
        path = write_tree(f"25\n{edges}")
        code, _, _ = run(capsys, "pattern", "--tree", str(path), "--path", "3", "--oracle")
        assert code == EXIT_BOUND

    def test_fixed_oracle(self, capsys, write_tree):
        path = write_tree("4\n0 1\n1 2\n2 3\n")
        code, out, _ = run(capsys, "fixed-exp", "--tree", str(path), "--oracle")
        assert code == EXIT_OK
        assert json.loads(out)["symmetric_edge"] == [1, 2]
