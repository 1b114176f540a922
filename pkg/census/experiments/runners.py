"""
Experiment runners.

Every runner collects one record per tree (sampled, or enumerated in
exhaustive mode), then summarizes the records into SampleStats and a few
experiment-specific extras. Records and summaries depend only on the config,
never on the worker count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

from tqdm import tqdm

from census.counting.distribution import DistributionTable, fixed_root_count, orbit_distribution
from census.counting.tables import free_counts, mean_orbits_exact, rooted_counts
from census.enumeration import DEFAULT_MAX_ORDER, iter_free, iter_rooted
from census.errors import ConfigError, ExactnessError
from census.experiments.config import ExperimentConfig
from census.experiments.parallel import Record, run_partitioned
from census.experiments.stats import (
    SampleStats,
    binomial_interval,
    describe,
    normality_check,
    standardize,
)
from census.patterns import Pattern, count_pattern, count_pattern_rooted, make_pattern, named_pattern
from census.sampling import ALGORITHM, RngState, sample_free_uniform, sample_rooted_uniform
from census.trees.orbits import fixed_set_connected, orbits_free, orbits_rooted, symmetric_edge
from census.trees.text_format import parse_free_tree
from census.trees.types import FreeTree, RootedTree
from census.utils import report
from census.utils.config import NormalityThresholds

AnyTree = Union[FreeTree, RootedTree]


@dataclass
class ExperimentResult:
    config: ExperimentConfig
    records: List[Record]
    stats: Dict[str, SampleStats]
    extra: Dict[str, object] = field(default_factory=dict)
    distribution: Optional[DistributionTable] = None

    def summary(self) -> Dict[str, object]:
        out: Dict[str, object] = {
            "config": self.config.to_dict(),
            "rng": ALGORITHM,
            "stats": {name: s.to_dict() for name, s in self.stats.items()},
            "results": dict(self.extra),
        }
        if self.distribution is not None:
            out["distribution"] = {
                "kind": self.distribution.kind,
                "n": self.distribution.n,
                "counts": {str(k): c for k, c in self.distribution.counts.items()},
                "probabilities": {str(k): str(p) for k, p in self.distribution.probabilities().items()},
            }
        return out


@dataclass(frozen=True)
class FixedVertexReport:
    n: int
    fixed: Tuple[int, ...]
    connected: bool
    symmetric_edge: Optional[Tuple[int, int]]

    @property
    def fixed_count(self) -> int:
        return len(self.fixed)

    def to_dict(self) -> Dict[str, object]:
        return {
            "n": self.n,
            "fixed_count": self.fixed_count,
            "fixed": list(self.fixed),
            "connected": self.connected,
            "symmetric_edge": list(self.symmetric_edge) if self.symmetric_edge else None,
        }


# ─── helpers ──────────────────────────────────────────────────────────────
def resolve_pattern(source: str) -> Pattern:
    """A free-tree pattern file, or a built-in name such as star3 / path4 / chair."""
    path = Path(source)
    if path.is_file():
        return make_pattern(parse_free_tree(path.read_text(encoding="utf-8")), name=path.stem)
    return named_pattern(source)


def analyze_fixed_vertices(t: FreeTree) -> FixedVertexReport:
    partition = orbits_free(t)
    fixed = tuple(partition.fixed_vertices())
    return FixedVertexReport(t.n, fixed, fixed_set_connected(t, fixed), symmetric_edge(t))


def _draw(cfg: ExperimentConfig, index: int) -> Tuple[AnyTree, int]:
    rng = RngState(cfg.seed).substream(index)
    if cfg.kind == "rooted":
        return sample_rooted_uniform(cfg.n, rng), 1
    tree, rep = sample_free_uniform(cfg.n, rng, acceptance=cfg.acceptance, retry_cap=cfg.retry_cap)
    return tree, rep.draws


def _measure(cfg: ExperimentConfig, tree: AnyTree, pattern: Optional[Pattern]) -> Record:
    if cfg.experiment == "orbit":
        x = orbits_rooted(tree).class_count if isinstance(tree, RootedTree) else orbits_free(tree).class_count
        return {"X": x, "X_over_n": x / tree.n}
    if cfg.experiment == "fixed":
        rep = analyze_fixed_vertices(tree)
        if not rep.connected:
            raise ExactnessError(f"fixed vertices {rep.fixed} of a tree with n={tree.n} are not connected")
        if rep.fixed_count == 0 and rep.symmetric_edge is None:
            raise ExactnessError(f"tree with n={tree.n} has no fixed vertex and no symmetrical edge")
        return {
            "fixed": rep.fixed_count,
            "connected": rep.connected,
            "symmetric_edge": rep.symmetric_edge is not None,
            "exceeds": rep.fixed_count > tree.n // 24,
        }
    if cfg.experiment == "pattern":
        if isinstance(tree, RootedTree):
            return {"count": count_pattern_rooted(tree, pattern)}
        return {"count": count_pattern(tree, pattern)}
    raise ConfigError(f"experiment {cfg.experiment!r} has no per-tree measurement")


def sample_range(cfg: ExperimentConfig, start: int, stop: int, progress: Optional[str] = None) -> List[Record]:
    """Records for sample indices [start, stop); module-level so worker processes can run it."""
    pattern = resolve_pattern(cfg.pattern) if cfg.experiment == "pattern" else None
    records: List[Record] = []
    indices = tqdm(range(start, stop), desc=progress, unit="tree", disable=progress is None or report.is_quiet())
    for i in indices:
        tree, draws = _draw(cfg, i)
        records.append({"index": i, "draws": draws, **_measure(cfg, tree, pattern)})
    return records


def _exhaustive_records(cfg: ExperimentConfig, bound: int) -> List[Record]:
    pattern = resolve_pattern(cfg.pattern) if cfg.experiment == "pattern" else None
    trees = iter_rooted(cfg.n, bound) if cfg.kind == "rooted" else iter_free(cfg.n, bound)
    return [
        {"index": i, "draws": 0, **_measure(cfg, t, pattern)}
        for i, t in enumerate(tqdm(trees, desc=f"{cfg.kind} n={cfg.n}", unit="tree", disable=report.is_quiet()))
    ]


def collect_records(cfg: ExperimentConfig, bound: Optional[int] = None) -> List[Record]:
    if cfg.mode == "exhaustive":
        return _exhaustive_records(cfg, bound or DEFAULT_MAX_ORDER)
    return run_partitioned(sample_range, cfg, cfg.samples, cfg.workers, desc=f"{cfg.experiment} n={cfg.n}")


def _draw_summary(cfg: ExperimentConfig, records: Sequence[Record]) -> Dict[str, object]:
    if cfg.mode == "exhaustive" or cfg.kind == "rooted":
        return {}
    draws = sum(int(rec["draws"]) for rec in records)
    return {
        "draws_total": draws,
        "draws_per_tree": draws / len(records),
        "draws_per_tree_expected": float(Fraction(rooted_counts(cfg.n)[cfg.n], free_counts(cfg.n)[cfg.n])),
    }


# ─── runners ──────────────────────────────────────────────────────────────
def run_orbit_experiment(cfg: ExperimentConfig, bound: Optional[int] = None) -> ExperimentResult:
    """Number of vertex classes X_n per tree, and X_n / n."""
    records = collect_records(cfg, bound)
    xs = [rec["X"] for rec in records]
    stats = {"X": describe(xs), "X_over_n": describe([x / cfg.n for x in xs])}
    extra: Dict[str, object] = {
        "mean_X_over_n": stats["X_over_n"].mean,
        "std_error_X_over_n": stats["X_over_n"].std_error,
        **_draw_summary(cfg, records),
    }
    if cfg.kind == "free":
        exact = mean_orbits_exact(cfg.n)
        extra["exact_mean_X"] = str(exact)
        extra["exact_mean_X_float"] = float(exact)
    return ExperimentResult(cfg, records, stats, extra)


def run_fixed_vertex_experiment(cfg: ExperimentConfig, bound: Optional[int] = None) -> ExperimentResult:
    """
    Fixed-vertex counts of free trees and the share exceeding floor(n/24).
    Connectivity of the fixed set is asserted on every tree.
    """
    if cfg.kind != "free":
        raise ConfigError("the fixed-vertex experiment works on free trees only")
    records = collect_records(cfg, bound)
    exceeding = sum(1 for rec in records if rec["exceeds"])
    stats = {"fixed": describe([rec["fixed"] for rec in records])}
    extra = {
        "threshold": cfg.n // 24,
        "exceedance_fraction": exceeding / len(records),
        "exceedance_interval": binomial_interval(exceeding, len(records)),
        "connected_fraction": sum(1 for rec in records if rec["connected"]) / len(records),
        "symmetric_edge_fraction": sum(1 for rec in records if rec["symmetric_edge"]) / len(records),
        **_draw_summary(cfg, records),
    }
    return ExperimentResult(cfg, records, stats, extra)


def run_pattern_experiment(
    cfg: ExperimentConfig,
    thresholds: NormalityThresholds = NormalityThresholds(),
    bound: Optional[int] = None,
) -> ExperimentResult:
    """Pattern occurrence counts X_{n,M}, raw and standardized, with normality verdicts."""
    records = collect_records(cfg, bound)
    counts = [rec["count"] for rec in records]
    raw = describe(counts, step=1.0)
    if raw.degenerate:
        report.warn(f"{cfg.pattern} counts are constant over {len(counts)} trees of order {cfg.n}; normality diagnostics fail")
    zs = standardize(counts)
    z = describe(zs, step=None if raw.degenerate else 1.0 / math.sqrt(raw.variance))
    for rec, value in zip(records, zs):
        rec["standardized"] = float(value)
    extra = {
        "pattern": cfg.pattern,
        "mean_over_n": raw.mean / cfg.n,
        "variance_over_n": raw.variance / cfg.n,
        "degenerate": raw.degenerate,
        "normality": normality_check(z, thresholds),
        **_draw_summary(cfg, records),
    }
    return ExperimentResult(cfg, records, {"count": raw, "standardized": z}, extra)


def run_exhaustive_distribution(kind: str, n: int, bound: Optional[int] = None) -> ExperimentResult:
    """
    Exact distribution of X_n over all trees of one kind and order.

    Behavior:
      - The table comes from counting.orbit_distribution (bound refusal applies).
      - For free trees the mean is checked against r_n / t_n, and the share
        of rooted classes whose root is a fixed vertex is reported.
    """
    table = orbit_distribution(kind, n, bound=bound)
    values = [k for k, c in table.counts.items() for _ in range(c)]
    stats = {"X": describe(values)}
    mean = table.mean()
    extra: Dict[str, object] = {"mean_exact": str(mean), "mean": float(mean), "total": table.total}
    if kind == "free":
        if mean != mean_orbits_exact(n):
            raise ExactnessError(f"exhaustive mean {mean} differs from r_n/t_n = {mean_orbits_exact(n)}")
        fixed_roots = fixed_root_count(n, bound=bound)
        extra["fixed_root_count"] = fixed_roots
        extra["fixed_root_share"] = float(Fraction(fixed_roots, rooted_counts(n)[n]))
    cfg = ExperimentConfig(experiment="exact-dist", kind=kind, n=n, samples=1, mode="exhaustive")
    return ExperimentResult(cfg, [], stats, extra, distribution=table)


def variance_sweep(kind: str, sizes: Sequence[int], samples: int, seed: int, workers: int = 1) -> List[Dict[str, float]]:
    """Mean and variance of X_n / n across orders; variance / n should settle as n grows."""
    rows = []
    for n in sizes:
        result = run_orbit_experiment(ExperimentConfig("orbit", kind, n, samples, seed, workers=workers))
        x = result.stats["X"]
        rows.append({"n": n, "mean_over_n": x.mean / n, "variance_over_n": x.variance / n, "std_error": x.std_error})
    return rows


def run_experiment(cfg: ExperimentConfig, thresholds: NormalityThresholds = NormalityThresholds(), bound: Optional[int] = None) -> ExperimentResult:
    if cfg.experiment == "orbit":
        return run_orbit_experiment(cfg, bound)
    if cfg.experiment == "fixed":
        return run_fixed_vertex_experiment(cfg, bound)
    if cfg.experiment == "pattern":
        return run_pattern_experiment(cfg, thresholds, bound)
    return replace(run_exhaustive_distribution(cfg.kind, cfg.n, bound), config=cfg)
