"""
census - unlabeled tree census command line.

    python main.py count       --kind rooted|free --max-n N
    python main.py dist        --kind free|rooted --n N
    python main.py enumerate   --kind free|rooted --n N --emit codes|trees|count
    python main.py sample      --kind free|rooted --n N --count K [--stats-only]
    python main.py pattern     --tree FILE (--pattern NAME|FILE | --star D | --path K) [--oracle]
    python main.py constants   [--max-n N] [--truncation T]
    python main.py orbit-exp   --kind free --n N --samples K
    python main.py fixed-exp   --n N --samples K | --tree FILE [--oracle]
    python main.py pattern-exp --pattern star3 --n N --samples K
    python main.py exact-dist  --kind free --n N

Every subcommand takes --seed --workers --out --format csv|json --config FILE
--settings FILE --quiet. Pattern occurrences are counted as distinct vertex
subsets of the host tree.

Exit codes: 0 success, 2 invalid input, 3 feasibility-bound refusal,
4 internal assertion.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Callable, List, Optional

from census.asymptotics import compute_constants
from census.counting import (
    free_counts,
    orbit_distribution,
    rooted_counts,
    rooted_counts_via_exp,
)
from census.enumeration import iter_free, iter_rooted
from census.errors import (
    ConvergenceError,
    ExactnessError,
    FeasibilityError,
    SamplerRetryError,
)
from census.experiments import (
    ExperimentConfig,
    analyze_fixed_vertices,
    load_experiment_config,
    render,
    resolve_pattern,
    rows_to_csv,
    run_experiment,
    to_json,
    write_outputs,
)
from census.patterns import (
    PatternCount,
    count_path_pattern,
    count_pattern,
    count_pattern_oracle,
    count_pattern_rooted,
    count_star_pattern,
    path_pattern,
    star_pattern,
)
from census.sampling import RngState, SampleReport, sample_free_uniform, sample_rooted_uniform
from census.trees import (
    brute_force_orbits,
    canonical_free_code,
    canonical_rooted_code,
    format_free_tree,
    format_rooted_tree,
    orbits_free,
    parse_free_tree,
    parse_rooted_tree,
)
from census.utils import report
from census.utils.config import CONFIG_PATH, Settings, load_config, with_overrides

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_BOUND = 3
EXIT_INTERNAL = 4


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") or not text else text + "\n")


# ─── subcommands ──────────────────────────────────────────────────────────
def cmd_count(args, settings: Settings) -> None:
    build = rooted_counts_via_exp if args.route == "exp" else rooted_counts
    table = build(args.max_n) if args.kind == "rooted" else free_counts(args.max_n)
    report.info(f"{args.kind} counts up to n={args.max_n}")
    if args.format == "json":
        _emit(to_json({"kind": table.kind, "values": {str(n): str(c) for n, c in table.items()}}))
    else:
        _emit(rows_to_csv(["n", "count"], [[n, c] for n, c in table.items()]))


def cmd_dist(args, settings: Settings) -> None:
    bound = (
        settings.enumeration.free_distribution_bound
        if args.kind == "free"
        else settings.enumeration.rooted_distribution_bound
    )
    table = orbit_distribution(args.kind, args.n, bound=bound, progress=not report.is_quiet())
    if args.format == "json":
        _emit(to_json({"kind": table.kind, "n": table.n, "counts": {str(k): c for k, c in table.counts.items()}}))
    else:
        _emit(rows_to_csv(["k", "count"], sorted(table.counts.items())))


def cmd_enumerate(args, settings: Settings) -> None:
    bound = settings.enumeration.max_order
    trees = iter_free(args.n, bound) if args.kind == "free" else iter_rooted(args.n, bound)
    count = 0
    for t in trees:
        count += 1
        if args.emit == "codes":
            code = canonical_free_code(t) if args.kind == "free" else canonical_rooted_code(t)
            _emit(code.to_hex())
        elif args.emit == "trees":
            _emit(format_free_tree(t) if args.kind == "free" else format_rooted_tree(t))
    if args.emit == "count":
        _emit(str(count))
    report.info(f"enumerated {count} {args.kind} trees of order {args.n}")


def cmd_sample(args, settings: Settings) -> None:
    seed = _seed(args, settings)
    base = RngState(seed)
    total = SampleReport(args.n, samples=0, seed=seed)
    acceptance = args.acceptance or settings.sampling.acceptance
    for i in range(args.count):
        rng = base.substream(i)
        if args.kind == "rooted":
            tree = sample_rooted_uniform(args.n, rng)
            total.merge(SampleReport(args.n, draws=1, seed=seed))
            text = format_rooted_tree(tree)
        else:
            tree, rep = sample_free_uniform(args.n, rng, acceptance=acceptance, retry_cap=settings.sampling.retry_cap)
            total.merge(rep)
            text = format_free_tree(tree)
        if not args.stats_only:
            _emit(text)
    if args.stats_only:
        _emit(to_json(total.to_dict()))
    report.info(f"{total.samples} {args.kind} trees, {total.draws} rooted draws, {total.rejections} rejections")


def cmd_pattern(args, settings: Settings) -> None:
    text = Path(args.tree).read_text(encoding="utf-8")
    rooted = parse_rooted_tree(text) if args.rooted_input else None
    tree = rooted.to_free() if rooted is not None else parse_free_tree(text)
    if args.star is not None:
        pattern, occurrences = star_pattern(args.star), count_star_pattern(tree, args.star)
    elif args.path is not None:
        pattern, occurrences = path_pattern(args.path), count_path_pattern(tree, args.path)
    else:
        pattern = resolve_pattern(args.pattern)
        occurrences = count_pattern_rooted(rooted, pattern) if rooted is not None else count_pattern(tree, pattern)
    if args.oracle:
        expected = count_pattern_oracle(
            tree,
            pattern,
            max_tree=settings.patterns.oracle_max_tree,
            max_pattern=settings.patterns.oracle_max_pattern,
        )
        if expected != occurrences:
            raise ExactnessError(f"{pattern.name}: {occurrences} occurrences, brute force finds {expected}")
        report.info(f"brute-force check agrees: {expected}")
    _emit(to_json(PatternCount(tree.n, pattern.name, occurrences).to_dict()))


def cmd_constants(args, settings: Settings) -> None:
    asym = with_overrides(
        settings,
        "asymptotics",
        max_n=args.max_n,
        truncation=args.truncation,
        richardson_depth=args.depth,
    ).asymptotics
    report.info(f"constants from truncation {asym.truncation}, counts up to n={asym.max_n}")
    _emit(to_json(compute_constants(asym).to_dict()))


def _seed(args, settings: Settings) -> int:
    return settings.experiments.seed if args.seed is None else args.seed


def _experiment_config(args, settings: Settings, experiment: str) -> ExperimentConfig:
    overrides = {
        "experiment": experiment,
        "kind": getattr(args, "kind", None),
        "n": getattr(args, "n", None),
        "samples": getattr(args, "samples", None),
        "seed": args.seed,
        "pattern": getattr(args, "pattern", None),
        "workers": args.workers,
        "out": args.out,
        "mode": getattr(args, "mode", None),
        "acceptance": getattr(args, "acceptance", None),
    }
    if args.config:
        return load_experiment_config(Path(args.config), **overrides)
    defaults = {
        "seed": settings.experiments.seed,
        "workers": settings.experiments.workers,
        "acceptance": settings.sampling.acceptance,
        "retry_cap": settings.sampling.retry_cap,
    }
    defaults.update({k: v for k, v in overrides.items() if v is not None})
    return ExperimentConfig.from_mapping(defaults)


def _run_experiment(args, settings: Settings, experiment: str) -> None:
    cfg = _experiment_config(args, settings, experiment)
    report.phase("Phase", f"{cfg.experiment} experiment: {cfg.kind} n={cfg.n}, mode={cfg.mode}, seed={cfg.seed}")
    if cfg.experiment == "exact-dist":
        bound = (
            settings.enumeration.free_distribution_bound
            if cfg.kind == "free"
            else settings.enumeration.rooted_distribution_bound
        )
    else:
        bound = settings.enumeration.max_order
    result = run_experiment(cfg, settings.experiments.normality, bound)
    if cfg.out:
        written = write_outputs(result, Path(cfg.out))
        report.info("wrote " + ", ".join(str(p) for p in written.values()))
    if cfg.experiment == "exact-dist" and args.format == "csv":
        _emit(rows_to_csv(["k", "count"], sorted(result.distribution.counts.items())))
    else:
        _emit(render(result, args.format or "json"))


def cmd_fixed_exp(args, settings: Settings) -> None:
    if args.tree:
        tree = parse_free_tree(Path(args.tree).read_text(encoding="utf-8"))
        if args.oracle and orbits_free(tree) != brute_force_orbits(tree, settings.trees.oracle_bound):
            raise ExactnessError("orbit partition disagrees with the brute-force automorphism oracle")
        _emit(to_json(analyze_fixed_vertices(tree).to_dict()))
        return
    _run_experiment(args, settings, "fixed")


# ─── argument parsing ─────────────────────────────────────────────────────
def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="64-bit seed (default: config.yaml experiments.seed)")
    common.add_argument("--workers", type=int, default=None, help="worker processes for Monte Carlo runs")
    common.add_argument("--out", default=None, help="directory for summary.json / samples.csv")
    common.add_argument("--format", choices=["csv", "json"], default=None)
    common.add_argument("--config", default=None, help="experiment config file (JSON or YAML)")
    common.add_argument("--settings", default=str(CONFIG_PATH), help="settings file (default: config.yaml)")
    common.add_argument("--quiet", action="store_true", help="silence [Info] messages and progress bars")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="census", description="Unlabeled tree census: counts, orbits, sampling, patterns, constants.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler: Callable, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(handler=handler)
        return p

    p = add("count", cmd_count, "exact counts r_n / t_n")
    p.add_argument("--kind", choices=["rooted", "free"], required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--route", choices=["recurrence", "exp"], default="recurrence", help="rooted only: counting route")

    p = add("dist", cmd_dist, "exact distribution of the number of vertex classes")
    p.add_argument("--kind", choices=["rooted", "free"], required=True)
    p.add_argument("--n", type=int, required=True)

    p = add("enumerate", cmd_enumerate, "list every tree of one order")
    p.add_argument("--kind", choices=["rooted", "free"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--emit", choices=["codes", "trees", "count"], default="count")

    p = add("sample", cmd_sample, "uniform random trees")
    p.add_argument("--kind", choices=["rooted", "free"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--acceptance", choices=["centroid", "coin"], default=None)
    p.add_argument("--stats-only", action="store_true")

    p = add("pattern", cmd_pattern, "pattern occurrences in one tree, counted as distinct vertex subsets")
    p.add_argument("--tree", required=True, help="tree file (free format unless --rooted-input)")
    p.add_argument("--rooted-input", action="store_true")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--pattern", help="pattern name (edge, path3, star3, chair, ...) or free-tree file")
    which.add_argument("--star", type=int)
    which.add_argument("--path", type=int)
    p.add_argument("--oracle", action="store_true", help="cross-check against the brute-force subset oracle")

    p = add("constants", cmd_constants, "x0, b1, C, D and mu_r")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--truncation", type=int, default=None)
    p.add_argument("--depth", type=int, default=None, help="Richardson depth")

    def add_experiment(name: str, experiment: str, help_text: str, handler: Optional[Callable] = None):
        p = add(name, handler or (lambda a, s: _run_experiment(a, s, experiment)), help_text)
        p.add_argument("--kind", choices=["rooted", "free"], default=None)
        p.add_argument("--n", type=int, default=None)
        p.add_argument("--samples", type=int, default=None)
        p.add_argument("--mode", choices=["sample", "exhaustive"], default=None)
        p.add_argument("--acceptance", choices=["centroid", "coin"], default=None)
        return p

    add_experiment("orbit-exp", "orbit", "Monte Carlo / exhaustive number of vertex classes")
    p = add_experiment("fixed-exp", "fixed", "fixed vertices of free trees", handler=cmd_fixed_exp)
    p.add_argument("--tree", default=None, help="analyze one free tree file instead of sampling")
    p.add_argument("--oracle", action="store_true", help="cross-check orbits against the brute-force oracle")
    p = add_experiment("pattern-exp", "pattern", "pattern occurrence statistics")
    p.add_argument("--pattern", default=None)
    p = add("exact-dist", lambda a, s: _run_experiment(a, s, "exact-dist"), "exact distribution with summary statistics")
    p.add_argument("--kind", choices=["rooted", "free"], default=None)
    p.add_argument("--n", type=int, default=None)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments, load settings and run one subcommand.

    Library errors are mapped onto exit codes here and only here.
    """
    args = build_parser().parse_args(argv)
    report.set_quiet(args.quiet)
    try:
        settings = load_config(Path(args.settings))
        settings = with_overrides(settings, "experiments", seed=args.seed, workers=args.workers)
        args.handler(args, settings)
    except FeasibilityError as e:
        report.error(str(e))
        return EXIT_BOUND
    except (ExactnessError, SamplerRetryError, ConvergenceError) as e:
        report.error(str(e))
        return EXIT_INTERNAL
    except (ValueError, OSError) as e:
        report.error(str(e))
        return EXIT_INVALID
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
