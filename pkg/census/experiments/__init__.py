from census.experiments.config import EXPERIMENTS, ExperimentConfig, load_experiment_config
from census.experiments.output import records_to_csv, render, rows_to_csv, to_json, write_outputs
from census.experiments.parallel import chunked, partition, run_partitioned
from census.experiments.runners import (
    ExperimentResult,
    FixedVertexReport,
    analyze_fixed_vertices,
    collect_records,
    resolve_pattern,
    run_exhaustive_distribution,
    run_experiment,
    run_fixed_vertex_experiment,
    run_orbit_experiment,
    run_pattern_experiment,
    sample_range,
    variance_sweep,
)
from census.experiments.stats import (
    SampleStats,
    binomial_interval,
    describe,
    exponential_control,
    normality_check,
    standardize,
)
