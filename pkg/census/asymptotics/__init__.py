from census.asymptotics.constants import (
    AsymptoticConstants,
    compute_b1,
    compute_constants,
    d_from_b1,
    estimate_mu_r,
    extrapolate_C_D,
    singularity_gap,
    solve_singularity,
)
from census.asymptotics.richardson import Estimate, extrapolate, richardson
from census.asymptotics.series import SeriesTruncation, evaluate_r, evaluate_t
