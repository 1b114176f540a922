from census.sampling.free import (
    DEFAULT_RETRY_CAP,
    SampleReport,
    acceptance_rate_prediction,
    sample_free_uniform,
)
from census.sampling.rng import ALGORITHM, RngState
from census.sampling.rooted import RootedSampler, sample_rooted_uniform, sampler_for
