"""
Exception types shared across the package.

The CLI (main.py) maps these onto exit codes:
  InvalidTreeError, ConfigError  -> 2  (invalid input)
  FeasibilityError               -> 3  (bound refusal)
  ExactnessError, SamplerRetryError, ConvergenceError -> 4  (internal assertion)
"""


class CensusError(Exception):
    """Base class for every error raised on purpose by this package."""


class InvalidTreeError(CensusError, ValueError):
    """A tree, pattern or tree text record is malformed."""


class ConfigError(CensusError, ValueError):
    """config.yaml or an experiment config file could not be used."""


class FeasibilityError(CensusError):
    """
    A request exceeds a configured feasibility bound (exhaustive enumeration,
    brute-force oracles). The message always names the bound.
    """

    def __init__(self, what: str, requested: int, bound: int):
        self.what = what
        self.requested = requested
        self.bound = bound
        super().__init__(f"{what}: requested {requested} exceeds the feasibility bound {bound}")


class ExactnessError(CensusError, AssertionError):
    """An exact identity failed (non-zero remainder, table mismatch, ...)."""


class SamplerRetryError(CensusError, RuntimeError):
    """The free-tree rejection sampler reached its retry cap."""


class ConvergenceError(CensusError, RuntimeError):
    """A bracketed root search could not proceed (no sign change, no progress)."""
