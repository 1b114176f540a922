"""
Experiment configuration.

An ExperimentConfig can be built from CLI flags or read from a JSON / YAML
file whose keys mirror the fields below (JSON parses as YAML). Unknown keys
are rejected.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Any, Dict, Literal, Optional

from census.errors import ConfigError
from census.utils.yaml_utils import load_yaml

Experiment = Literal["orbit", "fixed", "pattern", "exact-dist"]
EXPERIMENTS = ("orbit", "fixed", "pattern", "exact-dist")


@dataclass(frozen=True)
class ExperimentConfig:
    experiment: str = "orbit"
    kind: str = "free"
    n: int = 10
    samples: int = 1000
    seed: int = 2024
    pattern: Optional[str] = None
    workers: int = 1
    out: Optional[str] = None
    mode: str = "sample"
    acceptance: str = "centroid"
    retry_cap: int = 1_000_000

    def __post_init__(self):
        if self.experiment not in EXPERIMENTS:
            raise ConfigError(f"unknown experiment {self.experiment!r} (expected one of {', '.join(EXPERIMENTS)})")
        if self.kind not in ("rooted", "free"):
            raise ConfigError(f"kind must be 'rooted' or 'free', got {self.kind!r}")
        if self.n < 1:
            raise ConfigError(f"n must be >= 1, got {self.n}")
        if self.samples < 1:
            raise ConfigError(f"samples must be >= 1, got {self.samples}")
        if self.workers < 1:
            raise ConfigError(f"workers must be >= 1, got {self.workers}")
        if self.mode not in ("sample", "exhaustive"):
            raise ConfigError(f"mode must be 'sample' or 'exhaustive', got {self.mode!r}")
        if self.acceptance not in ("centroid", "coin"):
            raise ConfigError(f"acceptance must be 'centroid' or 'coin', got {self.acceptance!r}")
        if self.experiment == "pattern" and not self.pattern:
            raise ConfigError("the pattern experiment needs a pattern (name or free-tree file)")

    @classmethod
    def from_mapping(cls, raw: Dict[str, Any]) -> "ExperimentConfig":
        if not isinstance(raw, dict):
            raise ConfigError("experiment config must be a mapping")
        known = {f.name for f in fields(cls)}
        unknown = set(raw) - known
        if unknown:
            raise ConfigError(f"Unknown experiment config key(s): {', '.join(sorted(map(str, unknown)))}")
        try:
            return cls(**raw)
        except TypeError as e:
            raise ConfigError(f"bad experiment config: {e}") from e

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def load_experiment_config(path: Path, **overrides: Any) -> ExperimentConfig:
    """Read a config file; non-None keyword overrides (CLI flags) win over file values."""
    raw = load_yaml(path)
    raw.update({k: v for k, v in overrides.items() if v is not None})
    return ExperimentConfig.from_mapping(raw)
