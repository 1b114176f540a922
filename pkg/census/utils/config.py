"""
Settings loaded from config.yaml.

Every section is optional; missing keys fall back to the defaults below.
Unknown keys inside a known section are rejected so typos surface early.
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Any, Dict, Literal

from census.errors import ConfigError
from census.utils.yaml_utils import load_yaml

CONFIG_PATH = Path("config.yaml")

Acceptance = Literal["centroid", "coin"]


@dataclass(frozen=True)
class TreeSettings:
    oracle_bound: int = 10


@dataclass(frozen=True)
class EnumerationSettings:
    max_order: int = 18
    free_distribution_bound: int = 16
    rooted_distribution_bound: int = 15


@dataclass(frozen=True)
class SamplingSettings:
    retry_cap: int = 1_000_000
    acceptance: Acceptance = "centroid"


@dataclass(frozen=True)
class PatternSettings:
    oracle_max_tree: int = 20
    oracle_max_pattern: int = 8


@dataclass(frozen=True)
class AsymptoticSettings:
    truncation: int = 80
    max_n: int = 200
    richardson_depth: int = 3
    tol: float = 1e-13


@dataclass(frozen=True)
class NormalityThresholds:
    skewness: float = 0.2
    excess_kurtosis: float = 0.4
    ks: float = 0.03


@dataclass(frozen=True)
class ExperimentSettings:
    seed: int = 2024
    workers: int = 1
    normality: NormalityThresholds = field(default_factory=NormalityThresholds)


@dataclass(frozen=True)
class Settings:
    trees: TreeSettings = field(default_factory=TreeSettings)
    enumeration: EnumerationSettings = field(default_factory=EnumerationSettings)
    sampling: SamplingSettings = field(default_factory=SamplingSettings)
    patterns: PatternSettings = field(default_factory=PatternSettings)
    asymptotics: AsymptoticSettings = field(default_factory=AsymptoticSettings)
    experiments: ExperimentSettings = field(default_factory=ExperimentSettings)


DEFAULT_SETTINGS = Settings()


def _build(cls, raw: Any, section: str):
    """Instantiate dataclass `cls` from mapping `raw`, recursing into nested dataclasses."""
    if raw is None:
        return cls()
    if not isinstance(raw, dict):
        raise ConfigError(f"Section '{section}' must be a mapping")
    known = {f.name: f for f in fields(cls)}
    unknown = set(raw) - set(known)
    if unknown:
        raise ConfigError(f"Unknown key(s) in '{section}': {', '.join(sorted(map(str, unknown)))}")
    kwargs: Dict[str, Any] = {}
    for name, value in raw.items():
        default = getattr(cls(), name)
        if hasattr(default, "__dataclass_fields__"):
            kwargs[name] = _build(type(default), value, f"{section}.{name}")
        else:
            kwargs[name] = value
    return cls(**kwargs)


def settings_from_mapping(raw: dict) -> Settings:
    return _build(Settings, raw, "config")


def load_config(path: Path = CONFIG_PATH) -> Settings:
    """
    Load config.yaml into a Settings tree.

    Behavior:
      - Missing file: built-in defaults (the package works without a config file).
      - Unreadable / malformed file: ConfigError (the CLI exits with code 2).
    """
    if not path.exists():
        return DEFAULT_SETTINGS
    return settings_from_mapping(load_yaml(path))


def with_overrides(settings: Settings, section: str, **values) -> Settings:
    """Return a copy of `settings` with keys of one section replaced (None values are ignored)."""
    values = {k: v for k, v in values.items() if v is not None}
    if not values:
        return settings
    return replace(settings, **{section: replace(getattr(settings, section), **values)})
