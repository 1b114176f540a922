from pathlib import Path

import yaml

from census.errors import ConfigError


def load_yaml(path: Path) -> dict:
    """
    Load YAML from `path` and return a dict (empty dict if the file is empty).

    Notes:
    - Uses `yaml.CSafeLoader` when libyaml is available, `yaml.SafeLoader`
      otherwise. JSON files load through the same path (JSON is a YAML subset),
      which is how experiment config files written as JSON are read.
    - Parse errors and non-mapping documents are raised as ConfigError.
    """
    loader = getattr(yaml, "CSafeLoader", yaml.SafeLoader)
    try:
        with path.open("r", encoding="utf-8") as f:
            data = yaml.load(f, Loader=loader) or {}
    except yaml.YAMLError as exc:
        raise ConfigError(f"Failed to parse {path}: {exc}") from exc
    except OSError as exc:
        raise ConfigError(f"Cannot read {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError(f"{path} must contain a mapping at the top level")
    return data

