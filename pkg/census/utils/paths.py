from pathlib import Path

# Files written under an experiment output directory:
#   summary.json  - one JSON object: config, statistics, extras
#   samples.csv   - one row per sample (only when rows were requested)
SUMMARY_FILE = "summary.json"
SAMPLES_FILE = "samples.csv"


def ensure_output_dir(base_path: Path) -> Path:
    """
    Ensure the experiment output directory exists and return it.

    Behavior:
      - Creates `base_path` and any missing parents.
      - Existing files are left alone; writers overwrite their own files only.
    """
    base_path.mkdir(parents=True, exist_ok=True)
    return base_path
