"""
Experiment output files.

summary.json  one JSON object, keys sorted, floats in Python's shortest repr
samples.csv   one row per record, columns in first-record order

Both are pure functions of the result, so equal configs give byte-identical
files.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import Dict, Sequence

from census.experiments.parallel import Record
from census.experiments.runners import ExperimentResult
from census.utils.paths import SAMPLES_FILE, SUMMARY_FILE, ensure_output_dir


def to_json(data: object) -> str:
    return json.dumps(data, sort_keys=True, indent=2, allow_nan=False) + "\n"


def records_to_csv(records: Sequence[Record]) -> str:
    if not records:
        return ""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(records[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(records)
    return buf.getvalue()


def rows_to_csv(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def write_outputs(result: ExperimentResult, out_dir: Path, write_samples: bool = True) -> Dict[str, Path]:
    """Write summary.json (always) and samples.csv (when there are records and it is wanted)."""
    out_dir = ensure_output_dir(out_dir)
    written: Dict[str, Path] = {}
    summary_path = out_dir / SUMMARY_FILE
    summary_path.write_text(to_json(result.summary()), encoding="utf-8")
    written["summary"] = summary_path
    if write_samples and result.records:
        samples_path = out_dir / SAMPLES_FILE
        samples_path.write_text(records_to_csv(result.records), encoding="utf-8")
        written["samples"] = samples_path
    return written


def render(result: ExperimentResult, fmt: str) -> str:
    """Text for stdout: the JSON summary, or the per-record CSV."""
    if fmt == "json":
        return to_json(result.summary())
    if fmt == "csv":
        return records_to_csv(result.records)
    raise ValueError(f"unknown output format {fmt!r}")
