"""
Worker-partitioned Monte Carlo.

Sample indices 0..count-1 are cut into contiguous ranges, one per worker.
Sample i always draws from substream i of the seed, so the records do not
depend on the worker count, and merging in worker order restores index order.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor, as_completed
from itertools import islice
from typing import Callable, Dict, Iterable, Iterator, List, Tuple

from tqdm import tqdm

from census.utils import report

Record = Dict[str, object]
RangeTask = Callable[..., List[Record]]


def chunked(iterable: Iterable, size: int) -> Iterator[list]:
    """Yield successive chunks (lists) of length `size` from `iterable` (last chunk may be smaller)."""
    it = iter(iterable)
    while chunk := list(islice(it, size)):
        yield chunk


def partition(count: int, workers: int) -> List[Tuple[int, int]]:
    """Contiguous [start, stop) ranges covering 0..count-1, at most `workers` of them."""
    size = max(1, math.ceil(count / max(1, workers)))
    return [(chunk[0], chunk[-1] + 1) for chunk in chunked(range(count), size)]


def run_partitioned(task: RangeTask, payload, count: int, workers: int, desc: str = "samples") -> List[Record]:
    """
    Run task(payload, start, stop) over the partition and concatenate the
    results in range order.

    Behavior:
      - workers == 1 runs in-process, one range, with a tqdm bar per sample.
      - workers > 1 uses a ProcessPoolExecutor; `task` and `payload` must be
        picklable (module-level function, frozen dataclass).
      - A failing range re-raises its exception after the pool shuts down.
    """
    ranges = partition(count, workers)
    if workers <= 1 or len(ranges) == 1:
        return task(payload, 0, count, progress=desc)

    report.info(f"{desc}: {count} across {len(ranges)} workers")
    results: Dict[int, List[Record]] = {}
    with ProcessPoolExecutor(max_workers=len(ranges)) as executor:
        futures = {executor.submit(task, payload, start, stop): idx for idx, (start, stop) in enumerate(ranges)}
        for future in tqdm(as_completed(futures), total=len(futures), desc=desc, unit="range", disable=report.is_quiet()):
            results[futures[future]] = future.result()
    return [rec for idx in range(len(ranges)) for rec in results[idx]]
