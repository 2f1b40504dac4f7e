"""Exhaustive enumeration of walk paths, the ground truth behind every formula.

Paths of length N are encoded as the N-bit words: bit t set means step +1 at
time t+1, so the whole path set is exactly range(2**N) and one left-to-right
pass per word yields positions, sojourn time and class flags.  Shards fix
the low bits of the word (equivalently the first steps of the path); shard
histograms merge by entrywise integer addition, so any partitioning and any
execution order give identical tables.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from ._backend import get_kernels
from .core import PathClass, SojournTable

DEFAULT_CAP = 28
CAP_ENV_VAR = "SOJOURN_ENUM_CAP"


class EnumerationCapError(RuntimeError):
    """The requested enumeration would exceed the configured cap."""


def default_cap() -> int:
    """Enumeration cap in steps: the environment override or the default 28."""
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ValueError(f"{CAP_ENV_VAR} must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise ValueError(f"{CAP_ENV_VAR} must be positive, got {cap}")
    return cap


@dataclass(frozen=True)
class EnumerationConfig:
    """Bounds and sharding for one exhaustive run.

    ``partitions`` must be a power of two no larger than 2**steps; it only
    splits the work, never the result.
    """

    steps: int
    cap: int = field(default_factory=default_cap)
    partitions: int = 1

    def __post_init__(self):
        if self.steps < 1:
            raise ValueError("steps must be at least 1")
        if self.cap < 1:
            raise ValueError("cap must be at least 1")
        if self.steps > self.cap:
            raise EnumerationCapError(
                f"enumerating 2**{self.steps} paths exceeds the cap of {self.cap} steps; "
                f"raise the cap (or set {CAP_ENV_VAR}) if you really mean it")
        p = self.partitions
        if p < 1 or p & (p - 1):
            raise ValueError(f"partitions must be a power of two, got {p}")
        if p > 2 ** self.steps:
            raise ValueError(f"cannot split 2**{self.steps} paths into {p} partitions")


def enumerate_counts(config: EnumerationConfig, threads: int = 1) -> SojournTable:
    """Exact per-class counts by sojourn time over all 2**steps paths."""
    kernels = get_kernels()
    num_steps = config.steps
    shard_bits = config.partitions.bit_length() - 1

    def run(shard: int):
        return kernels.enumerate_shard(num_steps, shard, shard_bits)

    shards = range(config.partitions)
    if threads > 1 and config.partitions > 1:
        with ThreadPoolExecutor(max_workers=min(threads, config.partitions)) as pool:
            results = list(pool.map(run, shards))
    else:
        results = [run(shard) for shard in shards]

    totals = [np.zeros(num_steps + 1, dtype=np.int64) for _ in range(3)]
    for parts in results:
        for acc, part in zip(totals, parts):
            acc += part
    return _table_from_raw(num_steps, *totals)


def _table_from_raw(num_steps: int, all_raw, bridge_raw, positive_raw) -> SojournTable:
    """Compress raw sojourn histograms into a SojournTable.

    Even lengths admit only even sojourn times; a count in an odd slot would
    mean a kernel bug, not data.
    """
    arrays = (all_raw, bridge_raw, positive_raw)
    if num_steps % 2 == 0:
        for arr in arrays:
            if arr[1::2].any():
                raise RuntimeError("odd sojourn time observed on an even-length walk")
        arrays = tuple(arr[0::2] for arr in arrays)
    return SojournTable(
        steps=num_steps,
        all_counts=tuple(int(v) for v in arrays[0]),
        bridge_counts=tuple(int(v) for v in arrays[1]),
        positive_end_counts=tuple(int(v) for v in arrays[2]),
    )


def count_paths_brute(steps: int, sojourn_value: int, path_class: PathClass,
                      config: EnumerationConfig | None = None) -> int:
    """One cell of the enumeration table: paths with the given sojourn time and class.

    Returns 0 for sojourn values that no path attains (for instance odd
    values on even lengths); out-of-range values are errors.
    """
    if config is None:
        config = EnumerationConfig(steps=steps)
    elif config.steps != steps:
        raise ValueError("config.steps disagrees with steps")
    if not 0 <= sojourn_value <= steps:
        raise ValueError(f"sojourn time {sojourn_value} outside [0, {steps}]")
    table = enumerate_counts(config)
    if steps % 2 == 0:
        if sojourn_value % 2:
            return 0
        return table.count(sojourn_value // 2, path_class)
    return table.count(sojourn_value, path_class)
