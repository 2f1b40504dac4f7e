"""Seeded sampling of walk paths and empirical sojourn statistics.

Randomness comes from Philox, a counter-based generator that makes
independent streams cheap and reproducible: a run with seed s splits its
sample budget over a fixed number of streams, stream w keyed (s, w).  Worker
threads only execute distinct streams and histograms merge by addition, so
the result is a pure function of the configuration, never of scheduling or
thread count.

Conditioning modes:

  all           every sampled path is kept.
  positive-end  rejection sampling; a path finishes on the positive side
                exactly when its reflection does not, so the acceptance
                probability is exactly 1/2.
  bridge        direct sampling, no rejection: a Fisher-Yates shuffle of n
                up steps and n down steps is a uniform bridge.

``samples`` always counts proposals, so under positive-end conditioning
about half of them survive into the histogram.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ._backend import get_kernels
from .core import PathClass, StepSequence

DEFAULT_STREAMS = 8


class DegenerateSampleError(RuntimeError):
    """Rejection left zero accepted samples, so no histogram exists."""


@dataclass(frozen=True)
class SamplerConfig:
    """One simulation run: paths of length 2 * half_steps, ``samples`` proposals."""

    half_steps: int
    samples: int
    seed: int
    conditioning: PathClass = PathClass.ALL
    streams: int = DEFAULT_STREAMS

    def __post_init__(self):
        if self.half_steps < 1:
            raise ValueError("half_steps must be at least 1")
        if self.samples < 1:
            raise ValueError("samples must be at least 1")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must fit in an unsigned 64-bit integer")
        if not isinstance(self.conditioning, PathClass):
            raise ValueError("conditioning must be a PathClass")
        if self.streams < 1:
            raise ValueError("streams must be at least 1")


@dataclass(frozen=True)
class EmpiricalHistogram:
    """Histogram of half the sojourn time over the accepted samples."""

    half_steps: int
    conditioning: PathClass
    counts: tuple[int, ...]
    accepted: int
    proposals: int

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(int(v) for v in self.counts))
        if len(self.counts) != self.half_steps + 1:
            raise ValueError(f"counts must have {self.half_steps + 1} cells")
        if any(v < 0 for v in self.counts):
            raise ValueError("counts contains a negative cell")
        if sum(self.counts) != self.accepted:
            raise ValueError("counts must sum to the accepted total")
        if not 0 < self.accepted <= self.proposals:
            raise ValueError("accepted must lie in (0, proposals]")

    def frequencies(self) -> dict[int, Fraction]:
        """Exact empirical frequencies count / accepted, indexed by k."""
        return {k: Fraction(c, self.accepted) for k, c in enumerate(self.counts)}


@dataclass(frozen=True)
class ConditionalEstimate:
    """Empirical estimate of the chance of finishing positive within one sojourn cell."""

    estimate: float
    std_error: float
    observations: int


def _stream_generator(seed: int, stream: int) -> np.random.Generator:
    key = np.array([seed, stream], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def _words_per_path(two_n: int) -> int:
    return (two_n + 63) // 64


def _block_rows(two_n: int) -> int:
    # Bounds per-block scratch to a few MiB.  A fixed function of the path
    # length alone, so the draw sequence never depends on the environment.
    return max(64, (1 << 21) // max(two_n, 64))


def _stream_quotas(total: int, streams: int) -> list[int]:
    base, extra = divmod(total, streams)
    return [base + (1 if i < extra else 0) for i in range(streams)]


def _half_sojourn(sojourn: np.ndarray) -> np.ndarray:
    if (sojourn & 1).any():
        raise RuntimeError("odd sojourn time on an even-length walk")
    return sojourn >> 1


def sample_path(half_steps: int, rng: np.random.Generator) -> StepSequence:
    """Draw one uniform path of length 2 * half_steps from the generator."""
    if half_steps < 1:
        raise ValueError("half_steps must be at least 1")
    two_n = 2 * half_steps
    words = rng.integers(0, 2 ** 64, size=_words_per_path(two_n), dtype=np.uint64)
    word = 0
    for i, w in enumerate(words):
        word |= int(w) << (64 * i)
    return StepSequence.from_bits(word, two_n)


def _run_stream(config: SamplerConfig, kernels, stream: int, quota: int):
    n = config.half_steps
    two_n = 2 * n
    rng = _stream_generator(config.seed, stream)
    hist = np.zeros(n + 1, dtype=np.int64)
    accepted = 0
    block = _block_rows(two_n)
    remaining = quota

    if config.conditioning is PathClass.BRIDGE:
        while remaining:
            b = min(block, remaining)
            uniforms = rng.random((b, two_n - 1))
            k = _half_sojourn(kernels.bridge_sojourn(uniforms, two_n))
            hist += np.bincount(k, minlength=n + 1)
            accepted += b
            remaining -= b
    else:
        keep_all = config.conditioning is PathClass.ALL
        wpp = _words_per_path(two_n)
        while remaining:
            b = min(block, remaining)
            words = rng.integers(0, 2 ** 64, size=(b, wpp), dtype=np.uint64)
            sojourn, ends_positive, _ = kernels.sojourn_stats(words, two_n)
            k = _half_sojourn(sojourn)
            if not keep_all:
                k = k[ends_positive]
            hist += np.bincount(k, minlength=n + 1)
            accepted += k.size
            remaining -= b
    return hist, accepted, quota


def simulate_sojourn(config: SamplerConfig, threads: int = 1) -> EmpiricalHistogram:
    """Histogram of half the sojourn time over sampled, conditioned paths."""
    kernels = get_kernels()
    quotas = _stream_quotas(config.samples, config.streams)

    def run(stream: int):
        return _run_stream(config, kernels, stream, quotas[stream])

    active = [s for s in range(config.streams) if quotas[s]]
    if threads > 1 and len(active) > 1:
        with ThreadPoolExecutor(max_workers=min(threads, len(active))) as pool:
            results = list(pool.map(run, active))
    else:
        results = [run(s) for s in active]

    counts = np.zeros(config.half_steps + 1, dtype=np.int64)
    accepted = 0
    proposals = 0
    for hist, acc, quota in results:
        counts += hist
        accepted += acc
        proposals += quota
    if accepted == 0:
        raise DegenerateSampleError(
            f"no sample satisfied the {config.conditioning.value} conditioning "
            f"in {proposals} proposals")
    return EmpiricalHistogram(
        half_steps=config.half_steps,
        conditioning=config.conditioning,
        counts=tuple(int(v) for v in counts),
        accepted=accepted,
        proposals=proposals,
    )


def estimate_conditional_positive(half_steps: int, samples: int, seed: int,
                                  streams: int = DEFAULT_STREAMS,
                                  threads: int = 1) -> dict[int, ConditionalEstimate]:
    """Per-cell empirical probability of finishing positive, from unconditioned draws.

    Returns an estimate for every half-sojourn value k observed at least
    once; never-observed cells are simply absent.  The standard error is the
    usual binomial sqrt(p (1 - p) / m) within the cell.
    """
    config = SamplerConfig(half_steps=half_steps, samples=samples, seed=seed,
                           conditioning=PathClass.ALL, streams=streams)
    kernels = get_kernels()
    n = config.half_steps
    two_n = 2 * n
    quotas = _stream_quotas(config.samples, config.streams)

    def run(stream: int):
        rng = _stream_generator(config.seed, stream)
        totals = np.zeros(n + 1, dtype=np.int64)
        positives = np.zeros(n + 1, dtype=np.int64)
        block = _block_rows(two_n)
        wpp = _words_per_path(two_n)
        remaining = quotas[stream]
        while remaining:
            b = min(block, remaining)
            words = rng.integers(0, 2 ** 64, size=(b, wpp), dtype=np.uint64)
            sojourn, ends_positive, _ = kernels.sojourn_stats(words, two_n)
            k = _half_sojourn(sojourn)
            totals += np.bincount(k, minlength=n + 1)
            positives += np.bincount(k[ends_positive], minlength=n + 1)
            remaining -= b
        return totals, positives

    active = [s for s in range(config.streams) if quotas[s]]
    if threads > 1 and len(active) > 1:
        with ThreadPoolExecutor(max_workers=min(threads, len(active))) as pool:
            results = list(pool.map(run, active))
    else:
        results = [run(s) for s in active]

    totals = np.zeros(n + 1, dtype=np.int64)
    positives = np.zeros(n + 1, dtype=np.int64)
    for t, p in results:
        totals += t
        positives += p

    estimates: dict[int, ConditionalEstimate] = {}
    for k in range(n + 1):
        m = int(totals[k])
        if m == 0:
            continue
        p_hat = positives[k] / m
        estimates[k] = ConditionalEstimate(
            estimate=float(p_hat),
            std_error=math.sqrt(p_hat * (1.0 - p_hat) / m),
            observations=m,
        )
    return estimates
