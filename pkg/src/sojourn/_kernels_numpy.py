"""Pure-numpy kernels, the fallback backend.

Block-vectorized versions of the loops in sojourn._kernels_numba, with the
same contracts and identical results bit for bit.  Blocks bound peak memory;
their size never affects the output, only how work is chunked.
"""

import numpy as np

_BLOCK = 1 << 14


def _expand_steps(words, two_n):
    """Unpack bit-packed rows into an int8 step matrix of -1/+1 columns."""
    rows = words.shape[0]
    steps = np.empty((rows, two_n), dtype=np.int8)
    for w in range((two_n + 63) // 64):
        lo = 64 * w
        width = min(64, two_n - lo)
        shifts = np.arange(lo, lo + width, dtype=np.uint64) - np.uint64(lo)
        bits = (words[:, w, None] >> shifts[None, :]) & np.uint64(1)
        steps[:, lo:lo + width] = bits.astype(np.int8) * 2 - 1
    return steps


def _stats_from_steps(steps):
    """Sojourn time, end-positive and end-at-origin flags from a step matrix."""
    x = np.cumsum(steps, axis=1, dtype=np.int32)
    prev = np.empty_like(x)
    prev[:, 0] = 0
    prev[:, 1:] = x[:, :-1]
    on_positive = (x >= 0) & (prev >= 0)
    sojourn = on_positive.sum(axis=1).astype(np.int64)
    ends_positive = on_positive[:, -1].copy()
    ends_at_origin = x[:, -1] == 0
    return sojourn, ends_positive, ends_at_origin


def enumerate_shard(num_steps, shard_index, shard_bits):
    """Count one shard of the exhaustive enumeration.

    Same contract as the numba twin: the shard covers every word whose low
    ``shard_bits`` bits equal ``shard_index``; returns int64 histograms over
    raw sojourn time for all paths, bridges, and positive-end paths.
    """
    all_counts = np.zeros(num_steps + 1, dtype=np.int64)
    bridge_counts = np.zeros(num_steps + 1, dtype=np.int64)
    positive_counts = np.zeros(num_steps + 1, dtype=np.int64)
    count = 1 << (num_steps - shard_bits)
    for start in range(0, count, _BLOCK):
        stop = min(start + _BLOCK, count)
        j = np.arange(start, stop, dtype=np.uint64)
        words = ((j << np.uint64(shard_bits)) | np.uint64(shard_index))[:, None]
        steps = _expand_steps(words, num_steps)
        sojourn, ends_positive, ends_at_origin = _stats_from_steps(steps)
        all_counts += np.bincount(sojourn, minlength=num_steps + 1)
        bridge_counts += np.bincount(sojourn[ends_at_origin], minlength=num_steps + 1)
        positive_counts += np.bincount(sojourn[ends_positive], minlength=num_steps + 1)
    return all_counts, bridge_counts, positive_counts


def sojourn_stats(words, two_n):
    """Sojourn time and end flags for a batch of bit-packed paths."""
    rows = words.shape[0]
    sojourn = np.empty(rows, dtype=np.int64)
    ends_positive = np.empty(rows, dtype=np.bool_)
    ends_at_origin = np.empty(rows, dtype=np.bool_)
    for start in range(0, rows, _BLOCK):
        stop = min(start + _BLOCK, rows)
        steps = _expand_steps(words[start:stop], two_n)
        s, ep, eo = _stats_from_steps(steps)
        sojourn[start:stop] = s
        ends_positive[start:stop] = ep
        ends_at_origin[start:stop] = eo
    return sojourn, ends_positive, ends_at_origin


def bridge_sojourn(uniforms, two_n):
    """Sojourn times of uniformly shuffled bridges.

    Same contract as the numba twin; the shuffle is vectorized across rows
    with one fancy-indexed swap per Fisher-Yates position.
    """
    rows = uniforms.shape[0]
    sojourn = np.empty(rows, dtype=np.int64)
    half = two_n // 2
    for start in range(0, rows, _BLOCK):
        stop = min(start + _BLOCK, rows)
        block = stop - start
        steps = np.empty((block, two_n), dtype=np.int8)
        steps[:, :half] = 1
        steps[:, half:] = -1
        rows_idx = np.arange(block)
        col = 0
        for p in range(two_n - 1, 0, -1):
            j = (uniforms[start:stop, col] * (p + 1)).astype(np.int64)
            col += 1
            at_p = steps[:, p].copy()
            at_j = steps[rows_idx, j].copy()
            steps[:, p] = at_j
            steps[rows_idx, j] = at_p
        sojourn[start:stop] = _stats_from_steps(steps)[0]
    return sojourn
