"""Numba-compiled kernels, the fast default backend.

Same contracts as sojourn._kernels_numpy: one path per inner iteration, bit t
of a packed word is the step at time t+1 (set bit means +1).  The two modules
must stay bit-for-bit equivalent; the test suite holds both to that.
"""

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def enumerate_shard(num_steps, shard_index, shard_bits):
    """Count one shard of the exhaustive enumeration.

    The shard covers every word whose low ``shard_bits`` bits equal
    ``shard_index``.  Returns int64 histograms over raw sojourn time m in
    [0, num_steps] for all paths, bridges, and positive-end paths.
    """
    all_counts = np.zeros(num_steps + 1, dtype=np.int64)
    bridge_counts = np.zeros(num_steps + 1, dtype=np.int64)
    positive_counts = np.zeros(num_steps + 1, dtype=np.int64)
    count = 1 << (num_steps - shard_bits)
    for j in range(count):
        word = (j << shard_bits) | shard_index
        x = 0
        prev = 0
        m = 0
        for t in range(num_steps):
            prev = x
            if (word >> t) & 1:
                x += 1
            else:
                x -= 1
            if x >= 0 and prev >= 0:
                m += 1
        all_counts[m] += 1
        if x == 0:
            bridge_counts[m] += 1
        if x >= 0 and prev >= 0:
            positive_counts[m] += 1
    return all_counts, bridge_counts, positive_counts


@njit(cache=True, nogil=True)
def sojourn_stats(words, two_n):
    """Sojourn time and end flags for a batch of bit-packed paths.

    ``words`` has one row per path and ceil(two_n / 64) uint64 columns.
    Returns (sojourn int64, ends_positive bool, ends_at_origin bool).
    """
    rows = words.shape[0]
    sojourn = np.empty(rows, dtype=np.int64)
    ends_positive = np.empty(rows, dtype=np.bool_)
    ends_at_origin = np.empty(rows, dtype=np.bool_)
    one = np.uint64(1)
    for i in range(rows):
        x = 0
        prev = 0
        m = 0
        for t in range(two_n):
            prev = x
            bit = (words[i, t >> 6] >> np.uint64(t & 63)) & one
            if bit:
                x += 1
            else:
                x -= 1
            if x >= 0 and prev >= 0:
                m += 1
        sojourn[i] = m
        ends_positive[i] = x >= 0 and prev >= 0
        ends_at_origin[i] = x == 0
    return sojourn, ends_positive, ends_at_origin


@njit(cache=True, nogil=True)
def bridge_sojourn(uniforms, two_n):
    """Sojourn times of uniformly shuffled bridges.

    Each row of ``uniforms`` holds the two_n - 1 uniform draws of one
    Fisher-Yates shuffle of n up steps followed by n down steps.  The draw
    for swap position p maps to index int(u * (p + 1)); with u < 1 the
    product never truncates to p + 1.
    """
    rows = uniforms.shape[0]
    sojourn = np.empty(rows, dtype=np.int64)
    half = two_n // 2
    steps = np.empty(two_n, dtype=np.int64)
    for i in range(rows):
        for t in range(two_n):
            steps[t] = 1 if t < half else -1
        col = 0
        for p in range(two_n - 1, 0, -1):
            j = int(uniforms[i, col] * (p + 1))
            col += 1
            tmp = steps[p]
            steps[p] = steps[j]
            steps[j] = tmp
        x = 0
        prev = 0
        m = 0
        for t in range(two_n):
            prev = x
            x += steps[t]
            if x >= 0 and prev >= 0:
                m += 1
        sojourn[i] = m
    return sojourn
