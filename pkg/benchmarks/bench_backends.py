#!/usr/bin/env python3
"""Times the numba and numpy kernel backends on the hot paths.

Runs each kernel on identical inputs under both backends, checks the outputs
agree exactly, and prints a timing table.  Usage:

    python3 benchmarks/bench_backends.py [--enum-steps 22] [--mc-half-steps 1000]
        [--mc-samples 100000] [--repeat 3]
"""

import argparse
import time

import numpy as np

from sojourn._backend import get_kernels, numba_available


def best_of(repeat, fn):
    best = float("inf")
    result = None
    for _ in range(repeat):
        started = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - started)
    return best, result


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--enum-steps", type=int, default=22)
    parser.add_argument("--mc-half-steps", type=int, default=1000)
    parser.add_argument("--mc-samples", type=int, default=100_000)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = ["numpy"]
    if numba_available():
        backends.append("numba")
    else:
        print("numba not importable; timing the numpy backend only")

    two_n = 2 * args.mc_half_steps
    rng = np.random.Generator(np.random.Philox(key=np.array([1, 0], dtype=np.uint64)))
    words = rng.integers(0, 2 ** 64, size=(args.mc_samples, (two_n + 63) // 64),
                         dtype=np.uint64)
    uniforms = rng.random((max(args.mc_samples // 10, 1), two_n - 1))

    cases = {
        "enumerate_shard": lambda k: k.enumerate_shard(args.enum_steps, 0, 0),
        "sojourn_stats": lambda k: k.sojourn_stats(words, two_n),
        "bridge_sojourn": lambda k: k.bridge_sojourn(uniforms, two_n),
    }

    timings = {}
    results = {}
    for backend in backends:
        kernels = get_kernels(backend)
        if backend == "numba":
            # compile outside the timed region
            kernels.enumerate_shard(4, 0, 0)
            kernels.sojourn_stats(words[:2], two_n)
            kernels.bridge_sojourn(uniforms[:2], two_n)
        for name, call in cases.items():
            timings[backend, name], results[backend, name] = best_of(
                args.repeat, lambda c=call, k=kernels: c(k))

    if len(backends) == 2:
        for name in cases:
            expected, actual = results["numpy", name], results["numba", name]
            if not isinstance(expected, tuple):
                expected, actual = (expected,), (actual,)
            for a, b in zip(expected, actual):
                assert np.array_equal(a, b), f"{name}: backends disagree"
        print("backend outputs agree exactly\n")

    sizes = {
        "enumerate_shard": f"2**{args.enum_steps} paths",
        "sojourn_stats": f"{args.mc_samples} x {two_n} steps",
        "bridge_sojourn": f"{uniforms.shape[0]} x {two_n} steps",
    }
    header = f"{'kernel':<18} {'workload':<24}" + "".join(
        f" {b + ' (s)':>12}" for b in backends)
    if len(backends) == 2:
        header += f" {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for name in cases:
        row = f"{name:<18} {sizes[name]:<24}"
        for backend in backends:
            row += f" {timings[backend, name]:>12.4f}"
        if len(backends) == 2:
            row += f" {timings['numpy', name] / timings['numba', name]:>8.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
