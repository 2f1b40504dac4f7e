"""Command-line front end: exact tables, verification sweeps, simulations.

Exit codes: 0 on success, 1 when a verification sweep finds a mismatch, 2
for usage or argument errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import closed_form, enumeration, limit_laws, monte_carlo, tables
from .core import PathClass
from .enumeration import EnumerationCapError, EnumerationConfig
from .limit_laws import LimitLaw, StepCdf
from .monte_carlo import DegenerateSampleError, SamplerConfig

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2

_CLASS_TOKENS = tuple(member.value for member in PathClass)
_LAW_TOKENS = tuple(member.value for member in LimitLaw)


def _integer(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")


def _positive_int(text: str) -> int:
    value = _integer(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _even_steps(text: str) -> int:
    value = _integer(text)
    if value < 2 or value % 2:
        raise argparse.ArgumentTypeError("must be a positive even step count")
    return value


def _even_sojourn(text: str) -> int:
    value = _integer(text)
    if value < 0 or value % 2:
        raise argparse.ArgumentTypeError(
            "must be an even sojourn time (odd values occur on no path of even length)")
    return value


def _seed(text: str) -> int:
    value = _integer(text)
    if not 0 <= value < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return value


def _add_output_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("csv", "json"), default="csv",
                        help="output format (default csv)")
    parser.add_argument("--out", metavar="PATH",
                        help="write the table to PATH instead of stdout")


def _emit(records, metadata: dict, args) -> None:
    if args.format == "json":
        text = tables.records_to_json(records, metadata)
    else:
        text = tables.records_to_csv(records)
    tables.write_text(text, args.out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sojourn",
        description="Exact combinatorics and simulation for sojourn times of "
                    "the simple random walk.")
    sub = parser.add_subparsers(dest="command", required=True)

    closed = sub.add_parser("closed", help="closed-form sojourn table for one class")
    closed.add_argument("--steps", type=_even_steps, required=True,
                        help="even walk length 2n")
    closed.add_argument("--class", dest="path_class", choices=_CLASS_TOKENS,
                        default="all", help="path class (default all)")
    _add_output_arguments(closed)
    closed.set_defaults(func=cmd_closed)

    enum = sub.add_parser("enumerate", help="exhaustive enumeration table for one class")
    enum.add_argument("--steps", type=_positive_int, required=True,
                      help="walk length (odd lengths allowed)")
    enum.add_argument("--class", dest="path_class", choices=_CLASS_TOKENS,
                      default="all", help="path class (default all)")
    enum.add_argument("--partitions", type=_positive_int, default=None,
                      help="power-of-two shard count (default: sized to --threads)")
    enum.add_argument("--threads", type=_positive_int, default=None,
                      help="worker threads (default: available parallelism)")
    enum.add_argument("--cap", type=_positive_int, default=None,
                      help=f"enumeration cap in steps (default {enumeration.DEFAULT_CAP}, "
                           f"or the {enumeration.CAP_ENV_VAR} environment variable)")
    _add_output_arguments(enum)
    enum.set_defaults(func=cmd_enumerate)

    verify = sub.add_parser(
        "verify", help="check the closed forms against exhaustive enumeration")
    verify.add_argument("--max-steps", type=_even_steps, default=16,
                        help="verify every even length up to this (default 16)")
    verify.add_argument("--lemma-max-n", type=_positive_int, default=200,
                        help="sweep the decomposition identity up to this n (default 200)")
    verify.add_argument("--partitions", type=_positive_int, default=None,
                        help="power-of-two shard count (default: sized to --threads)")
    verify.add_argument("--threads", type=_positive_int, default=None,
                        help="worker threads (default: available parallelism)")
    verify.add_argument("--cap", type=_positive_int, default=None,
                        help="enumeration cap in steps")
    verify.set_defaults(func=cmd_verify)

    condprob = sub.add_parser(
        "condprob", help="exact probability of finishing positive given the sojourn time")
    condprob.add_argument("--steps", type=_even_steps, required=True,
                          help="even walk length 2n")
    condprob.add_argument("--sojourn", type=_even_sojourn, required=True,
                          help="even sojourn time 2k")
    condprob.set_defaults(func=cmd_condprob)

    simulate = sub.add_parser("simulate", help="seeded Monte Carlo sojourn histogram")
    simulate.add_argument("--steps", type=_even_steps, required=True,
                          help="even walk length 2n")
    simulate.add_argument("--samples", type=_positive_int, required=True,
                          help="number of proposals")
    simulate.add_argument("--seed", type=_seed, required=True,
                          help="generator seed")
    simulate.add_argument("--condition", choices=_CLASS_TOKENS, default="all",
                          help="conditioning class (default all)")
    simulate.add_argument("--streams", type=_positive_int,
                          default=monte_carlo.DEFAULT_STREAMS,
                          help=f"independent generator streams "
                               f"(default {monte_carlo.DEFAULT_STREAMS})")
    simulate.add_argument("--threads", type=_positive_int, default=None,
                          help="worker threads (default: available parallelism)")
    _add_output_arguments(simulate)
    simulate.set_defaults(func=cmd_simulate)

    limit = sub.add_parser("limit", help="limit-law CDF on a uniform grid")
    limit.add_argument("--law", choices=_LAW_TOKENS, required=True)
    limit.add_argument("--points", type=_positive_int, default=1001,
                       help="grid points on [0, 1] (default 1001)")
    _add_output_arguments(limit)
    limit.set_defaults(func=cmd_limit)

    ks = sub.add_parser(
        "ks", help="Kolmogorov-Smirnov distance between a table and a limit law")
    ks.add_argument("--law", choices=_LAW_TOKENS, required=True)
    ks.add_argument("--input", required=True, metavar="PATH",
                    help="sojourn table written by closed, enumerate or simulate")
    ks.set_defaults(func=cmd_ks)

    return parser


def _default_threads() -> int:
    return os.cpu_count() or 1


def _partitions_for(threads: int, steps: int) -> int:
    if threads <= 1:
        return 1
    power = 1 << (threads - 1).bit_length()
    return min(power, 2 ** steps)


def _enumeration_config(steps: int, args) -> EnumerationConfig:
    threads = args.threads or _default_threads()
    partitions = args.partitions or _partitions_for(threads, steps)
    if args.cap is not None:
        return EnumerationConfig(steps=steps, cap=args.cap, partitions=partitions)
    return EnumerationConfig(steps=steps, partitions=partitions)


def _closed_counter(path_class: PathClass):
    return {
        PathClass.ALL: closed_form.count_by_sojourn,
        PathClass.BRIDGE: closed_form.count_bridges_by_sojourn,
        PathClass.POSITIVE_END: closed_form.count_positive_end_by_sojourn,
    }[path_class]


def cmd_closed(args) -> int:
    n = args.steps // 2
    path_class = PathClass.from_token(args.path_class)
    counter = _closed_counter(path_class)
    pmf = closed_form.sojourn_pmf(n, path_class)
    records = [
        tables.OutputRecord(k=k, count=counter(n, k), probability=pmf[k],
                            path_class=path_class.value, source="closed")
        for k in range(n + 1)
    ]
    metadata = {"steps": args.steps, "class": path_class.value, "source": "closed"}
    _emit(records, metadata, args)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    path_class = PathClass.from_token(args.path_class)
    config = _enumeration_config(args.steps, args)
    table = enumeration.enumerate_counts(config, threads=args.threads or _default_threads())
    counts = table.counts(path_class)
    total = sum(counts)
    # the k column is the table index: the half-sojourn k for even lengths,
    # the raw sojourn time for odd ones
    records = [
        tables.OutputRecord(
            k=index,
            count=count,
            probability=Fraction(count, total) if total else None,
            path_class=path_class.value,
            source="enumerated")
        for index, count in enumerate(counts)
    ]
    metadata = {"steps": args.steps, "class": path_class.value,
                "partitions": config.partitions, "source": "enumerated"}
    _emit(records, metadata, args)
    return EXIT_OK


def cmd_verify(args) -> int:
    threads = args.threads or _default_threads()
    mismatches = 0

    for steps in range(2, args.max_steps + 1, 2):
        config = _enumeration_config(steps, args)
        table = enumeration.enumerate_counts(config, threads=threads)
        n = steps // 2
        for path_class in PathClass:
            counter = _closed_counter(path_class)
            for k in range(n + 1):
                expected = table.count(k, path_class)
                actual = counter(n, k)
                if expected != actual:
                    mismatches += 1
                    print(f"MISMATCH (N={steps}, k={k}, class={path_class.value}, "
                          f"expected={expected}, actual={actual})")
        print(f"steps={steps}: closed forms match enumeration "
              f"({n + 1} cells x {len(PathClass)} classes)")

    for n in range(1, args.lemma_max_n + 1):
        for k in range(1, n):
            direct = closed_form.count_positive_end_by_sojourn(n, k)
            decomposed = closed_form.count_positive_end_by_sojourn_sum(n, k)
            if direct != decomposed:
                mismatches += 1
                print(f"MISMATCH decomposition (n={n}, k={k}, "
                      f"expected={direct}, actual={decomposed})")
    print(f"decomposition identity checked for all n <= {args.lemma_max_n}")

    if mismatches:
        print(f"verify: {mismatches} mismatch(es) found")
        return EXIT_VERIFY_FAILED
    print("verify: all checks passed")
    return EXIT_OK


def cmd_condprob(args) -> int:
    if args.sojourn > args.steps:
        raise ValueError("sojourn time cannot exceed the step count")
    probability = closed_form.conditional_positive_probability(
        args.steps // 2, args.sojourn // 2)
    if probability.denominator == 1:
        print(probability.numerator)
    else:
        print(f"{probability.numerator}/{probability.denominator} = "
              f"{closed_form.decimal_string(probability)}")
    return EXIT_OK


def cmd_simulate(args) -> int:
    config = SamplerConfig(
        half_steps=args.steps // 2,
        samples=args.samples,
        seed=args.seed,
        conditioning=PathClass.from_token(args.condition),
        streams=args.streams,
    )
    histogram = monte_carlo.simulate_sojourn(
        config, threads=args.threads or _default_threads())
    records = [
        tables.OutputRecord(k=k, count=count,
                            probability=Fraction(count, histogram.accepted),
                            path_class=config.conditioning.value, source="simulated")
        for k, count in enumerate(histogram.counts)
    ]
    metadata = {
        "steps": args.steps,
        "class": config.conditioning.value,
        "samples": config.samples,
        "seed": config.seed,
        "streams": config.streams,
        "accepted": histogram.accepted,
        "proposals": histogram.proposals,
        "source": "simulated",
    }
    _emit(records, metadata, args)
    return EXIT_OK


def cmd_limit(args) -> int:
    if args.points < 2:
        raise ValueError("the grid needs at least 2 points")
    law = LimitLaw.from_token(args.law)
    records = []
    for i in range(args.points):
        r = Fraction(i, args.points - 1)
        records.append(tables.OutputRecord(
            k=closed_form.decimal_string(r),
            count=None,
            probability=limit_laws.cdf(law, i / (args.points - 1)),
            path_class="",
            source="limit"))
    metadata = {"law": law.value, "points": args.points, "source": "limit"}
    _emit(records, metadata, args)
    return EXIT_OK


def cmd_ks(args) -> int:
    metadata, rows = tables.read_table(args.input)
    half_steps, counts = tables.sojourn_counts(metadata, rows)
    token = metadata.get("class")
    path_class = PathClass.from_token(token) if token else None
    step = StepCdf.from_counts(half_steps, counts, path_class=path_class)
    distance = limit_laws.ks_distance(step, LimitLaw.from_token(args.law))
    print(format(distance, ".12g"))
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, EnumerationCapError, DegenerateSampleError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
