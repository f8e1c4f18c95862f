#!/usr/bin/env python3
"""Compare the compiled persistence kernel against the pure-Python one.

Runs both kernels over random series of several sizes, checks they agree,
and reports wall-clock time per sweep plus the speedup.

Usage:
    python benchmarks/bench_persistence.py [--sizes 64,1024,16384] [--repeat 5]
"""

import argparse
import random
import statistics
import time

from chartnotes.detector import KERNEL, _kernel, _kernel_py, persistence_pairs, pure_python_pairs


def time_sweeps(fn, series_list, repeat):
    """Median seconds to sweep every series in the list once."""
    samples = []
    for _ in range(repeat):
        started = time.perf_counter()
        for values in series_list:
            fn(values)
        samples.append(time.perf_counter() - started)
    return statistics.median(samples)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--sizes",
        default="64,1024,16384",
        help="comma-separated series lengths to benchmark",
    )
    parser.add_argument(
        "--repeat", type=int, default=5, help="timing repetitions (median wins)"
    )
    parser.add_argument(
        "--series-per-size", type=int, default=20, help="random series per length"
    )
    parser.add_argument("--seed", type=int, default=7, help="RNG seed")
    args = parser.parse_args()

    sizes = [int(s) for s in args.sizes.split(",")]
    rng = random.Random(args.seed)

    print(f"active kernel: {KERNEL}")
    header = (
        f"{'length':>8}  {'stage':>10}  {'compiled':>12}  {'pure python':>12}"
        f"  {'speedup':>8}"
    )
    print(header)
    print("-" * len(header))

    for size in sizes:
        series_list = [
            [rng.uniform(-100.0, 100.0) for _ in range(size)]
            for _ in range(args.series_per_size)
        ]
        for values in series_list:
            assert persistence_pairs(values) == pure_python_pairs(values), (
                "kernels disagree on a random series — benchmark aborted"
            )
        rows = [
            # raw sweep isolates the kernels; end-to-end includes the shared
            # validation, dataclass construction and sorting around them
            ("sweep", _kernel.persistence_sweep, _kernel_py.persistence_sweep),
            ("end-to-end", persistence_pairs, pure_python_pairs),
        ]
        for stage, compiled_fn, pure_fn in rows:
            compiled = time_sweeps(compiled_fn, series_list, args.repeat)
            pure = time_sweeps(pure_fn, series_list, args.repeat)
            per_compiled = compiled / args.series_per_size
            per_pure = pure / args.series_per_size
            print(
                f"{size:>8}  {stage:>10}  {per_compiled * 1e3:>10.3f}ms"
                f"  {per_pure * 1e3:>10.3f}ms  {pure / compiled:>7.1f}x"
            )


if __name__ == "__main__":
    main()
