#!/usr/bin/env python3
"""Benchmark the enumerators on the worst-case 3^(n/3) clique family.

Counts go to stdout (deterministic), timing to stderr."""

import argparse
import sys

from cliquetrace import bench, render_bench


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--kmax", type=int, default=6)
    parser.add_argument("--reps", type=int, default=3)
    args = parser.parse_args()

    algos = ["bk_basic", "bk_pivot", "bk_degeneracy", "ostergard2001"]
    for k in range(2, args.kmax + 1):
        result = bench(f"moonmoser:k={k}", algos, repetitions=args.reps)
        sys.stdout.write(render_bench(result))
        sys.stderr.write(render_bench(result, with_timing=True))


if __name__ == "__main__":
    main()
