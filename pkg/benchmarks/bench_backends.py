"""Throughput comparison of the compiled and pure-Python walk kernels.

Both kernels run the same walk schedule from the same seed, so besides
timing this doubles as an agreement check: the histograms must be
bit-identical or the run aborts.

    python benchmarks/bench_backends.py --walks 50000
"""

import argparse
from fractions import Fraction
from time import perf_counter

from gsawtrap.lattices import LatticeTopology
from gsawtrap.simulate import backend_name, run_walks

CASES = [
    ("square-ladder-two-sided", Fraction(1), False),
    ("square-ladder-one-sided", Fraction(2), True),
    ("triangular-ladder-two-sided", Fraction(1), False),
    ("infinite-square", Fraction(1), False),
    ("infinite-honeycomb", Fraction(1), False),
]


def main() -> int:
    parser = argparse.ArgumentParser(
        description="compare Monte Carlo kernel backends")
    parser.add_argument("--walks", type=int, default=50_000)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()

    if backend_name() != "compiled":
        print("compiled kernel unavailable; nothing to compare against")
        return 1

    header = (f"{'case':34s} {'pure walks/s':>14s} "
              f"{'compiled walks/s':>18s} {'speedup':>9s}")
    print(f"walks per case: {args.walks}, seed: {args.seed}")
    print(header)
    print("-" * len(header))
    for kind, C, wall in CASES:
        topology = LatticeTopology(kind, wall=wall)
        label = kind + (" (wall)" if wall else "")
        if C != 1:
            label += f" C={C}"

        rates = {}
        results = {}
        for backend in ("pure", "compiled"):
            t0 = perf_counter()
            summary = run_walks(topology, C=C, walks=args.walks,
                                seed=args.seed, backend=backend)
            rates[backend] = args.walks / (perf_counter() - t0)
            results[backend] = (summary.lengths, summary.widths,
                                summary.wall_hits)
        if results["pure"] != results["compiled"]:
            print(f"{label}: BACKEND MISMATCH")
            return 1
        print(f"{label:34s} {rates['pure']:14.0f} "
              f"{rates['compiled']:18.0f} "
              f"{rates['compiled'] / rates['pure']:8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
