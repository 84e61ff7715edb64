#!/usr/bin/env python3
"""Variational ceiling scan on cycles.

Cycles are the known weak spot of the edge-rotation states: the uniform
fraction 1/2 guarantees the two-regular ratio on even cycles, while odd
cycles fall short of it. This script optimizes all angles from random
restarts on C_n and records what the states can actually reach against the
exact top eigenvalue, as evidence for where the variational ceiling sits.

Writes one CSV row per restart: n, restart, energy, lambda_max, ratio.
"""
import argparse
import csv
import sys

from fed.graph import Edge, Graph
from fed.oracle import optimize_thetas
from fed.ratio import TWO_REGULAR_RATIO


def cycle(n: int) -> Graph:
    return Graph(n, tuple(Edge(i, (i + 1) % n) for i in range(n)))


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--min", type=int, default=4)
    ap.add_argument("--max", type=int, default=8)
    ap.add_argument("--restarts", type=int, default=8)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default=None, help="CSV path (default: stdout)")
    args = ap.parse_args()

    handle = open(args.out, "w", newline="") if args.out else sys.stdout
    writer = csv.writer(handle)
    writer.writerow(["n", "restart", "energy", "lambda_max", "ratio"])
    for n in range(args.min, args.max + 1):
        res = optimize_thetas(cycle(n), restarts=args.restarts, seed=args.seed)
        for k, energy in enumerate(res.restart_energies):
            writer.writerow([n, k, energy, res.lambda_max, energy / res.lambda_max])
        print(
            f"# C_{n}: best ratio {res.ratio:.6f} "
            f"(two-regular reference {TWO_REGULAR_RATIO:.6f})",
            file=sys.stderr,
        )
    if args.out:
        handle.close()
    return 0


if __name__ == "__main__":
    sys.exit(main())
