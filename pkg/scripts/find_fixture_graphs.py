#!/usr/bin/env python3
"""Search for small graphs matching the fixture property tables.

`fixtures/edge_degree_34.edges` was found with this script: a random scan
over small graphs keeping those whose edge degrees span exactly [3, 4] and
whose shifted value ratio (|E| + edge-degree matching) / (|E| + maximum)
rounds to .979. Run with --verify to re-check every shipped fixture against
its documented properties instead of searching.
"""
import argparse
import itertools
import random
import sys
from fractions import Fraction
from pathlib import Path

from fed.graph import Edge, Graph, edge_degree_profile, load_graph_file, to_edge_list
from fed.matching import constrained_fm, mwfm, qhfm, quality

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def search(target: float, tol: float, trials: int, seed: int) -> None:
    rng = random.Random(seed)
    seen = set()
    for _ in range(trials):
        n = rng.randint(5, 8)
        pairs = list(itertools.combinations(range(n), 2))
        m = rng.randint(n, min(len(pairs), n + 6))
        edges = tuple(sorted(rng.sample(pairs, m)))
        if edges in seen:
            continue
        seen.add(edges)
        g = Graph(n, tuple(Edge(u, v) for u, v in edges))
        if min(g.degrees) == 0:
            continue
        prof = edge_degree_profile(g)
        if (prof.delta, prof.Delta) != (3, 4):
            continue
        s_hat = float(quality(g, qhfm(g)).s_hat)
        if abs(s_hat - target) < tol:
            print(f"# n={n}, |E|={len(edges)}, s_hat={s_hat:.6f}")
            print(to_edge_list(g))
            return
    print("no graph found; raise --trials", file=sys.stderr)


def verify() -> int:
    failures = 0

    def check(name: str, ok: bool) -> None:
        nonlocal failures
        print(f"{name}: {'ok' if ok else 'MISMATCH'}")
        failures += 0 if ok else 1

    book = load_graph_file(FIXTURES / "triangle_book.edges")
    prof = edge_degree_profile(book)
    check(
        "triangle_book",
        len(book.edges) == 9
        and prof.delta == prof.Delta == 5
        and qhfm(book).value == Fraction(9, 5)
        and mwfm(book).value == 2
        and quality(book, qhfm(book)).s_hat == Fraction(54, 55),
    )

    hub = load_graph_file(FIXTURES / "hub_triangles.edges")
    prof = edge_degree_profile(hub)
    check(
        "hub_triangles",
        len(hub.edges) == 7
        and (prof.delta, prof.Delta) == (2, 5)
        and qhfm(hub).value == 2
        and mwfm(hub).value == 3
        and constrained_fm(hub, Fraction(5, 4), 5).value == Fraction(13, 5),
    )

    deg34 = load_graph_file(FIXTURES / "edge_degree_34.edges")
    prof = edge_degree_profile(deg34)
    check(
        "edge_degree_34",
        (prof.delta, prof.Delta) == (3, 4)
        and qhfm(deg34).value == Fraction(11, 3)
        and mwfm(deg34).value == 4
        and quality(deg34, qhfm(deg34)).s_hat == Fraction(47, 48),
    )
    return failures


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--verify", action="store_true", help="re-check shipped fixtures")
    ap.add_argument("--target", type=float, default=0.979)
    ap.add_argument("--tol", type=float, default=5e-4)
    ap.add_argument("--trials", type=int, default=200_000)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()
    if args.verify:
        return verify()
    search(args.target, args.tol, args.trials, args.seed)
    return 0


if __name__ == "__main__":
    sys.exit(main())
