"""Shared graph builders and random-instance generators."""
from __future__ import annotations

import itertools
import random
from fractions import Fraction
from pathlib import Path

import pytest

from fed.graph import Edge, Graph
from fed.matching import FractionalMatching

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def fixture_path(name: str) -> Path:
    return FIXTURES / name


def path_graph(n: int) -> Graph:
    return Graph(n, tuple(Edge(i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph(n, tuple(Edge(i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(Edge(u, v) for u, v in itertools.combinations(range(n), 2)))


def complete_bipartite(l: int, m: int) -> Graph:
    edges = tuple(Edge(u, l + v) for u in range(l) for v in range(m))
    return Graph(l + m, edges)


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, tuple(Edge(0, k + 1) for k in range(leaves)))


def random_graph(
    rng: random.Random,
    max_n: int = 10,
    weighted: bool = False,
    multi: bool = False,
) -> Graph:
    """Random graph with at least one edge and no isolated-edge-set pathologies."""
    n = rng.randint(2, max_n)
    pairs = list(itertools.combinations(range(n), 2))
    p = rng.uniform(0.2, 0.8)
    chosen = [pq for pq in pairs if rng.random() < p]
    if not chosen:
        chosen = [rng.choice(pairs)]
    if multi:
        for pq in list(chosen):
            if rng.random() < 0.3:
                chosen.append(pq)
    edges = []
    for u, v in chosen:
        w = Fraction(rng.randint(1, 8), rng.randint(1, 4)) if weighted else Fraction(1)
        edges.append(Edge(u, v, w))
    return Graph(n, tuple(edges))


def random_feasible_matching(rng: random.Random, g: Graph, q: int = 8) -> FractionalMatching:
    """Random exact-rational fractions scaled into vertex-capacity feasibility."""
    fractions = [Fraction(rng.randint(0, q), q) for _ in g.edges]
    worst = max(
        (sum((fractions[k] for k in inc), Fraction(0)) for inc in g.adjacency if inc),
        default=Fraction(0),
    )
    if worst > 1:
        fractions = [m / worst for m in fractions]
    fractions = tuple(min(m, Fraction(1)) for m in fractions)
    value = sum((e.weight * m for e, m in zip(g.edges, fractions)), Fraction(0))
    fm = FractionalMatching("random", fractions, value)
    fm.check_feasible(g)
    return fm


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240817)
