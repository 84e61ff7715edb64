"""Acceptance gate: every release criterion at its stated tolerance.

Each test prints one PASS/FAIL line (run with -s to see them on success).
Tolerances are pinned here and nowhere else; loosening them is a release
decision, not a test fix.
"""
import math
import random
import time
from fractions import Fraction

from fed.certificate import certify
from fed.graph import Edge, Graph, edge_degree_profile, load_graph_file
from fed.magic import ThetaAssignment, assign_thetas, total_energy
from fed.matching import constrained_fm, mwfm, qhfm, quality
from fed.oracle import (
    build_state,
    epr_lambda_max,
    optimize_thetas,
    pair_expectations,
    verify_fm_bound,
)
from fed.ratio import (
    FULL_RANGE_KAPPA,
    FULL_RANGE_RATIO,
    edge_energy_floor,
    regular_table,
    solve_full_range,
    solve_range,
)

from conftest import fixture_path, random_feasible_matching, random_graph
from test_ratio import REFERENCE_TABLE

TWO_REGULAR = (3 + math.sqrt(5)) / 6


def report(name: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f"  ({detail})" if detail else ""
    print(f"ACCEPTANCE {name}: {status}{suffix}")
    assert ok, f"{name}: {detail}"


def test_reference_table_reproduction():
    start = time.monotonic()
    rows = regular_table(10)
    elapsed = time.monotonic() - start
    worst = 0.0
    for d, r, k in rows:
        r_ref, k_ref = REFERENCE_TABLE[d]
        worst = max(worst, abs(r - r_ref), abs(k - k_ref))
    ok = worst <= 1e-3 and elapsed < 10.0
    report(
        "table d=2..10 within 0.001",
        ok,
        f"max deviation {worst:.2e}, {elapsed:.1f}s",
    )


def test_golden_ratio_constants():
    sol = solve_full_range()
    dr = abs(sol.ratio - FULL_RANGE_RATIO)
    dk = abs(sol.kappa - FULL_RANGE_KAPPA)
    report(
        "full-range solution matches golden-ratio closed form",
        dr <= 1e-4 and dk <= 1e-4,
        f"|dr|={dr:.2e}, |dkappa|={dk:.2e}",
    )


def test_ratio_monotone_to_fifty():
    start = time.monotonic()
    rows = regular_table(50)
    elapsed = time.monotonic() - start
    ratios = [r for _, r, _ in rows]
    strict = all(b > a for a, b in zip(ratios, ratios[1:]))
    report(
        "ratio strictly increasing for d=2..50",
        strict and elapsed < 60.0,
        f"{elapsed:.1f}s",
    )


def test_named_examples():
    # complete bipartite K(3,6): uniform fractions 1/6 are already maximum
    k36 = load_graph_file(fixture_path("k36.edges"))
    cert1 = certify(k36, qhfm(k36))
    ok1 = cert1.guarantee >= 0.934 and cert1.s_hat == 1

    # boxed interval [1/5, 4/5]
    sol = solve_range(0.2, 0.8)
    ok2 = abs(sol.ratio - 0.868) <= 2e-3

    # 7-edge hub fixture: boxed optimum exactly 13/5, shifted ratio 9/10
    hub = load_graph_file(fixture_path("hub_triangles.edges"))
    prof = edge_degree_profile(hub)
    boxed = constrained_fm(hub, Fraction(5, 4), 5)
    ok3 = (
        len(hub.edges) == 7
        and (prof.delta, prof.Delta) == (2, 5)
        and boxed.value == Fraction(13, 5)
        and qhfm(hub).value == 2
        and mwfm(hub).value == 3
        and quality(hub, qhfm(hub)).s_hat == Fraction(9, 10)
    )

    # 9-edge book fixture: reconstruction properties plus exact shifted ratio
    book = load_graph_file(fixture_path("triangle_book.edges"))
    bprof = edge_degree_profile(book)
    ok4 = (
        len(book.edges) == 9
        and bprof.delta == bprof.Delta == 5
        and qhfm(book).value == Fraction(9, 5)
        and mwfm(book).value == 2
        and quality(book, qhfm(book)).s_hat == Fraction(54, 55)
    )

    report(
        "named examples (K36 / boxed interval / 7-edge / 9-edge fixtures)",
        ok1 and ok2 and ok3 and ok4,
        f"K36 guarantee {cert1.guarantee:.4f}, interval ratio {sol.ratio:.4f}",
    )


def test_oracle_equivalence_closed_forms():
    from fed.magic import expect_pq, expect_qp, expect_zz

    rng = random.Random(101)
    worst = 0.0
    for _ in range(200):
        g = random_graph(rng, max_n=10)
        thetas = ThetaAssignment(
            tuple(rng.uniform(0, math.pi / 4) for _ in g.edges)
        )
        state = build_state(g, thetas)
        for e in g.edges:
            qp, pq, zz = pair_expectations(state, g.vertex_count, e.u, e.v)
            worst = max(
                worst,
                abs(expect_qp(g, thetas, (e.u, e.v)) - qp),
                abs(expect_pq(g, thetas, (e.u, e.v)) - pq),
                abs(expect_zz(g, thetas, (e.u, e.v)) - zz),
            )
    report(
        "closed forms match statevector on 200 random graphs",
        worst <= 1e-9,
        f"max |closed - state| = {worst:.2e}",
    )


def test_matching_bound_on_random_graphs():
    rng = random.Random(202)
    worst = math.inf
    for i in range(100):
        g = random_graph(rng, max_n=10, weighted=(i % 2 == 0))
        worst = min(worst, verify_fm_bound(g).slack)
    report(
        "matching bound slack >= -1e-8 on 100 random graphs",
        worst >= -1e-8,
        f"min slack {worst:.2e}",
    )


def test_certificate_soundness_against_spectrum():
    rng = random.Random(303)
    margin = math.inf
    for _ in range(100):
        g = random_graph(rng, max_n=10)
        cert = certify(g, qhfm(g))
        lam = epr_lambda_max(g).lambda_max
        margin = min(margin, cert.energy / lam - cert.guarantee)
    report(
        "certified guarantee below true ratio on 100 random graphs",
        margin >= -1e-9,
        f"min (achieved - guarantee) = {margin:.2e}",
    )


def test_variational_ceiling_on_k22():
    g = Graph(4, (Edge(0, 2), Edge(0, 3), Edge(1, 2), Edge(1, 3)))
    res = optimize_thetas(g, restarts=32, seed=424242)
    ratios = [e / res.lambda_max for e in res.restart_energies]
    attained = abs(res.ratio - TWO_REGULAR) <= 1e-3
    never_above = all(r <= TWO_REGULAR + 1e-3 for r in ratios)
    report(
        "variational optimum on K(2,2) equals the two-regular ratio",
        attained and never_above,
        f"best {res.ratio:.6f} vs {TWO_REGULAR:.6f}",
    )


def test_per_edge_energy_floor():
    rng = random.Random(505)
    violations = 0
    checked = 0
    for _ in range(200):
        g = random_graph(rng, max_n=10)
        fm = random_feasible_matching(rng, g)
        kappa = rng.uniform(0.02, 1.0)
        rep = total_energy(g, assign_thetas(g, fm, kappa))
        for rec, m in zip(rep.edges, fm.fractions):
            checked += 1
            if rec.g < edge_energy_floor(kappa, float(m)) - 1e-12:
                violations += 1
    report(
        "per-edge energy floor never violated",
        violations == 0,
        f"{checked} edges checked, {violations} violations",
    )
