"""Energy-floor calculus and the max-min ratio optimizations.

For an edge carrying matching fraction m whose rotation angle obeys
cos(2 theta) = exp(-kappa m), dropping the non-negative higher-order terms
of the two-point correlator gives a closed-form floor on the edge energy:

    floor(kappa, m) = (1 + exp(-2k(1-m)) + 2 sqrt(1-exp(-2km)) exp(-k(1-m))) / 2

Dividing by (1 + m), the edge's share of the matching upper bound, yields a
per-edge ratio floor. The guaranteed approximation ratio for a matching
whose fractions live in a set or interval is the best worst case

    max over kappa > 0 of  min over admissible m  of  ratio_floor(kappa, m)

solved here by a dense grid plus golden-section refinement for the inner
minimum and a bracketed scan plus golden-section for the outer maximum.
The full-interval [0, 1] solution is half the golden ratio, reached at
kappa = ln(golden)/2; both closed forms are kept as cross-check constants.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

GOLDEN = (1 + math.sqrt(5)) / 2
FULL_RANGE_RATIO = GOLDEN / 2  # analytic max-min over m in [0, 1]
FULL_RANGE_KAPPA = math.log(GOLDEN) / 2
TWO_REGULAR_RATIO = (3 + math.sqrt(5)) / 6  # analytic max of ratio_floor(., 1/2)

_KAPPA_MAX = 2.0
_KAPPA_MIN = 1e-4
_INNER_GRID = 10_000


class RatioError(ValueError):
    pass


def edge_energy_floor(kappa: float, m: float) -> float:
    """Lower bound on the energy of an edge with fraction m at parameter kappa."""
    if kappa <= 0:
        raise RatioError(f"kappa must be positive, got {kappa}")
    if not 0 <= m <= 1:
        raise RatioError(f"fraction must lie in [0, 1], got {m}")
    s = math.sqrt(max(0.0, 1 - math.exp(-2 * kappa * m)))
    return 0.5 * (1 + math.exp(-2 * kappa * (1 - m)) + 2 * s * math.exp(-kappa * (1 - m)))


def edge_ratio_floor(kappa: float, m: float) -> float:
    """Energy floor divided by (1 + m), the edge's share of the matching bound."""
    return edge_energy_floor(kappa, m) / (1 + m)


def _ratio_floor_vec(kappa: float, xs: np.ndarray) -> np.ndarray:
    s = np.sqrt(np.maximum(0.0, 1 - np.exp(-2 * kappa * xs)))
    t = 0.5 * (1 + np.exp(-2 * kappa * (1 - xs)) + 2 * s * np.exp(-kappa * (1 - xs)))
    return t / (1 + xs)


def _golden_section(f: Callable[[float], float], a: float, b: float, tol: float) -> tuple[float, float]:
    """Maximize f on [a, b]; returns (argmax, max). Assumes unimodal-enough f."""
    inv = 1 / GOLDEN
    c = b - (b - a) * inv
    d = a + (b - a) * inv
    fc, fd = f(c), f(d)
    while abs(b - a) > tol:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - (b - a) * inv
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + (b - a) * inv
            fd = f(d)
    x = (a + b) / 2
    return x, f(x)


@dataclass(frozen=True)
class RatioSolution:
    """Solution of one max-min problem.

    `minimizers` lists where the inner minimum over fractions is attained
    (several points when the minimum ties, e.g. both interval endpoints).
    """

    kappa: float
    ratio: float
    lo: float
    hi: float
    fraction_set: tuple[float, ...] | None
    minimizers: tuple[float, ...]


def _inner_min_interval(kappa: float, lo: float, hi: float, grid: int) -> tuple[float, tuple[float, ...]]:
    if hi - lo < 1e-15:
        return edge_ratio_floor(kappa, lo), (lo,)
    xs = np.linspace(lo, hi, grid)
    vals = _ratio_floor_vec(kappa, xs)
    vmin = float(vals.min())
    # Refine every near-minimal grid cluster; the minimum may be interior.
    near = np.flatnonzero(vals <= vmin + 1e-7)
    clusters: list[tuple[int, int]] = []
    start = prev = int(near[0])
    for i in near[1:]:
        if i == prev + 1:
            prev = int(i)
        else:
            clusters.append((start, prev))
            start = prev = int(i)
    clusters.append((start, prev))
    candidates: list[tuple[float, float]] = []
    for s, e in clusters:
        a = xs[max(0, s - 1)]
        b = xs[min(grid - 1, e + 1)]
        x, _ = _golden_section(lambda t: -edge_ratio_floor(kappa, t), a, b, 1e-10)
        # The floor has a sqrt cusp at m = 0, which golden section approaches
        # only like sqrt(tol); compare the bracket ends explicitly so boundary
        # minima are exact.
        for cand in (x, float(a), float(b)):
            candidates.append((cand, edge_ratio_floor(kappa, cand)))
    best_val = min(v for _, v in candidates)
    minimizers = tuple(sorted({round(x, 9) for x, v in candidates if v <= best_val + 1e-9}))
    return best_val, minimizers


def _inner_min_set(kappa: float, fracs: Sequence[float]) -> tuple[float, tuple[float, ...]]:
    vals = [(edge_ratio_floor(kappa, m), m) for m in fracs]
    vmin = min(v for v, _ in vals)
    return vmin, tuple(m for v, m in vals if v <= vmin + 1e-9)


def _outer_max(inner: Callable[[float], float]) -> tuple[float, float]:
    kappas = np.geomspace(_KAPPA_MIN, _KAPPA_MAX, 384)
    vals = [inner(float(k)) for k in kappas]
    i = int(np.argmax(vals))
    a = float(kappas[max(0, i - 1)])
    b = float(kappas[min(len(kappas) - 1, i + 1)])
    # Far tighter than the 1e-6 reporting tolerance so tied inner minima
    # (e.g. both interval endpoints) agree to 1e-9 at the solved kappa.
    kappa, val = _golden_section(inner, a, b, 1e-10)
    # Keep the scan winner if refinement landed on a worse point.
    if vals[i] > val:
        kappa, val = float(kappas[i]), vals[i]
    return kappa, val


def solve_range(
    lo: float,
    hi: float,
    kappa: float | None = None,
    grid: int = _INNER_GRID,
) -> RatioSolution:
    """Max-min ratio when fractions may take any value in [lo, hi].

    With `kappa` given, only the inner minimum is evaluated at that
    parameter value. A degenerate interval lo == hi reduces to the
    single-fraction problem.
    """
    if not (0 <= lo <= hi <= 1):
        raise RatioError(f"malformed fraction interval [{lo}, {hi}]")

    def inner(k: float) -> float:
        return _inner_min_interval(k, lo, hi, grid)[0]

    if kappa is None:
        kappa, ratio = _outer_max(inner)
    else:
        if kappa <= 0:
            raise RatioError(f"kappa must be positive, got {kappa}")
        ratio = inner(kappa)
    _, minimizers = _inner_min_interval(kappa, lo, hi, grid)
    return RatioSolution(kappa, ratio, lo, hi, None, minimizers)


def solve_fraction_set(
    fractions: Iterable[float],
    kappa: float | None = None,
) -> RatioSolution:
    """Max-min ratio over an explicit set of matching fractions.

    Small instances are certified this way: the inner minimum runs over the
    fractions the matching actually uses instead of their whole interval,
    which can only raise (never lower) the guarantee.
    """
    fracs = sorted({float(m) for m in fractions})
    if not fracs:
        raise RatioError("empty fraction set")
    if fracs[0] < 0 or fracs[-1] > 1:
        raise RatioError(f"fractions must lie in [0, 1], got {fracs}")

    def inner(k: float) -> float:
        return _inner_min_set(k, fracs)[0]

    if kappa is None:
        kappa, ratio = _outer_max(inner)
    else:
        if kappa <= 0:
            raise RatioError(f"kappa must be positive, got {kappa}")
        ratio = inner(kappa)
    _, minimizers = _inner_min_set(kappa, fracs)
    return RatioSolution(kappa, ratio, fracs[0], fracs[-1], tuple(fracs), minimizers)


def solve_full_range(kappa: float | None = None) -> RatioSolution:
    """Max-min ratio over the full fraction range [0, 1].

    The optimum is half the golden ratio at kappa = ln(golden)/2, attained
    by the inner minimum at both endpoints; see FULL_RANGE_RATIO and
    FULL_RANGE_KAPPA for the closed forms.
    """
    return solve_range(0.0, 1.0, kappa=kappa)


def solve_regular(d: int) -> RatioSolution:
    """Best ratio for the uniform fraction 1/d used on d-regular graphs."""
    if not isinstance(d, int) or isinstance(d, bool):
        raise RatioError(f"degree must be an integer, got {d!r}")
    if d < 2:
        raise RatioError(f"degree must be at least 2, got {d}")
    return solve_fraction_set([1.0 / d])


def regular_table(d_max: int) -> list[tuple[int, float, float]]:
    """Rows (d, ratio, kappa) for d = 2 .. d_max."""
    if d_max < 2:
        raise RatioError(f"d_max must be at least 2, got {d_max}")
    rows = []
    for d in range(2, d_max + 1):
        sol = solve_regular(d)
        rows.append((d, sol.ratio, sol.kappa))
    return rows
