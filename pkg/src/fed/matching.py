"""Fractional matchings: LP-optimal, homogeneous, and quasi-homogeneous.

A fractional matching assigns each edge a fraction in [0, 1] so that the
fractions incident to any vertex sum to at most 1. The maximum-weight
fractional matching (mwfm) is solved with the exact rational simplex, so
values like 13/5 come out exactly. The constrained variant boxes every
fraction into [1/Delta, 1/delta], which concentrates the fractions at the
cost of some matching value; `quality` measures that cost.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from fed import lp
from fed.graph import Graph, edge_degree_profile


class MatchingError(ValueError):
    pass


@dataclass(frozen=True)
class FractionalMatching:
    kind: str  # mwfm | hfm | qhfm | constrained
    fractions: tuple[Fraction, ...]  # per edge index
    value: Fraction  # sum of weight * fraction
    degenerate: bool = False
    bounds: tuple[Fraction, Fraction] | None = None  # box for constrained kind

    def recompute_value(self, g: Graph) -> Fraction:
        return sum((e.weight * m for e, m in zip(g.edges, self.fractions)), Fraction(0))

    def check_feasible(self, g: Graph) -> None:
        if len(self.fractions) != len(g.edges):
            raise MatchingError("matching does not cover the edge set")
        for k, m in enumerate(self.fractions):
            if not 0 <= m <= 1:
                raise MatchingError(f"edge {k}: fraction {m} outside [0, 1]")
        for v, incident in enumerate(g.adjacency):
            load = sum((self.fractions[k] for k in incident), Fraction(0))
            if load > 1:
                raise MatchingError(
                    f"vertex {g.label(v)}: incident fractions sum to {load} > 1"
                )


@dataclass(frozen=True)
class MatchingQuality:
    """Value ratios of a matching against the unconstrained optimum.

    `s` is value / mwfm value; `s_hat` shifts both by the total weight,
    (w_G + value) / (w_G + mwfm value), which is what enters the energy
    guarantee. Always s <= s_hat <= 1.
    """

    s: Fraction
    s_hat: Fraction


def _solve_box(
    g: Graph,
    lo: tuple[Fraction, ...],
    hi: tuple[Fraction, ...],
    kind: str,
    bounds: tuple[Fraction, Fraction] | None = None,
) -> FractionalMatching:
    ne = len(g.edges)
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for v, incident in enumerate(g.adjacency):
        if not incident:
            continue
        cap = Fraction(1) - sum((lo[k] for k in incident), Fraction(0))
        if cap < 0:
            raise MatchingError(
                f"vertex {g.label(v)}: lower bounds alone exceed capacity "
                f"(degree {len(incident)} times the minimum fraction is > 1)"
            )
        row = [Fraction(0)] * ne
        for k in incident:
            row[k] += 1
        rows.append(row)
        rhs.append(cap)
    for k in range(ne):
        span = hi[k] - lo[k]
        if span < 0:
            raise MatchingError(f"edge {k}: empty fraction box")
        row = [Fraction(0)] * ne
        row[k] = Fraction(1)
        rows.append(row)
        rhs.append(span)

    res = lp.maximize([e.weight for e in g.edges], rows, rhs)
    fractions = tuple(x + l for x, l in zip(res.x, lo))
    value = res.value + sum((e.weight * l for e, l in zip(g.edges, lo)), Fraction(0))
    fm = FractionalMatching(kind, fractions, value, res.degenerate, bounds)
    fm.check_feasible(g)
    return fm


def mwfm(g: Graph) -> FractionalMatching:
    """Maximum-weight fractional matching, an exact LP vertex.

    On unit-weight graphs a polytope vertex is half-integral, so the
    fractions land in {0, 1/2, 1} (disjoint edges plus odd cycles).
    """
    ne = len(g.edges)
    zeros = tuple(Fraction(0) for _ in range(ne))
    ones = tuple(Fraction(1) for _ in range(ne))
    return _solve_box(g, zeros, ones, "mwfm")


def hfm(g: Graph, d: int) -> FractionalMatching:
    """Homogeneous matching m_e = 1/d on a d-regular graph."""
    if d < 1:
        raise MatchingError(f"degree must be positive, got {d}")
    for v, deg in enumerate(g.degrees):
        if deg != d:
            raise MatchingError(
                f"vertex {g.label(v)} has degree {deg}, so the graph is not {d}-regular"
            )
    frac = Fraction(1, d)
    fractions = tuple(frac for _ in g.edges)
    value = sum((e.weight * frac for e in g.edges), Fraction(0))
    fm = FractionalMatching("hfm", fractions, value)
    fm.check_feasible(g)
    return fm


def qhfm(g: Graph) -> FractionalMatching:
    """Quasi-homogeneous matching m_e = 1/d_e from the edge degree.

    Feasible on any graph: the fractions at a vertex v sum to at most
    deg(v) * (1/deg(v)) = 1 because every incident edge has d_e >= deg(v).
    """
    profile = edge_degree_profile(g)
    fractions = tuple(Fraction(1, d) for d in profile.edge_degrees)
    value = sum((e.weight * m for e, m in zip(g.edges, fractions)), Fraction(0))
    fm = FractionalMatching("qhfm", fractions, value)
    fm.check_feasible(g)
    return fm


def constrained_fm(
    g: Graph,
    delta: Fraction | int | str,
    Delta: Fraction | int | str | None,
) -> FractionalMatching:
    """Best matching with every fraction boxed into [1/Delta, 1/delta].

    ``Delta=None`` drops the lower bound (fractions may be 0), so
    ``constrained_fm(g, 1, None)`` recovers the unconstrained optimum.
    """
    delta = Fraction(delta)
    if delta <= 0:
        raise MatchingError(f"delta must be positive, got {delta}")
    lo_val = Fraction(0) if Delta is None else 1 / Fraction(Delta)
    hi_val = min(Fraction(1), 1 / delta)
    if lo_val > hi_val:
        raise MatchingError(f"empty fraction box [{lo_val}, {hi_val}] (need delta <= Delta)")
    ne = len(g.edges)
    lo = tuple(lo_val for _ in range(ne))
    hi = tuple(hi_val for _ in range(ne))
    return _solve_box(g, lo, hi, "constrained", (lo_val, hi_val))


def quality(g: Graph, fm: FractionalMatching) -> MatchingQuality:
    """Value ratios of `fm` against the maximum-weight fractional matching.

    For unit weights the shift is the edge count; for weighted graphs it is
    the total weight, which is the quantity the energy bound actually uses.
    """
    fm.check_feasible(g)
    best = mwfm(g)
    w = g.total_weight
    return MatchingQuality(
        s=fm.value / best.value,
        s_hat=(w + fm.value) / (w + best.value),
    )


def merge_matching(g: Graph, fm: FractionalMatching) -> tuple[Graph, FractionalMatching]:
    """Fold parallel edges of (g, fm) into single edges with summed fractions.

    The state preparation and the matching bound both live at the level of
    vertex pairs: the pair fraction is the sum over parallel copies (still
    at most 1, since the copies share both endpoints), and the pair weight
    is the summed weight. Simple graphs pass through unchanged.
    """
    fm.check_feasible(g)
    if g.is_simple:
        return g, fm
    mg = g.merge_parallel()
    merged: list[Fraction] = []
    for _, _, ids in g.pairs:
        merged.append(sum((fm.fractions[k] for k in ids), Fraction(0)))
    fractions = tuple(merged)
    value = sum((e.weight * m for e, m in zip(mg.edges, fractions)), Fraction(0))
    mfm = FractionalMatching(fm.kind, fractions, value, fm.degenerate, None)
    mfm.check_feasible(mg)
    return mg, mfm


def to_json(fm: FractionalMatching) -> dict:
    def fmt(q: Fraction) -> str:
        return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"

    return {
        "kind": fm.kind,
        "value": fmt(fm.value),
        "fractions": {str(k): fmt(m) for k, m in enumerate(fm.fractions)},
        "degenerate": fm.degenerate,
    }
