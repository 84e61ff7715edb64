"""Closed-form EPR energy of matching-driven rotation states.

The state applies one commuting rotation exp(i theta P P) per edge to the
all-zeros state. Because parallel rotations on the same vertex pair compose
by adding their angles, every expectation value depends only on the summed
angle of each pair; the evaluators below therefore fold parallel edges
before applying the product formulas, which keeps them exact on multigraphs
(checked against the statevector oracle, not just on simple graphs).

For edge (i, j) with K the other pairs at i, L the other pairs at j, and T
the common neighbours (angles are the pair-summed ones):

    <Q_i P_j> = sin(2 t_ij) * prod over k in K of cos(2 t_ik)
    <P_i Q_j> = sin(2 t_ij) * prod over l in L of cos(2 t_jl)
    <Z_i Z_j> = sum over even subsets S of T of
                prod_{s in S} sin(2 t_is) sin(2 t_sj)
                * prod_{K minus S} cos * prod_{L minus S} cos

The even-subset sum telescopes into an even/odd parity recurrence over T,
so it costs O(|T|) despite its exponential-looking form; a configurable cap
on |T| remains for callers that prefer the statevector fallback on dense
neighbourhoods.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from fed.graph import Graph
from fed.matching import FractionalMatching
from fed.ratio import edge_energy_floor

DEFAULT_COMMON_NEIGHBOUR_CAP = 20


class MagicStateError(ValueError):
    pass


@dataclass(frozen=True)
class ThetaAssignment:
    """Per-edge rotation angles, optionally tagged with their matching origin.

    When built by `assign_thetas`, cos(2 theta_e) = exp(-kappa * m_e) holds
    exactly and every angle lies in [0, pi/4].
    """

    thetas: tuple[float, ...]
    kappa: float | None = None
    fractions: tuple[Fraction, ...] | None = None


def assign_thetas(g: Graph, fm: FractionalMatching, kappa: float) -> ThetaAssignment:
    """Angles theta_e = arccos(exp(-kappa m_e)) / 2 from a feasible matching."""
    if kappa <= 0:
        raise MagicStateError(f"kappa must be positive, got {kappa}")
    fm.check_feasible(g)
    thetas = tuple(math.acos(math.exp(-kappa * float(m))) / 2 for m in fm.fractions)
    return ThetaAssignment(thetas, kappa, fm.fractions)


def _pair_tables(g: Graph, thetas: ThetaAssignment):
    """Summed pair angles and per-vertex pair neighbourhoods."""
    if len(thetas.thetas) != len(g.edges):
        raise MagicStateError("theta assignment does not cover the edge set")
    angle: dict[tuple[int, int], float] = {}
    for _, (pair, _, ids) in enumerate(g.pairs):
        angle[pair] = sum(thetas.thetas[k] for k in ids)
    nbrs: dict[int, dict[int, float]] = {}
    for (u, v), t in angle.items():
        nbrs.setdefault(u, {})[v] = t
        nbrs.setdefault(v, {})[u] = t
    return angle, nbrs


def _pair_angle(angle: dict, i: int, j: int) -> float:
    key = (i, j) if i <= j else (j, i)
    if key not in angle:
        raise MagicStateError(f"no edge between vertices {i} and {j}")
    return angle[key]


def _cos_product(nbrs: dict, centre: int, exclude: int) -> float:
    prod = 1.0
    for other, t in nbrs[centre].items():
        if other != exclude:
            prod *= math.cos(2 * t)
    return prod


def expect_qp(g: Graph, thetas: ThetaAssignment, edge: tuple[int, int]) -> float:
    """<Q_i P_j> for edge (i, j); the cosine product runs over i's neighbours."""
    i, j = edge
    angle, nbrs = _pair_tables(g, thetas)
    t = _pair_angle(angle, i, j)
    return math.sin(2 * t) * _cos_product(nbrs, i, j)


def expect_pq(g: Graph, thetas: ThetaAssignment, edge: tuple[int, int]) -> float:
    """<P_i Q_j> for edge (i, j); the cosine product runs over j's neighbours."""
    return expect_qp(g, thetas, (edge[1], edge[0]))


def _zz_from_tables(
    angle: dict, nbrs: dict, i: int, j: int, max_common: int
) -> tuple[float, int]:
    t_ij = _pair_angle(angle, i, j)  # validates adjacency; unused beyond that
    del t_ij
    side_i = {k: t for k, t in nbrs[i].items() if k != j}
    side_j = {l: t for l, t in nbrs[j].items() if l != i}
    common = sorted(set(side_i) & set(side_j))
    if len(common) > max_common:
        raise MagicStateError(
            f"{len(common)} common neighbours exceeds the cap of {max_common}; "
            "use the statevector oracle for this edge"
        )
    base = 1.0
    for k, t in side_i.items():
        if k not in side_j:
            base *= math.cos(2 * t)
    for l, t in side_j.items():
        if l not in side_i:
            base *= math.cos(2 * t)
    # Even-subset sum over common neighbours via an even/odd parity recurrence.
    even, odd = 1.0, 0.0
    for s in common:
        c = math.cos(2 * side_i[s]) * math.cos(2 * side_j[s])
        sn = math.sin(2 * side_i[s]) * math.sin(2 * side_j[s])
        even, odd = even * c + odd * sn, even * sn + odd * c
    return base * even, len(common)


def expect_zz(
    g: Graph,
    thetas: ThetaAssignment,
    edge: tuple[int, int],
    max_common: int = DEFAULT_COMMON_NEIGHBOUR_CAP,
) -> float:
    """<Z_i Z_j> for edge (i, j), exact for any angle assignment."""
    i, j = edge
    angle, nbrs = _pair_tables(g, thetas)
    value, _ = _zz_from_tables(angle, nbrs, i, j, max_common)
    return value


def edge_energy(
    g: Graph,
    thetas: ThetaAssignment,
    edge: tuple[int, int],
    max_common: int = DEFAULT_COMMON_NEIGHBOUR_CAP,
) -> float:
    """(1 + <QP> + <PQ> + <ZZ>) / 2 for one edge."""
    qp = expect_qp(g, thetas, edge)
    pq = expect_pq(g, thetas, edge)
    zz = expect_zz(g, thetas, edge, max_common)
    return 0.5 * (1 + qp + pq + zz)


@dataclass(frozen=True)
class EdgeEnergy:
    index: int
    u: int
    v: int
    theta: float
    qp: float
    pq: float
    zz: float
    g: float
    floor: float | None  # energy floor from (kappa, m_e) when angles came from a matching
    common: int  # number of common neighbours entering the zz sum


@dataclass(frozen=True)
class EnergyReport:
    edges: tuple[EdgeEnergy, ...]
    energy: float  # sum of weight * edge value
    total_weight: Fraction
    fm_value: Fraction | None
    ratio_vs_fm_bound: float | None  # energy / (total weight + matching value)

    def to_json(self) -> dict:
        return {
            "edges": [
                {
                    "edge": r.index,
                    "theta": r.theta,
                    "qp": r.qp,
                    "pq": r.pq,
                    "zz": r.zz,
                    "g": r.g,
                    "T_bound": r.floor,
                    "common_neighbours": r.common,
                }
                for r in self.edges
            ],
            "totals": {
                "energy": self.energy,
                "fm_value": float(self.fm_value) if self.fm_value is not None else None,
                "wG": float(self.total_weight),
                "ratio_vs_fm_bound": self.ratio_vs_fm_bound,
            },
        }


def total_energy(
    g: Graph,
    thetas: ThetaAssignment,
    max_common: int = DEFAULT_COMMON_NEIGHBOUR_CAP,
) -> EnergyReport:
    """Closed-form energy of every edge plus weighted total.

    Parallel copies of a pair share the pair expectation values but keep
    their own weights and floors. The total is summed in edge order, so
    repeated runs are bitwise identical.
    """
    angle, nbrs = _pair_tables(g, thetas)
    records = []
    energy = 0.0
    for k, e in enumerate(g.edges):
        t = _pair_angle(angle, e.u, e.v)
        qp = math.sin(2 * t) * _cos_product(nbrs, e.u, e.v)
        pq = math.sin(2 * t) * _cos_product(nbrs, e.v, e.u)
        zz, n_common = _zz_from_tables(angle, nbrs, e.u, e.v, max_common)
        val = 0.5 * (1 + qp + pq + zz)
        floor = None
        if thetas.kappa is not None and thetas.fractions is not None:
            floor = edge_energy_floor(thetas.kappa, float(thetas.fractions[k]))
        records.append(
            EdgeEnergy(k, e.u, e.v, thetas.thetas[k], qp, pq, zz, val, floor, n_common)
        )
        energy += float(e.weight) * val

    fm_value = None
    ratio = None
    if thetas.fractions is not None:
        fm_value = sum(
            (e.weight * m for e, m in zip(g.edges, thetas.fractions)), Fraction(0)
        )
        ratio = energy / float(g.total_weight + fm_value)
    return EnergyReport(tuple(records), energy, g.total_weight, fm_value, ratio)
