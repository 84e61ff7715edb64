"""Guaranteed-ratio certificates for matching-driven rotation states.

The guarantee chains three facts: every edge energy is at least the
closed-form floor for its fraction, the floor-to-bound ratio is therefore
at least the max-min value over the fractions actually used, and the top
eigenvalue is at most total weight plus the maximum matching value. The
certificate records every input so the chain can be audited, and optionally
carries the exact top eigenvalue for a direct cross-check.

Graphs with parallel edges are folded to weighted simple graphs first
(summed weights and summed fractions per pair): the spectrum is unchanged,
while the matching bound is only valid at that merged level.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from fed import magic, matching, oracle, ratio
from fed.graph import Graph, graph_hash


@dataclass(frozen=True)
class OracleBlock:
    lambda_max: float
    method: str
    residual: float
    achieved_vs_lambda_max: float
    bound_slack: float


@dataclass(frozen=True)
class Certificate:
    graph_hash: str
    matching_kind: str
    matching_value: Fraction
    mwfm_value: Fraction
    fraction_set: tuple[float, ...]
    interval: tuple[Fraction, Fraction]  # [min, max] of the fractions used
    kappa: float
    r: float  # max-min ratio over the fraction set
    s: Fraction
    s_hat: Fraction
    guarantee: float  # r * s_hat
    energy: float | None  # closed-form energy at kappa
    achieved_vs_bound: float | None  # energy / (total weight + mwfm value)
    merged_parallel: bool
    oracle: OracleBlock | None = None
    oracle_note: str | None = None

    def to_json(self) -> dict:
        def fmt(q: Fraction) -> str:
            return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"

        out = {
            "graph_hash": self.graph_hash,
            "matching_kind": self.matching_kind,
            "matching_value": fmt(self.matching_value),
            "mwfm_value": fmt(self.mwfm_value),
            "fraction_set": list(self.fraction_set),
            "interval": {"lo": fmt(self.interval[0]), "hi": fmt(self.interval[1])},
            "kappa": self.kappa,
            "r": self.r,
            "s": fmt(self.s),
            "s_hat": fmt(self.s_hat),
            "guarantee": self.guarantee,
            "energy": self.energy,
            "achieved_vs_bound": self.achieved_vs_bound,
            "merged_parallel": self.merged_parallel,
            "oracle": None
            if self.oracle is None
            else {
                "lambda_max": self.oracle.lambda_max,
                "method": self.oracle.method,
                "residual": self.oracle.residual,
                "achieved_vs_lambda_max": self.oracle.achieved_vs_lambda_max,
                "bound_slack": self.oracle.bound_slack,
            },
        }
        if self.oracle_note is not None:
            out["oracle_note"] = self.oracle_note
        return out


def certify(
    g: Graph,
    fm: matching.FractionalMatching,
    kappa: float | None = None,
    with_energy: bool = True,
    with_oracle: bool = False,
    max_qubits: int = oracle.DEFAULT_QUBIT_CAP,
) -> Certificate:
    """Assemble the guaranteed ratio r * s_hat for a feasible matching on g.

    With `kappa=None` the parameter is optimized; a fixed kappa yields the
    (sound, possibly weaker) guarantee at that parameter. `with_energy`
    also evaluates the closed-form energy at the certified kappa, and
    `with_oracle` adds the exact top eigenvalue when the graph fits the
    solver caps (otherwise the certificate is emitted with a note).
    """
    mg, mfm = matching.merge_matching(g, fm)
    sol = ratio.solve_fraction_set([float(m) for m in mfm.fractions], kappa=kappa)
    q = matching.quality(mg, mfm)
    best = matching.mwfm(mg)
    guarantee = sol.ratio * float(q.s_hat)

    energy = None
    achieved = None
    if with_energy:
        report = magic.total_energy(mg, magic.assign_thetas(mg, mfm, sol.kappa))
        energy = report.energy
        achieved = energy / float(mg.total_weight + best.value)

    oracle_block = None
    oracle_note = None
    if with_oracle:
        if energy is None:
            oracle_note = "oracle cross-check needs with_energy=True"
        else:
            try:
                spectrum = oracle.epr_lambda_max(mg, max_qubits=max_qubits)
                bound = float(mg.total_weight + best.value)
                oracle_block = OracleBlock(
                    lambda_max=spectrum.lambda_max,
                    method=spectrum.method,
                    residual=spectrum.residual,
                    achieved_vs_lambda_max=energy / spectrum.lambda_max,
                    bound_slack=bound - spectrum.lambda_max,
                )
            except oracle.OracleError as exc:
                oracle_note = str(exc)

    fracs = sorted(set(mfm.fractions))
    return Certificate(
        graph_hash=graph_hash(g),
        matching_kind=mfm.kind,
        matching_value=mfm.value,
        mwfm_value=best.value,
        fraction_set=sol.fraction_set or (),
        interval=(fracs[0], fracs[-1]),
        kappa=sol.kappa,
        r=sol.ratio,
        s=q.s,
        s_hat=q.s_hat,
        guarantee=guarantee,
        energy=energy,
        achieved_vs_bound=achieved,
        merged_parallel=not g.is_simple,
        oracle=oracle_block,
        oracle_note=oracle_note,
    )
