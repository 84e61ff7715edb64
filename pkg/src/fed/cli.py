"""Command-line surface: certify, table, oracle.

Numeric output is rounded to 3 decimals in text mode and carried at full
precision in json/csv. Errors exit non-zero; in json mode they are emitted
as machine-readable objects on stderr. The oracle qubit cap defaults to 20
and can be overridden with the FED_ORACLE_MAX_QUBITS environment variable
or the --max-qubits flag.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from fed import certificate, matching, oracle, ratio
from fed.graph import Graph, GraphError, load_graph_file


@dataclass(frozen=True)
class RunConfig:
    command: str
    path: str | None = None
    strategy: str = "qhfm"
    kappa: float | None = None  # None means optimize
    fmt: str = "text"
    out: str | None = None
    with_oracle: bool = False
    variational: bool = False
    restarts: int = 32
    seed: int | None = None
    max_qubits: int = 20
    max_degree: int = 10


def _build_matching(g: Graph, strategy: str) -> matching.FractionalMatching:
    name, _, arg = strategy.partition(":")
    if name == "mwfm":
        return matching.mwfm(g)
    if name == "qhfm":
        return matching.qhfm(g)
    if name == "hfm":
        if not arg:
            raise ValueError("hfm strategy needs a degree, e.g. hfm:3")
        return matching.hfm(g, int(arg))
    if name == "constrained":
        parts = arg.split(",")
        if len(parts) != 2:
            raise ValueError("constrained strategy needs 'delta,Delta', e.g. constrained:1.25,5")
        upper = None if parts[1].lower() in ("inf", "none") else Fraction(parts[1])
        return matching.constrained_fm(g, Fraction(parts[0]), upper)
    raise ValueError(f"unknown matching strategy {strategy!r}")


def _emit(text: str, out: str | None) -> None:
    if out is None:
        print(text)
    else:
        Path(out).write_text(text + "\n")


def cmd_certify(cfg: RunConfig) -> int:
    g = load_graph_file(cfg.path)
    fm = _build_matching(g, cfg.strategy)
    cert = certificate.certify(
        g,
        fm,
        kappa=cfg.kappa,
        with_energy=True,
        with_oracle=cfg.with_oracle,
        max_qubits=cfg.max_qubits,
    )
    if cfg.fmt == "json":
        from fed.graph import to_json as graph_to_json

        payload = cert.to_json()
        payload["graph"] = graph_to_json(g)
        payload["matching"] = matching.to_json(fm)
        _emit(json.dumps(payload, indent=2), cfg.out)
    else:
        lines = [
            f"graph {cert.graph_hash}  matching {cert.matching_kind}",
            f"matching value {float(cert.matching_value):.3f}  "
            f"mwfm value {float(cert.mwfm_value):.3f}",
            f"fractions in [{float(cert.interval[0]):.3f}, {float(cert.interval[1]):.3f}]",
            f"kappa {cert.kappa:.3f}  r {cert.r:.3f}  s_hat {float(cert.s_hat):.3f}",
            f"guarantee {cert.guarantee:.3f}",
        ]
        if cert.energy is not None:
            lines.append(
                f"energy {cert.energy:.3f}  achieved vs bound {cert.achieved_vs_bound:.3f}"
            )
        if cert.oracle is not None:
            lines.append(
                f"lambda_max {cert.oracle.lambda_max:.3f} ({cert.oracle.method})  "
                f"achieved vs lambda_max {cert.oracle.achieved_vs_lambda_max:.3f}"
            )
        elif cert.oracle_note is not None:
            lines.append(f"oracle skipped: {cert.oracle_note}")
        _emit("\n".join(lines), cfg.out)
    return 0


def cmd_table(cfg: RunConfig) -> int:
    rows = ratio.regular_table(cfg.max_degree)
    if cfg.fmt == "json":
        payload = [{"d": d, "r_d": r, "kappa_d": k} for d, r, k in rows]
        _emit(json.dumps(payload, indent=2), cfg.out)
    elif cfg.fmt == "csv":
        lines = ["d,r_d,kappa_d"] + [f"{d},{r!r},{k!r}" for d, r, k in rows]
        _emit("\n".join(lines), cfg.out)
    else:
        lines = ["  d    r_d   kappa_d"] + [f"{d:3d}  {r:.3f}   {k:.3f}" for d, r, k in rows]
        _emit("\n".join(lines), cfg.out)
    return 0


def cmd_oracle(cfg: RunConfig) -> int:
    g = load_graph_file(cfg.path)
    check = oracle.verify_fm_bound(g, max_qubits=cfg.max_qubits)
    result: dict = {
        "lambda_max": check.lambda_max,
        "fm_value": float(check.fm_value),
        "bound": check.bound,
        "slack": check.slack,
    }
    opt = None
    if cfg.variational:
        opt = oracle.optimize_thetas(g, restarts=cfg.restarts, seed=cfg.seed)
        result["variational"] = {
            "energy": opt.energy,
            "ratio": opt.ratio,
            "restarts": len(opt.restart_energies),
        }
    if cfg.fmt == "json":
        _emit(json.dumps(result, indent=2), cfg.out)
    else:
        lines = [
            f"lambda_max {check.lambda_max:.3f}",
            f"bound {check.bound:.3f} (total weight + matching {float(check.fm_value):.3f})",
            f"slack {check.slack:.3f}",
        ]
        if opt is not None:
            lines.append(f"variational energy {opt.energy:.3f}  ratio {opt.ratio:.3f}")
        _emit("\n".join(lines), cfg.out)
    return 0


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fed", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp: argparse.ArgumentParser, with_graph: bool = True) -> None:
        if with_graph:
            sp.add_argument("graph", help="edge-list file: 'u v [w]' per line")
        sp.add_argument("--format", default="text", choices=("text", "json", "csv"))
        sp.add_argument("--out", default=None, help="write output to a file instead of stdout")

    c = sub.add_parser("certify", help="guaranteed approximation ratio for a matching strategy")
    common(c)
    c.add_argument(
        "--matching",
        default="qhfm",
        help="mwfm | qhfm | hfm:<d> | constrained:<delta>,<Delta>",
    )
    c.add_argument("--kappa", default="auto", help="'auto' to optimize, or a fixed value")
    c.add_argument("--oracle", action="store_true", help="add the exact top eigenvalue")
    c.add_argument("--max-qubits", type=int, default=None)

    t = sub.add_parser("table", help="ratio and kappa for uniform fractions 1/d")
    common(t, with_graph=False)
    t.add_argument("--max-degree", type=int, default=10)

    o = sub.add_parser("oracle", help="exact top eigenvalue and matching bound check")
    common(o)
    o.add_argument("--variational", action="store_true", help="also optimize all angles")
    o.add_argument("--restarts", type=int, default=32)
    o.add_argument("--seed", type=int, default=None)
    o.add_argument("--max-qubits", type=int, default=None)
    return p


def _config(ns: argparse.Namespace) -> RunConfig:
    env_cap = int(os.environ.get("FED_ORACLE_MAX_QUBITS", oracle.DEFAULT_QUBIT_CAP))
    cap = getattr(ns, "max_qubits", None) or env_cap
    kappa = None
    if getattr(ns, "kappa", "auto") != "auto":
        kappa = float(ns.kappa)
        if kappa <= 0:
            raise ValueError(f"kappa must be positive, got {kappa}")
    return RunConfig(
        command=ns.command,
        path=getattr(ns, "graph", None),
        strategy=getattr(ns, "matching", "qhfm"),
        kappa=kappa,
        fmt=ns.format,
        out=ns.out,
        with_oracle=getattr(ns, "oracle", False),
        variational=getattr(ns, "variational", False),
        restarts=getattr(ns, "restarts", 32),
        seed=getattr(ns, "seed", None),
        max_qubits=cap,
        max_degree=getattr(ns, "max_degree", 10),
    )


def main(argv: list[str] | None = None) -> int:
    ns = _parser().parse_args(argv)
    try:
        cfg = _config(ns)
        if cfg.command == "certify":
            return cmd_certify(cfg)
        if cfg.command == "table":
            return cmd_table(cfg)
        return cmd_oracle(cfg)
    except (GraphError, ValueError, OSError) as exc:
        if ns.format == "json":
            err = {"error": {"type": type(exc).__name__, "message": str(exc)}}
            print(json.dumps(err), file=sys.stderr)
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
