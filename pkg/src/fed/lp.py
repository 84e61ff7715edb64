"""Exact rational simplex for small linear programs.

Solves max c.x subject to A x <= b, x >= 0 with all data as Fractions and
b >= 0, so the all-slack basis is feasible and no phase-1 is needed. Bland's
smallest-index rule prevents cycling. Intended for the desk-scale matching
polytopes in this package, not for large LPs: the tableau is dense.

Every solve is certified before returning: the dual vector read off the
final tableau is checked for dual feasibility and strong duality in exact
arithmetic, so a returned optimum is proven optimal.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class LPError(Exception):
    pass


@dataclass(frozen=True)
class LPResult:
    x: tuple[Fraction, ...]
    value: Fraction
    dual: tuple[Fraction, ...]
    # True when some nonbasic column has zero reduced cost at the optimum,
    # i.e. the optimal face is not a single vertex.
    degenerate: bool


def _pivot(tab: list[list[Fraction]], z: list[Fraction], basis: list[int], leave: int, enter: int) -> None:
    p = tab[leave][enter]
    tab[leave] = [v / p for v in tab[leave]]
    row = tab[leave]
    for i in range(len(tab)):
        if i != leave and tab[i][enter] != 0:
            f = tab[i][enter]
            tab[i] = [a - f * b for a, b in zip(tab[i], row)]
    f = z[enter]
    if f != 0:
        z[:] = [a - f * b for a, b in zip(z, row)]
    basis[leave] = enter


def maximize(
    c: list[Fraction],
    rows: list[list[Fraction]],
    rhs: list[Fraction],
) -> LPResult:
    m, n = len(rows), len(c)
    if any(r < 0 for r in rhs):
        raise LPError("rhs must be non-negative (all-slack start)")
    tab = [
        [Fraction(x) for x in row]
        + [Fraction(1) if j == i else Fraction(0) for j in range(m)]
        + [Fraction(r)]
        for i, (row, r) in enumerate(zip(rows, rhs))
    ]
    z = [Fraction(-x) for x in c] + [Fraction(0)] * (m + 1)
    basis = list(range(n, n + m))

    while True:
        enter = next((j for j in range(n + m) if z[j] < 0), None)
        if enter is None:
            break
        leave = None
        best: Fraction | None = None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            raise LPError("objective is unbounded")
        _pivot(tab, z, basis, leave, enter)

    x = [Fraction(0)] * n
    for i, b in enumerate(basis):
        if b < n:
            x[b] = tab[i][-1]
    value = z[-1]
    dual = tuple(z[n + i] for i in range(m))
    in_basis = set(basis)
    degenerate = any(z[j] == 0 for j in range(n + m) if j not in in_basis)

    # Exact optimality certificate: dual feasibility plus strong duality.
    if any(y < 0 for y in dual):
        raise LPError("internal error: negative dual at optimum")
    for j in range(n):
        if sum(dual[i] * rows[i][j] for i in range(m)) < c[j]:
            raise LPError("internal error: dual infeasible at optimum")
    if sum(y * r for y, r in zip(dual, rhs)) != value:
        raise LPError("internal error: duality gap at optimum")

    return LPResult(tuple(x), value, dual, degenerate)
