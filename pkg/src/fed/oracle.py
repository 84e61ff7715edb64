"""Ground-truth engines: statevector simulation and exact spectra.

The prepared state applies one commuting two-qubit rotation exp(i theta P P)
per edge to the all-zeros state, with P = (X - Y)/sqrt(2). Qubit q is vertex
q and occupies tensor axis q, so vertex 0 is the most significant bit of the
amplitude index.

The pair Hamiltonian term g = (II + XX + ZZ - YY)/2 couples only the 00/11
amplitudes of a pair; its two-qubit spectrum is {2, 0, 0, 0}. Dense
diagonalization is the unconditional truth source up to 12 qubits; a
matrix-free Lanczos path with an explicit residual check covers 13..20.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.sparse.linalg import LinearOperator, eigsh

from fed.graph import Graph
from fed.magic import ThetaAssignment
from fed.matching import mwfm

DENSE_QUBIT_CAP = 12
DEFAULT_QUBIT_CAP = 20
SINGLE_EDGE_SPECTRUM = (2.0, 0.0, 0.0, 0.0)  # sanity constant for g on two qubits

_P = np.array([[0, cmath.exp(1j * math.pi / 4)], [cmath.exp(-1j * math.pi / 4), 0]])
_Q = np.array([[0, cmath.exp(-1j * math.pi / 4)], [cmath.exp(1j * math.pi / 4), 0]])


class OracleError(ValueError):
    pass


def _check_qubits(n: int, max_qubits: int) -> None:
    if n > max_qubits:
        raise OracleError(f"{n} qubits exceeds the cap of {max_qubits}")


def _apply_single(state: np.ndarray, n: int, q: int, mat: np.ndarray) -> np.ndarray:
    t = np.moveaxis(state.reshape([2] * n), q, 0)
    out = np.tensordot(mat, t, axes=([1], [0]))
    return np.moveaxis(out, 0, q).reshape(-1)


def _apply_pair_rotation(state: np.ndarray, n: int, i: int, j: int, theta: float) -> np.ndarray:
    # exp(i theta P_i P_j) = cos(theta) I + i sin(theta) P_i P_j
    rotated = _apply_single(state, n, i, _P)
    rotated = _apply_single(rotated, n, j, _P)
    return math.cos(theta) * state + 1j * math.sin(theta) * rotated


def build_state(g: Graph, thetas: ThetaAssignment, max_qubits: int = DEFAULT_QUBIT_CAP) -> np.ndarray:
    """Statevector of the edge-rotation product state; unit norm."""
    n = g.vertex_count
    _check_qubits(n, max_qubits)
    if len(thetas.thetas) != len(g.edges):
        raise OracleError("theta assignment does not cover the edge set")
    state = np.zeros(1 << n, dtype=complex)
    state[0] = 1.0
    for e, theta in zip(g.edges, thetas.thetas):
        state = _apply_pair_rotation(state, n, e.u, e.v, theta)
    return state


def state_energy(g: Graph, state: np.ndarray) -> float:
    """Exact EPR energy of a statevector on g, summed in fixed pair order."""
    n = g.vertex_count
    t = state.reshape([2] * n)
    total = 0.0
    for (u, v), w, _ in g.pairs:
        idx00 = [slice(None)] * n
        idx11 = [slice(None)] * n
        idx00[u] = idx00[v] = 0
        idx11[u] = idx11[v] = 1
        s = t[tuple(idx00)] + t[tuple(idx11)]
        total += float(w) * float(np.sum(np.abs(s) ** 2))
    return total


def pair_expectations(state: np.ndarray, n: int, i: int, j: int) -> tuple[float, float, float]:
    """(<Q_i P_j>, <P_i Q_j>, <Z_i Z_j>) measured directly on a statevector."""
    qp_vec = _apply_single(_apply_single(state, n, j, _P), n, i, _Q)
    pq_vec = _apply_single(_apply_single(state, n, j, _Q), n, i, _P)
    qp = np.vdot(state, qp_vec)
    pq = np.vdot(state, pq_vec)
    probs = np.abs(state.reshape([2] * n)) ** 2
    axes = tuple(a for a in range(n) if a not in (i, j))
    marg = probs.sum(axis=axes) if axes else probs
    if i > j:
        marg = marg.T
    zz = float(marg[0, 0] + marg[1, 1] - marg[0, 1] - marg[1, 0])
    assert abs(qp.imag) < 1e-10 and abs(pq.imag) < 1e-10
    return float(qp.real), float(pq.real), zz


def dense_hamiltonian(g: Graph) -> np.ndarray:
    """Dense EPR Hamiltonian (real symmetric); parallel edges fold together."""
    n = g.vertex_count
    if n > DENSE_QUBIT_CAP:
        raise OracleError(f"dense Hamiltonian capped at {DENSE_QUBIT_CAP} qubits, got {n}")
    dim = 1 << n
    H = np.zeros((dim, dim))
    x = np.arange(dim)
    for (u, v), w, _ in g.pairs:
        su, sv = n - 1 - u, n - 1 - v
        eq = ((x >> su) & 1) == ((x >> sv) & 1)
        idx = x[eq]
        flip = idx ^ ((1 << su) | (1 << sv))
        H[idx, idx] += float(w)
        H[idx, flip] += float(w)
    return H


def _matvec(g: Graph, vec: np.ndarray) -> np.ndarray:
    n = g.vertex_count
    t = vec.reshape([2] * n)
    out = np.zeros_like(t)
    for (u, v), w, _ in g.pairs:
        idx00 = [slice(None)] * n
        idx11 = [slice(None)] * n
        idx00[u] = idx00[v] = 0
        idx11[u] = idx11[v] = 1
        i00, i11 = tuple(idx00), tuple(idx11)
        s = float(w) * (t[i00] + t[i11])
        out[i00] += s
        out[i11] += s
    return out.reshape(-1)


@dataclass(frozen=True)
class SpectrumResult:
    lambda_max: float
    method: str  # dense | iterative
    residual: float


def epr_lambda_max(g: Graph, max_qubits: int = DEFAULT_QUBIT_CAP) -> SpectrumResult:
    """Largest EPR eigenvalue with a residual-certified eigenpair."""
    n = g.vertex_count
    _check_qubits(n, max_qubits)
    if n <= DENSE_QUBIT_CAP:
        H = dense_hamiltonian(g)
        vals, vecs = np.linalg.eigh(H)
        lam = float(vals[-1])
        vec = vecs[:, -1]
        residual = float(np.linalg.norm(H @ vec - lam * vec))
        method = "dense"
    else:
        dim = 1 << n
        op = LinearOperator((dim, dim), matvec=lambda v: _matvec(g, v), dtype=float)
        rng = np.random.default_rng(0)
        v0 = rng.standard_normal(dim)
        vals, vecs = eigsh(op, k=1, which="LA", v0=v0, maxiter=5000)
        lam = float(vals[0])
        vec = vecs[:, 0]
        residual = float(np.linalg.norm(_matvec(g, vec) - lam * vec))
        method = "iterative"
    if residual > 1e-8:
        raise OracleError(f"eigenpair residual {residual:.2e} above 1e-8")
    return SpectrumResult(lam, method, residual)


@dataclass(frozen=True)
class BoundCheck:
    """Matching upper bound against the exact top eigenvalue."""

    lambda_max: float
    fm_value: Fraction  # maximum-weight fractional matching, parallel edges merged
    bound: float  # total weight + fm_value
    slack: float  # bound - lambda_max, non-negative up to solver residual


def verify_fm_bound(g: Graph, max_qubits: int = DEFAULT_QUBIT_CAP) -> BoundCheck:
    """Check lambda_max <= total weight + matching value on g.

    Parallel edges are merged into summed weights first: the bound holds for
    weighted graphs, and a multigraph is spectrally identical to its merged
    weighted form while its per-copy matching value can be strictly smaller.
    """
    merged = g.merge_parallel()
    spectrum = epr_lambda_max(merged, max_qubits=max_qubits)
    fm = mwfm(merged)
    bound_exact = merged.total_weight + fm.value
    bound = float(bound_exact)
    return BoundCheck(spectrum.lambda_max, fm.value, bound, bound - spectrum.lambda_max)


@dataclass(frozen=True)
class OptimizeResult:
    thetas: tuple[float, ...]
    energy: float
    lambda_max: float
    ratio: float
    restart_energies: tuple[float, ...]


def optimize_thetas(
    g: Graph,
    restarts: int = 32,
    seed: int | None = None,
    max_qubits: int = DENSE_QUBIT_CAP,
    max_passes: int = 60,
    tol: float = 1e-9,
) -> OptimizeResult:
    """Derivative-free maximization of the state energy over all angles.

    Coordinate-wise golden-section passes from random starts in [0, pi/4]
    per edge; the energy of each iterate is measured on the statevector, so
    the optimizer is independent of the closed-form evaluator.
    """
    n = g.vertex_count
    _check_qubits(n, max_qubits)
    lam = epr_lambda_max(g, max_qubits=max_qubits).lambda_max
    rng = np.random.default_rng(seed)
    ne = len(g.edges)
    quarter_pi = math.pi / 4

    def energy(arr: np.ndarray) -> float:
        return state_energy(g, build_state(g, ThetaAssignment(tuple(arr)), max_qubits))

    inv = 1 / ((1 + math.sqrt(5)) / 2)

    def line_max(arr: np.ndarray, k: int) -> tuple[float, float]:
        a, b = 0.0, quarter_pi

        def f(t: float) -> float:
            arr[k] = t
            return energy(arr)

        c = b - (b - a) * inv
        d = a + (b - a) * inv
        fc, fd = f(c), f(d)
        while b - a > 1e-6:
            if fc > fd:
                b, d, fd = d, c, fc
                c = b - (b - a) * inv
                fc = f(c)
            else:
                a, c, fc = c, d, fd
                d = a + (b - a) * inv
                fd = f(d)
        t = (a + b) / 2
        return t, f(t)

    best_arr: np.ndarray | None = None
    best_e = -math.inf
    restart_energies = []
    for _ in range(max(1, restarts)):
        arr = rng.uniform(0.0, quarter_pi, ne)
        e = energy(arr)
        for _ in range(max_passes):
            prev = e
            for k in range(ne):
                arr[k], e = line_max(arr, k)
            if e - prev < tol:
                break
        restart_energies.append(e)
        if e > best_e:
            best_e, best_arr = e, arr.copy()
    assert best_arr is not None
    return OptimizeResult(
        thetas=tuple(float(t) for t in best_arr),
        energy=best_e,
        lambda_max=lam,
        ratio=best_e / lam,
        restart_energies=tuple(restart_energies),
    )
