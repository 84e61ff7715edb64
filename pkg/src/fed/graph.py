"""Weighted multigraph representation, edge-degree profiles, and edge-list I/O.

Vertices are dense 0-based integers after ingestion; original input labels are
kept in a side table. Parallel edges are allowed and kept distinct (an edge is
identified by its index in the edge tuple), self-loops are rejected, and all
weights are exact positive rationals so matching arithmetic never accumulates
floating-point drift.

Edge-list text format: one edge per line, ``u v [w]``, whitespace separated.
``#`` starts a comment. Vertex labels are arbitrary non-whitespace tokens
(typically small integers). The weight is optional (default 1) and may be a
decimal (``2.6``) or a rational (``13/5``); both parse exactly.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm
from os import PathLike
from pathlib import Path


class GraphError(ValueError):
    """Malformed input, or an operation applied to an unsuitable graph."""


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    weight: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        object.__setattr__(self, "weight", Fraction(self.weight))

    @property
    def pair(self) -> tuple[int, int]:
        """Endpoints as a sorted tuple; parallel copies share the same pair."""
        return (self.u, self.v) if self.u <= self.v else (self.v, self.u)


@dataclass(frozen=True)
class Graph:
    """Immutable weighted multigraph. Safe to share across threads."""

    vertex_count: int
    edges: tuple[Edge, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple(self.edges))
        if self.vertex_count < 0:
            raise GraphError("negative vertex count")
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            if len(self.labels) != self.vertex_count:
                raise GraphError("label table size does not match vertex count")
        for k, e in enumerate(self.edges):
            if not (0 <= e.u < self.vertex_count and 0 <= e.v < self.vertex_count):
                raise GraphError(f"edge {k}: endpoint out of range")
            if e.u == e.v:
                raise GraphError(f"edge {k}: self-loop at vertex {self.label(e.u)}")
            if e.weight <= 0:
                raise GraphError(f"edge {k}: non-positive weight {e.weight}")

    @classmethod
    def from_edges(
        cls,
        vertex_count: int,
        edges: list[tuple[int, int]] | list[tuple[int, int, Fraction | int | str]],
        labels: tuple[str, ...] | None = None,
    ) -> "Graph":
        es = []
        for t in edges:
            if len(t) == 2:
                es.append(Edge(t[0], t[1]))
            else:
                es.append(Edge(t[0], t[1], Fraction(t[2])))
        return cls(vertex_count, tuple(es), labels)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Per-vertex tuple of incident edge indices; parallel edges repeat."""
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for k, e in enumerate(self.edges):
            adj[e.u].append(k)
            adj[e.v].append(k)
        return tuple(tuple(a) for a in adj)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        """Vertex degrees counted with edge multiplicity."""
        return tuple(len(a) for a in self.adjacency)

    @cached_property
    def total_weight(self) -> Fraction:
        return sum((e.weight for e in self.edges), Fraction(0))

    @cached_property
    def pairs(self) -> tuple[tuple[tuple[int, int], Fraction, tuple[int, ...]], ...]:
        """Parallel edges folded: sorted (pair, summed weight, edge indices)."""
        acc: dict[tuple[int, int], tuple[Fraction, list[int]]] = {}
        for k, e in enumerate(self.edges):
            w, ids = acc.setdefault(e.pair, (Fraction(0), []))
            acc[e.pair] = (w + e.weight, ids)
            ids.append(k)
        return tuple(
            (p, w, tuple(ids)) for p, (w, ids) in sorted(acc.items())
        )

    @cached_property
    def is_simple(self) -> bool:
        return len(self.pairs) == len(self.edges)

    def merge_parallel(self) -> "Graph":
        """Fold parallel edges into single edges with summed weights.

        The EPR Hamiltonian depends only on the total weight between each
        vertex pair, so the merged graph has an identical spectrum.
        """
        if self.is_simple:
            return self
        es = tuple(Edge(p[0], p[1], w) for p, w, _ in self.pairs)
        return Graph(self.vertex_count, es, self.labels)


@dataclass(frozen=True)
class EdgeDegreeProfile:
    """Per-edge degrees d_e = max(deg u, deg v) plus their extremes."""

    edge_degrees: tuple[int, ...]
    delta: int
    Delta: int


def edge_degree_profile(g: Graph) -> EdgeDegreeProfile:
    """Edge degree of every edge and the min/max over the edge set.

    Degrees are counted with multiplicity, so a doubled edge raises the
    degree of both endpoints by two.
    """
    if not g.edges:
        raise GraphError("graph has no edges, so edge degrees are undefined")
    deg = g.degrees
    ds = tuple(max(deg[e.u], deg[e.v]) for e in g.edges)
    return EdgeDegreeProfile(ds, min(ds), max(ds))


def _parse_weight(token: str, lineno: int) -> Fraction:
    try:
        w = Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise GraphError(f"line {lineno}: bad weight {token!r}") from exc
    if w <= 0:
        raise GraphError(f"line {lineno}: non-positive weight {token!r}")
    return w


def load_graph(text: str) -> Graph:
    """Parse edge-list text into a Graph.

    Rejects self-loops, non-positive weights, and malformed lines, naming
    the offending line. Vertex ids are assigned densely in order of first
    appearance; the original tokens are kept as labels.
    """
    ids: dict[str, int] = {}
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) not in (2, 3):
            raise GraphError(f"line {lineno}: expected 'u v [w]', got {raw.strip()!r}")
        if parts[0] == parts[1]:
            raise GraphError(f"line {lineno}: self-loop at vertex {parts[0]!r}")
        u = ids.setdefault(parts[0], len(ids))
        v = ids.setdefault(parts[1], len(ids))
        w = _parse_weight(parts[2], lineno) if len(parts) == 3 else Fraction(1)
        edges.append(Edge(u, v, w))
    if not edges:
        raise GraphError("no edges found")
    labels = tuple(ids)
    return Graph(len(labels), tuple(edges), labels)


def load_graph_file(path: str | PathLike[str]) -> Graph:
    return load_graph(Path(path).read_text())


def _format_weight(w: Fraction) -> str:
    return str(w.numerator) if w.denominator == 1 else f"{w.numerator}/{w.denominator}"


def to_edge_list(g: Graph) -> str:
    """Canonical edge-list text; weight omitted when it equals 1."""
    lines = []
    for e in g.edges:
        base = f"{g.label(e.u)} {g.label(e.v)}"
        lines.append(base if e.weight == 1 else f"{base} {_format_weight(e.weight)}")
    return "\n".join(lines) + "\n"


def to_json(g: Graph) -> dict:
    return {
        "vertex_count": g.vertex_count,
        "labels": list(g.labels) if g.labels is not None else None,
        "edges": [
            {"id": k, "u": e.u, "v": e.v, "weight": _format_weight(e.weight)}
            for k, e in enumerate(g.edges)
        ],
    }


def graph_hash(g: Graph) -> str:
    """Stable hex digest of the canonical edge list, for report provenance."""
    payload = json.dumps(to_json(g), sort_keys=True).encode()
    return hashlib.sha256(payload).hexdigest()[:16]


def integerize_weights(g: Graph, max_multiplicity: int = 10_000) -> Graph:
    """Rescale rational weights to integers and split into unit parallel edges.

    Every weight is multiplied by the least common multiple of the weight
    denominators, and an edge of resulting integer weight k becomes k
    parallel unit edges. The EPR spectrum of the result is the scaled
    spectrum of the input. Unit-weight graphs pass through unchanged.
    """
    if all(e.weight == 1 for e in g.edges):
        return g
    scale = lcm(*(e.weight.denominator for e in g.edges)) if g.edges else 1
    out: list[Edge] = []
    for k, e in enumerate(g.edges):
        mult = e.weight * scale
        assert mult.denominator == 1
        copies = mult.numerator
        if copies > max_multiplicity:
            raise GraphError(
                f"edge {k}: weight {e.weight} would split into {copies} parallel "
                f"edges, above the cap of {max_multiplicity}"
            )
        out.extend(Edge(e.u, e.v) for _ in range(copies))
    return Graph(g.vertex_count, tuple(out), g.labels)
