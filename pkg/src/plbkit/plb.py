"""Fit and check the power-law bucket properties of a graph.

For exponent ``beta`` and shift ``t`` the reference count of bucket ``d``
(degrees in ``[2^d, 2^(d+1))``) is

    unit_bound(d) = n (t+1)^(beta-1) * sum_{i=2^d}^{2^(d+1)-1} (i+t)^(-beta)

The upper property asks every bucket to hold at most ``c1 * unit_bound(d)``
vertices, the lower property asks every bucket between the smallest and the
largest occupied one to hold at least ``c2 * unit_bound(d)``. The
neighbourhood property bounds, for a vertex of degree ``k``, the number of
neighbours of degree at least ``k`` by ``c3 * max(log2 n, (t+1)^(beta-2) * k
* sum_{i=k}^{n-1} i (i+t)^(-beta))``.

All sums use compensated summation (:func:`math.fsum`).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import GraphError
from .graph import Graph, degree_buckets

__all__ = [
    "PlbParams",
    "PlbReport",
    "bucket_sum",
    "unit_bound",
    "fit_plb_u",
    "fit_plb_l",
    "fit_plb_n",
    "check_plb",
    "round_sig",
]


def round_sig(x, digits=12):
    """Round a float to ``digits`` significant digits (for reports)."""
    if x is None or not math.isfinite(x):
        return x
    return float(f"{x:.{digits}g}")


@dataclass(frozen=True)
class PlbParams:
    beta: float
    t: float = 0.0
    c1: float | None = None
    c2: float | None = None
    c3: float | None = None

    def __post_init__(self):
        if not self.beta > 1:
            raise ValueError(f"beta must exceed 1, got {self.beta}")
        if not self.t >= 0:
            raise ValueError(f"t must be non-negative, got {self.t}")
        for name in ("c1", "c3"):
            c = getattr(self, name)
            if c is not None and not c > 0:
                raise ValueError(f"{name} must be positive, got {c}")
        # a zero lower constant is accepted: it makes the lower check vacuous
        if self.c2 is not None and not self.c2 >= 0:
            raise ValueError(f"c2 must be non-negative, got {self.c2}")


@lru_cache(maxsize=4096)
def bucket_sum(beta: float, t: float, d: int) -> float:
    """``sum_{i=2^d}^{2^(d+1)-1} (i+t)^(-beta)``."""
    i = np.arange(1 << d, 1 << (d + 1), dtype=np.float64)
    return math.fsum(((i + t) ** -beta).tolist())


def unit_bound(n: int, beta: float, t: float, d: int) -> float:
    """Reference vertex count of bucket ``d`` for constant 1."""
    return n * (t + 1.0) ** (beta - 1.0) * bucket_sum(float(beta), float(t), int(d))


def _check_bt(beta, t):
    if not beta > 1:
        raise ValueError(f"beta must exceed 1, got {beta}")
    if not t >= 0:
        raise ValueError(f"t must be non-negative, got {t}")


def _bucket_ratios(g: Graph, beta, t):
    _check_bt(beta, t)
    b = degree_buckets(g)
    if not b.counts:
        raise GraphError("all vertices are isolated; no degree bucket exists")
    rows = []
    for d, cnt in enumerate(b.counts):
        rows.append((d, int(cnt), unit_bound(g.n, beta, t, d)))
    return rows


def fit_plb_u(g: Graph, beta: float, t: float = 0.0, *, with_witness: bool = False):
    """Smallest ``c1`` for which ``g`` has the upper bucket property.

    Returns ``c1`` or, with ``with_witness``, ``(c1, bucket)`` where
    ``bucket`` attains the maximum (smallest index on ties).
    """
    rows = _bucket_ratios(g, beta, t)
    best, arg = -1.0, 0
    for d, cnt, ub in rows:
        r = cnt / ub
        if r > best:
            best, arg = r, d
    return (best, arg) if with_witness else best


def fit_plb_l(g: Graph, beta: float, t: float = 0.0, *, with_witness: bool = False):
    """Largest ``c2`` for which ``g`` has the lower bucket property.

    The range runs from the bucket of the smallest positive degree to the
    bucket of the largest degree; an empty bucket inside it gives ``0``.
    """
    rows = _bucket_ratios(g, beta, t)
    occupied = [d for d, cnt, _ in rows if cnt > 0]
    lo, hi = occupied[0], occupied[-1]
    best, arg = math.inf, lo
    for d, cnt, ub in rows[lo:hi + 1]:
        r = cnt / ub
        if r < best:
            best, arg = r, d
    return (best, arg) if with_witness else best


def _suffix_sums(n: int, beta: float, t: float, ks: np.ndarray) -> dict[int, float]:
    """``sum_{i=k}^{n-1} i (i+t)^(-beta)`` for each distinct ``k`` in ``ks``."""
    ks = sorted(set(int(k) for k in ks if k >= 1))
    if not ks:
        return {}
    i = np.arange(1, n, dtype=np.float64)
    terms = (i * (i + t) ** -beta).tolist()  # terms[j] is the term for i = j + 1
    bounds = [min(k, n) for k in ks] + [n]
    segs = [math.fsum(terms[bounds[j] - 1:bounds[j + 1] - 1]) for j in range(len(ks))]
    out = {}
    for j in range(len(ks) - 1, -1, -1):
        out[ks[j]] = math.fsum(segs[j:])
    return out


def neighbourhood_counts(g: Graph) -> np.ndarray:
    """For each vertex, neighbours of at least its own degree, with multiplicity."""
    deg = g.degrees
    du, dv = deg[g.u], deg[g.v]
    a = np.bincount(g.u, weights=g.mult * (dv >= du), minlength=g.n)
    a += np.bincount(g.v, weights=g.mult * (du >= dv), minlength=g.n)
    return a.astype(np.int64)


def fit_plb_n(g: Graph, beta: float, t: float = 0.0) -> tuple[float, int]:
    """Smallest ``c3`` for the neighbourhood property and a vertex attaining it."""
    _check_bt(beta, t)
    n = g.n
    if n < 2:
        raise GraphError(f"neighbourhood fit needs n >= 2, got {n}")
    deg = g.degrees
    A = neighbourhood_counts(g)
    sums = _suffix_sums(n, beta, t, np.unique(deg))
    scale = (t + 1.0) ** (beta - 2.0)
    log_n = math.log2(n)
    B = {k: max(log_n, scale * k * s) for k, s in sums.items()}
    best, arg = 0.0, 0
    for v in np.flatnonzero(A > 0).tolist():
        r = A[v] / B[int(deg[v])]
        if r > best:
            best, arg = float(r), v
    return best, arg


@dataclass
class PlbReport:
    beta: float
    t: float
    c1_fit: float
    c2_fit: float
    c3_fit: float
    per_bucket: list = field(default_factory=list)
    worst_vertex: int = 0
    witness_bucket_u: int = 0
    witness_bucket_l: int = 0
    pass_u: bool | None = None
    pass_l: bool | None = None
    pass_n: bool | None = None

    @property
    def passed(self) -> bool:
        return all(p is not False for p in (self.pass_u, self.pass_l, self.pass_n))

    def to_dict(self):
        return {
            "beta": self.beta,
            "t": self.t,
            "c1_fit": round_sig(self.c1_fit),
            "c2_fit": round_sig(self.c2_fit),
            "c3_fit": round_sig(self.c3_fit),
            "per_bucket": [
                {"d": d, "count": c, "unit_bound": round_sig(u)} for d, c, u in self.per_bucket
            ],
            "worst_vertex": self.worst_vertex,
            "witness_bucket_u": self.witness_bucket_u,
            "witness_bucket_l": self.witness_bucket_l,
            "pass_u": self.pass_u,
            "pass_l": self.pass_l,
            "pass_n": self.pass_n,
        }


def plb_report(g: Graph, beta: float, t: float = 0.0) -> PlbReport:
    """All three fitted constants without pass/fail verdicts."""
    rows = _bucket_ratios(g, beta, t)
    c1, wu = fit_plb_u(g, beta, t, with_witness=True)
    c2, wl = fit_plb_l(g, beta, t, with_witness=True)
    c3, worst = fit_plb_n(g, beta, t) if g.n >= 2 else (0.0, 0)
    return PlbReport(float(beta), float(t), c1, c2, c3, rows, worst, wu, wl)


def check_plb(g: Graph, p: PlbParams, checks=None) -> PlbReport:
    """Check the properties whose constants are given in ``p``.

    ``checks`` selects a subset of ``"u"``, ``"l"``, ``"n"``; by default every
    property with a constant in ``p`` is checked. Comparisons are plain ``<=``
    on the fitted doubles.
    """
    names = {"u": "c1", "l": "c2", "n": "c3"}
    if checks is None:
        checks = [k for k, c in names.items() if getattr(p, c) is not None]
        if not checks:
            raise ValueError("no constant given; nothing to check")
    for k in checks:
        if k not in names:
            raise ValueError(f"unknown property {k!r}")
        if getattr(p, names[k]) is None:
            raise ValueError(f"property {k!r} requested but {names[k]} is missing")
    rep = plb_report(g, p.beta, p.t)
    if "u" in checks:
        rep.pass_u = rep.c1_fit <= p.c1
    if "l" in checks:
        rep.pass_l = rep.c2_fit >= p.c2
    if "n" in checks:
        rep.pass_n = rep.c3_fit <= p.c3
    return rep
