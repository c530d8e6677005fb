"""Seeded random power-law graph models.

Seed policy
-----------
Every generator is a pure function of ``(params, seed)``. Randomness is split
into independent streams derived with :class:`numpy.random.SeedSequence` from
``[seed, stream]``:

* stream 0 draws vertex positions (GIRG, hyperbolic) or the stub permutation
  (configuration model), so positions can be re-derived without the edges;
* stream 1 seeds the edge sampler.

The Chung-Lu sampler, the one-dimensional GIRG sampler and the hyperbolic
sampler are geometric-skip kernels driven by a SplitMix64 generator, which
makes the compiled and the pure-Python backends emit identical graphs. GIRGs
with ``dim >= 2`` and the ``method="naive"`` variants use a numpy generator
over all pairs; for a given seed they produce a graph with the same law but
not the same edges as the skip samplers.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._backend import get_kernels
from .graph import Graph
from .weights import WeightSequence

__all__ = [
    "GirgParams",
    "HyperbolicParams",
    "gen_chung_lu",
    "gen_girg",
    "girg_positions",
    "gen_hyperbolic",
    "hyperbolic_positions",
    "gen_alpha_beta_plg",
    "abplg_degree_counts",
    "random_regular",
    "stream_seed",
]

MASK64 = (1 << 64) - 1


def _seq(seed: int, stream: int) -> np.random.SeedSequence:
    return np.random.SeedSequence([int(seed) & MASK64, stream])


def stream_seed(seed: int, stream: int) -> int:
    """64-bit integer seed for the skip kernels."""
    return int(_seq(seed, stream).generate_state(1, np.uint64)[0])


def _rng(seed: int, stream: int) -> np.random.Generator:
    return np.random.default_rng(_seq(seed, stream))


# -- Chung-Lu -----------------------------------------------------------------


def gen_chung_lu(ws: WeightSequence, seed: int, backend: str | None = None) -> Graph:
    """Chung-Lu graph: each pair ``{i, j}`` is present with probability ``min(1, w_i w_j / W)``.

    Vertex ``i`` carries weight ``ws.w[i]``.
    """
    k = get_kernels(backend)
    a, b = k.chung_lu_edges(ws.w, float(ws.W), stream_seed(seed, 1))
    return Graph.from_arrays(ws.n, a, b)


# -- GIRG ---------------------------------------------------------------------


@dataclass(frozen=True)
class GirgParams:
    """Geometric inhomogeneous random graph on the ``dim``-torus with L-infinity distance."""

    dim: int
    alpha: float
    weights: WeightSequence

    def __post_init__(self):
        if int(self.dim) != self.dim or self.dim < 1:
            raise ValueError(f"dim must be a positive integer, got {self.dim}")
        if not self.alpha > 1:
            raise ValueError(f"alpha must exceed 1, got {self.alpha}")


def girg_positions(p: GirgParams, seed: int) -> np.ndarray:
    """Uniform positions on ``[0, 1)^dim``, shape ``(n, dim)``."""
    return _rng(seed, 0).random((p.weights.n, p.dim))


def _torus_linf(x: np.ndarray, ys: np.ndarray) -> np.ndarray:
    d = np.abs(ys - x)
    d = np.minimum(d, 1.0 - d)
    return d.max(axis=1)


def _girg_naive(p: GirgParams, pos: np.ndarray, seed: int) -> tuple[np.ndarray, np.ndarray]:
    w = p.weights.w
    W = p.weights.W
    n = len(w)
    rng = _rng(seed, 1)
    out_a, out_b = [], []
    for u in range(n - 1):
        dist = _torus_linf(pos[u], pos[u + 1:])
        s = (w[u] * w[u + 1:] / W) ** p.alpha
        with np.errstate(divide="ignore"):
            prob = np.where(dist > 0, s / np.where(dist > 0, dist, 1.0) ** (p.alpha * p.dim), 1.0)
        hit = np.flatnonzero(rng.random(n - u - 1) < np.minimum(prob, 1.0))
        out_a.append(np.full(len(hit), u, dtype=np.int64))
        out_b.append(hit + u + 1)
    if not out_a:
        return np.zeros(0, np.int64), np.zeros(0, np.int64)
    return np.concatenate(out_a), np.concatenate(out_b)


def _class_layout(cls: np.ndarray, coord: np.ndarray):
    """Group vertices by class, sorted by coordinate inside each class."""
    ncls = int(cls.max()) + 1 if len(cls) else 0
    order = np.lexsort((coord, cls))
    sizes = np.bincount(cls, minlength=ncls)
    start = np.zeros(ncls + 1, dtype=np.int64)
    np.cumsum(sizes, out=start[1:])
    idx = np.empty(len(cls), dtype=np.int64)
    idx[order] = np.arange(len(cls)) - start[cls[order]]
    return order.astype(np.int64), start, idx


def gen_girg(p: GirgParams, seed: int, method: str = "auto", backend: str | None = None) -> Graph:
    """GIRG with edge probability ``min(1, (w_u w_v / W)^alpha / dist^(alpha dim))``.

    ``method="auto"`` uses the weight-class skip sampler for ``dim == 1`` and
    the all-pairs sampler otherwise.
    """
    if method not in ("auto", "fast", "naive"):
        raise ValueError(f"unknown method {method!r}")
    pos = girg_positions(p, seed)
    n = p.weights.n
    if method == "naive" or (method == "auto" and p.dim != 1):
        a, b = _girg_naive(p, pos, seed)
        return Graph.from_arrays(n, a, b)
    if p.dim != 1:
        raise ValueError("the skip sampler supports dim == 1 only")
    w = np.asarray(p.weights.w)
    x = pos[:, 0]
    cls = np.floor(np.log2(w / p.weights.w_min)).astype(np.int64)
    cls = np.maximum(cls, 0)
    members, start, idx = _class_layout(cls, x)
    wmax = np.zeros(len(start) - 1)
    np.maximum.at(wmax, cls, w)
    k = get_kernels(backend)
    a, b = k.sorted_scan_edges(
        0, x, np.zeros(n), w, float(p.weights.W), float(p.alpha), 0.0, 1.0,
        cls, idx, start, members, x[members], np.zeros(len(wmax)), wmax,
        stream_seed(seed, 1),
    )
    return Graph.from_arrays(n, a, b)


# -- hyperbolic ---------------------------------------------------------------


@dataclass(frozen=True)
class HyperbolicParams:
    """Hyperbolic random graph on a disk of radius ``R = 2 ln n + c_h``."""

    n: int
    alpha_h: float
    c_h: float = 0.0
    t_h: float = 0.1

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"n must be >= 2, got {self.n}")
        if not self.alpha_h > 0:
            raise ValueError(f"alpha_h must be positive, got {self.alpha_h}")
        if not self.t_h > 0:
            raise ValueError(f"t_h must be positive, got {self.t_h}")
        if not self.r_disk > 0:
            raise ValueError(f"disk radius must be positive, got {self.r_disk}")

    @property
    def r_disk(self) -> float:
        return 2.0 * math.log(self.n) + self.c_h


def hyperbolic_positions(p: HyperbolicParams, seed: int) -> tuple[np.ndarray, np.ndarray]:
    """Radii in ``[0, R)`` and angles as fractions of a full turn in ``[0, 1)``.

    The angle in radians is ``2 * pi * theta``.
    """
    rng = _rng(seed, 0)
    u = rng.random(p.n)
    theta = rng.random(p.n)
    a, R = p.alpha_h, p.r_disk
    r = np.arccosh(1.0 + u * (np.cosh(a * R) - 1.0)) / a
    return np.minimum(r, R), theta


def hyperbolic_distance(r1, t1, r2, t2):
    """Hyperbolic distance between polar points with angles in turns."""
    d = np.abs(np.asarray(t1) - np.asarray(t2))
    d = np.minimum(d, 1.0 - d)
    sn = np.sin(np.pi * d)
    ch = np.cosh(np.asarray(r1) - r2) + np.sinh(r1) * np.sinh(r2) * 2.0 * sn * sn
    return np.arccosh(np.maximum(ch, 1.0))


def _hyp_naive(p: HyperbolicParams, r, theta, seed):
    rng = _rng(seed, 1)
    R, two_t = p.r_disk, 2.0 * p.t_h
    out_a, out_b = [], []
    for u in range(p.n - 1):
        d = hyperbolic_distance(r[u], theta[u], r[u + 1:], theta[u + 1:])
        z = np.minimum((d - R) / two_t, 700.0)
        prob = 1.0 / (1.0 + np.exp(z))
        hit = np.flatnonzero(rng.random(len(d)) < prob)
        out_a.append(np.full(len(hit), u, dtype=np.int64))
        out_b.append(hit + u + 1)
    return np.concatenate(out_a), np.concatenate(out_b)


def gen_hyperbolic(p: HyperbolicParams, seed: int, method: str = "auto", backend: str | None = None) -> Graph:
    """Hyperbolic random graph with logistic connection probability.

    A pair at distance ``d`` is joined with probability
    ``1 / (1 + exp((d - R) / (2 t_h)))``. The default sampler groups vertices
    into radial bands and skips geometrically along the angle.
    """
    if method not in ("auto", "fast", "naive"):
        raise ValueError(f"unknown method {method!r}")
    r, theta = hyperbolic_positions(p, seed)
    if method == "naive":
        a, b = _hyp_naive(p, r, theta, seed)
        return Graph.from_arrays(p.n, a, b)
    R = p.r_disk
    bw = max(min(p.t_h, 1.0), R / 400.0)
    nb = max(1, math.ceil(R / bw))
    band = np.minimum((r / bw).astype(np.int64), nb - 1)
    members, start, idx = _class_layout(band, theta)
    nb = len(start) - 1
    lo = np.arange(nb) * bw
    hi = np.minimum(lo + bw, R)
    hi[-1] = R
    k = get_kernels(backend)
    a, b = k.sorted_scan_edges(
        1, theta, r, np.zeros(p.n), 1.0, 0.0, float(R), 2.0 * float(p.t_h),
        band, idx, start, members, theta[members], lo, hi,
        stream_seed(seed, 1),
    )
    return Graph.from_arrays(p.n, a, b)


# -- (alpha, beta) power-law graphs --------------------------------------------


def _as_int(x):
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, float) and x.is_integer():
        return int(x)
    return None


def abplg_degree_counts(e_alpha: float, beta: float) -> np.ndarray:
    """Counts ``y[i-1] = floor(e_alpha / i^beta)`` for ``i = 1 .. Delta``.

    ``Delta`` is the largest ``i`` with ``i^beta <= e_alpha``. Integer inputs
    are evaluated in exact integer arithmetic.
    """
    if not beta > 1:
        raise ValueError(f"beta must exceed 1, got {beta}")
    if not e_alpha >= 1:
        raise ValueError(f"e_alpha must be >= 1, got {e_alpha}")
    ie, ib = _as_int(e_alpha), _as_int(beta)
    ys = []
    i = 1
    while True:
        if ie is not None and ib is not None:
            y = ie // i ** ib
        else:
            y = math.floor(e_alpha / i ** beta)
        if y < 1:
            break
        ys.append(y)
        i += 1
    return np.array(ys, dtype=np.int64)


def gen_alpha_beta_plg(e_alpha: float, beta: float, seed: int, simple: bool = False) -> Graph:
    """Configuration-model realization of the (alpha, beta) power-law degree sequence.

    Vertices are numbered by increasing target degree. If the stub total is
    odd a further degree-1 vertex is appended. Loops are removed by
    degree-preserving switches (a loop ``(a, a)`` and a pair ``(b, c)`` become
    ``(a, b), (a, c)``), at most ``100 n`` attempts, after which any loop left
    is erased. With ``simple=True`` loops and parallel edges are erased.
    """
    y = abplg_degree_counts(e_alpha, beta)
    deg = np.repeat(np.arange(1, len(y) + 1, dtype=np.int64), y)
    if deg.sum() % 2:
        deg = np.append(deg, 1)
    n = len(deg)
    rng = _rng(seed, 0)
    stubs = rng.permutation(np.repeat(np.arange(n, dtype=np.int64), deg))
    a = stubs[0::2].copy()
    b = stubs[1::2].copy()
    if simple:
        keep = a != b
        a, b = a[keep], b[keep]
        lo, hi = np.minimum(a, b), np.maximum(a, b)
        key = np.unique(lo * n + hi)
        return Graph.from_arrays(n, key // n, key % n)
    loops = list(np.flatnonzero(a == b))
    m = len(a)
    attempts = 0
    budget = 100 * n
    while loops and attempts < budget:
        i = loops[-1]
        attempts += 1
        j = int(rng.integers(m))
        x = a[i]
        if j == i or a[j] == x or b[j] == x:
            continue
        # (x, x), (p, c) -> (x, p), (x, c)
        b[i] = a[j]
        a[j] = x
        loops.pop()
    keep = a != b
    return Graph.from_arrays(n, a[keep], b[keep])


def random_regular(n: int, d: int, seed: int, max_tries: int = 10000) -> Graph:
    """Uniform simple ``d``-regular graph on ``n`` vertices by rejection from pairings."""
    if n * d % 2 or d >= n or d < 0:
        raise ValueError(f"no simple {d}-regular graph on {n} vertices")
    rng = _rng(seed, 0)
    stubs = np.repeat(np.arange(n, dtype=np.int64), d)
    for _ in range(max_tries):
        s = rng.permutation(stubs)
        a, b = s[0::2], s[1::2]
        if np.any(a == b):
            continue
        lo, hi = np.minimum(a, b), np.maximum(a, b)
        if len(np.unique(lo * n + hi)) != len(lo):
            continue
        return Graph.from_arrays(n, lo, hi)
    raise RuntimeError(f"no simple pairing found in {max_tries} tries")
