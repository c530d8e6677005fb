"""Loop-free undirected multigraphs, degree buckets and edge-list I/O.

Vertices are the dense ids ``0 .. n-1``. Edges are stored once per unordered
pair ``(u, v)`` with ``u < v`` together with a positive multiplicity, sorted
lexicographically so that two equal graphs have identical arrays.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import numpy as np

from .errors import GraphError, GraphFormatError

__all__ = [
    "Graph",
    "DegreeBuckets",
    "degree_buckets",
    "bucket_of",
    "volume",
    "load_graph",
    "save_graph",
    "disjoint_union",
    "cycle_graph",
    "path_graph",
    "star_graph",
    "complete_graph",
    "petersen_graph",
]


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable loop-free multigraph.

    Attributes
    ----------
    n : int
        Number of vertices.
    u, v : ndarray of int64
        Endpoints of each distinct pair, ``u < v``, lexicographically sorted.
    mult : ndarray of int64
        Multiplicity of each pair (all entries >= 1).
    """

    n: int
    u: np.ndarray
    v: np.ndarray
    mult: np.ndarray

    @classmethod
    def from_edges(cls, n: int, edges: Iterable, mult: Iterable | None = None) -> Graph:
        """Build a graph from endpoint pairs; repeated pairs accumulate multiplicity."""
        n = int(n)
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        arr = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges, dtype=np.int64)
        if arr.size == 0:
            arr = arr.reshape(0, 2)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise GraphError("edges must be a sequence of (u, v) pairs")
        if mult is None:
            w = np.ones(len(arr), dtype=np.int64)
        else:
            w = np.asarray(mult, dtype=np.int64).reshape(-1)
            if len(w) != len(arr):
                raise GraphError("multiplicity array length does not match edge count")
            if len(w) and w.min() < 1:
                raise GraphError("edge multiplicities must be positive")
        return cls.from_arrays(n, arr[:, 0], arr[:, 1], w)

    @classmethod
    def from_arrays(cls, n: int, a: np.ndarray, b: np.ndarray, w: np.ndarray | None = None) -> Graph:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        w = np.ones(len(a), dtype=np.int64) if w is None else np.asarray(w, dtype=np.int64)
        if len(a):
            if a.min() < 0 or b.min() < 0 or a.max() >= n or b.max() >= n:
                raise GraphError(f"vertex id out of range for n={n}")
            loops = np.flatnonzero(a == b)
            if len(loops):
                raise GraphError(f"loop at vertex {int(a[loops[0]])} is not allowed")
        lo = np.minimum(a, b)
        hi = np.maximum(a, b)
        if len(lo):
            key = lo * max(n, 1) + hi
            uniq, inv = np.unique(key, return_inverse=True)
            acc = np.bincount(inv, weights=w, minlength=len(uniq)).astype(np.int64)
            lo = uniq // max(n, 1)
            hi = uniq % max(n, 1)
        else:
            acc = np.zeros(0, dtype=np.int64)
        for arr in (lo, hi, acc):
            arr.setflags(write=False)
        return cls(n, lo, hi, acc)

    # -- basic quantities ------------------------------------------------------

    @property
    def num_pairs(self) -> int:
        """Number of distinct adjacent pairs."""
        return int(len(self.u))

    @cached_property
    def m(self) -> int:
        """Number of edges counted with multiplicity."""
        return int(self.mult.sum())

    @cached_property
    def degrees(self) -> np.ndarray:
        deg = np.bincount(self.u, weights=self.mult, minlength=self.n)
        deg += np.bincount(self.v, weights=self.mult, minlength=self.n)
        out = deg.astype(np.int64)
        out.setflags(write=False)
        return out

    def degree(self, x: int) -> int:
        return int(self.degrees[x])

    @property
    def simple_flag(self) -> bool:
        return bool(np.all(self.mult == 1))

    @property
    def max_degree(self) -> int:
        return int(self.degrees.max()) if self.n else 0

    @property
    def min_degree(self) -> int:
        return int(self.degrees.min()) if self.n else 0

    @cached_property
    def edges(self) -> dict[tuple[int, int], int]:
        """Mapping ``(u, v) -> multiplicity`` with ``u < v``."""
        return {(int(a), int(b)): int(c) for a, b, c in zip(self.u, self.v, self.mult)}

    @cached_property
    def _csr(self):
        src = np.concatenate([self.u, self.v])
        dst = np.concatenate([self.v, self.u])
        w = np.concatenate([self.mult, self.mult])
        order = np.lexsort((dst, src))
        src, dst, w = src[order], dst[order], w[order]
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=self.n), out=indptr[1:])
        return indptr, dst, w

    def neighbors(self, x: int) -> np.ndarray:
        """Distinct neighbours of ``x`` in increasing id order."""
        indptr, dst, _ = self._csr
        return dst[indptr[x]:indptr[x + 1]]

    @cached_property
    def adjacency(self) -> list[list[int]]:
        """Neighbour lists (distinct neighbours, sorted) as plain Python lists."""
        indptr, dst, _ = self._csr
        lst = dst.tolist()
        ptr = indptr.tolist()
        return [lst[ptr[i]:ptr[i + 1]] for i in range(self.n)]

    @cached_property
    def multiplicities(self) -> list[list[int]]:
        """Edge multiplicities aligned with :attr:`adjacency`."""
        indptr, _, w = self._csr
        lst = w.tolist()
        ptr = indptr.tolist()
        return [lst[ptr[i]:ptr[i + 1]] for i in range(self.n)]

    @cached_property
    def closed_masks(self) -> list[int]:
        """Bitmask of the inclusive neighbourhood of every vertex."""
        masks = []
        for x, nb in enumerate(self.adjacency):
            m = 1 << x
            for y in nb:
                m |= 1 << y
            masks.append(m)
        return masks

    def has_edge(self, a: int, b: int) -> bool:
        if a > b:
            a, b = b, a
        return (a, b) in self.edges

    def isolated_vertices(self) -> np.ndarray:
        return np.flatnonzero(self.degrees == 0)

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by smallest vertex."""
        seen = [False] * self.n
        adj = self.adjacency
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack = [s]
            comp = []
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def induced_subgraph(self, vertices: Iterable[int]) -> Graph:
        """Subgraph induced by ``vertices``, relabelled to ``0 .. k-1`` in sorted order."""
        vs = np.array(sorted(set(int(x) for x in vertices)), dtype=np.int64)
        relabel = np.full(self.n, -1, dtype=np.int64)
        relabel[vs] = np.arange(len(vs))
        keep = (relabel[self.u] >= 0) & (relabel[self.v] >= 0)
        return Graph.from_arrays(len(vs), relabel[self.u[keep]], relabel[self.v[keep]], self.mult[keep])

    def skeleton(self) -> Graph:
        """The simple graph on the same adjacent pairs."""
        if self.simple_flag:
            return self
        return Graph.from_arrays(self.n, self.u, self.v)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.u, other.u)
            and np.array_equal(self.v, other.v)
            and np.array_equal(self.mult, other.mult)
        )

    __hash__ = None

    def __repr__(self):
        kind = "simple" if self.simple_flag else "multi"
        return f"Graph(n={self.n}, pairs={self.num_pairs}, m={self.m}, {kind})"


def disjoint_union(parts: Iterable[Graph]) -> tuple[Graph, list[int]]:
    """Place graphs side by side; returns the union and each part's id offset."""
    us, vs, ws, offsets = [], [], [], []
    off = 0
    for g in parts:
        offsets.append(off)
        us.append(g.u + off)
        vs.append(g.v + off)
        ws.append(g.mult)
        off += g.n
    if not us:
        return Graph.from_edges(0, []), []
    return Graph.from_arrays(off, np.concatenate(us), np.concatenate(vs), np.concatenate(ws)), offsets


# -- buckets and volume --------------------------------------------------------


@dataclass(frozen=True)
class DegreeBuckets:
    """Vertex counts per degree bucket ``[2^d, 2^(d+1))``; degree-0 vertices are separate."""

    counts: tuple[int, ...]
    isolated: int

    def count(self, d: int) -> int:
        return self.counts[d] if 0 <= d < len(self.counts) else 0

    @property
    def top(self) -> int:
        """Index of the highest non-empty bucket, or -1 if every vertex is isolated."""
        return len(self.counts) - 1


def bucket_of(degrees) -> np.ndarray:
    """Bucket index ``floor(log2 deg)`` for positive integer degrees (exact via frexp)."""
    deg = np.asarray(degrees)
    _, exp = np.frexp(deg.astype(np.float64))
    return (exp - 1).astype(np.int64)


def degree_buckets(g: Graph) -> DegreeBuckets:
    deg = g.degrees
    pos = deg[deg > 0]
    isolated = int(g.n - len(pos))
    if len(pos) == 0:
        return DegreeBuckets((), isolated)
    counts = np.bincount(bucket_of(pos))
    return DegreeBuckets(tuple(int(c) for c in counts), isolated)


def volume(g: Graph, s: Iterable[int]) -> int:
    """Sum of degrees over the vertex set ``s``."""
    idx = np.fromiter((int(x) for x in set(s)), dtype=np.int64)
    if len(idx) and (idx.min() < 0 or idx.max() >= g.n):
        bad = idx[(idx < 0) | (idx >= g.n)][0]
        raise GraphError(f"vertex {int(bad)} is not in the graph (n={g.n})")
    return int(g.degrees[idx].sum()) if len(idx) else 0


# -- edge-list I/O -------------------------------------------------------------


def _parse_int(tok: str, lineno: int) -> int:
    if not tok.isascii() or not tok.isdigit():
        raise GraphFormatError(f"expected a non-negative decimal integer, got {tok!r}", lineno)
    return int(tok)


def parse_edge_list(text: str) -> Graph:
    n = m = None
    a, b, w = [], [], []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r").strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if n is None:
            if len(toks) != 4 or toks[0] != "n" or toks[2] != "m":
                raise GraphFormatError("header must read 'n <int> m <int>'", lineno)
            n = _parse_int(toks[1], lineno)
            m = _parse_int(toks[3], lineno)
            continue
        if len(toks) not in (2, 3):
            raise GraphFormatError(f"malformed edge line {line!r}", lineno)
        x = _parse_int(toks[0], lineno)
        y = _parse_int(toks[1], lineno)
        k = _parse_int(toks[2], lineno) if len(toks) == 3 else 1
        if x == y:
            raise GraphFormatError(f"loop at vertex {x}", lineno)
        if x >= n or y >= n:
            raise GraphFormatError(f"vertex id {max(x, y)} out of range for n={n}", lineno)
        if k < 1:
            raise GraphFormatError("multiplicity must be >= 1", lineno)
        a.append(x)
        b.append(y)
        w.append(k)
    if n is None:
        raise GraphFormatError("missing header line 'n <int> m <int>'")
    if len(a) != m:
        raise GraphFormatError(f"header announces m={m} edge lines but file has {len(a)}")
    return Graph.from_arrays(n, np.array(a, dtype=np.int64), np.array(b, dtype=np.int64),
                             np.array(w, dtype=np.int64))


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.n} m {g.num_pairs}"]
    for a, b, k in zip(g.u.tolist(), g.v.tolist(), g.mult.tolist()):
        lines.append(f"{a} {b}" if k == 1 else f"{a} {b} {k}")
    return "\n".join(lines) + "\n"


def load_graph(path: str | os.PathLike, format: str = "edge-list") -> Graph:
    """Read a graph in the edge-list format (see ``format_edge_list``)."""
    if format != "edge-list":
        raise ValueError(f"unsupported graph format {format!r}")
    with open(path, "r", encoding="ascii", newline="") as fh:
        return parse_edge_list(fh.read())


def save_graph(g: Graph, path: str | os.PathLike) -> None:
    try:
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(format_edge_list(g))
    except OSError as exc:
        raise OSError(f"could not write graph to {os.fspath(path)}: {exc}") from exc


# -- small named graphs ----------------------------------------------------------


def cycle_graph(n: int) -> Graph:
    """The n-cycle; ``n == 2`` gives a double edge (a multigraph 2-cycle)."""
    if n < 2:
        raise GraphError(f"a loop-free cycle needs at least 2 vertices, got {n}")
    if n == 2:
        return Graph.from_edges(2, [(0, 1)], [2])
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    """Star with centre 0 and ``leaves`` leaves (``leaves + 1`` vertices)."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)
