"""Hide a cubic graph among gadgets so that the union is power-law bounded.

Two constructions are provided. The multigraph one fills degree buckets
with plain cycles (bucket 1) and regular cycles whose paired vertices are
joined by parallel edges (buckets ``d >= 2``). The simple one uses stars,
whose leaves fill bucket 0 and whose centres fill the higher buckets. In
both, the cubic input keeps vertex ids ``0 .. n-1`` and stays a union of
whole components, so optima of the union split into the input optimum plus
closed-form gadget optima.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .bounds import to_fraction
from .errors import EmbeddingError, GraphError
from .graph import Graph, cycle_graph, disjoint_union
from .plb import PlbParams, check_plb, unit_bound

__all__ = [
    "Gadget",
    "EmbedResult",
    "regular_cycle",
    "star",
    "gadget_opt",
    "gadget_graph",
    "embed_multigraph",
    "embed_simple",
    "reduction_opt",
    "embedding_growth",
]


def regular_cycle(n: int, d: int) -> Graph:
    """Two ``n``-cycles whose ``i``-th vertices are joined by ``d - 2`` parallel edges.

    Vertices ``0 .. n-1`` form the first cycle and ``n .. 2n-1`` the second;
    every vertex has degree ``d``.
    """
    if n < 3:
        raise GraphError(f"regular cycle needs n >= 3, got {n}")
    if d < 3:
        raise GraphError(f"regular cycle needs d >= 3, got {d}")
    edges, mult = [], []
    for i in range(n):
        edges += [(i, (i + 1) % n), (n + i, n + (i + 1) % n), (i, n + i)]
        mult += [1, 1, d - 2]
    return Graph.from_edges(2 * n, edges, mult)


def star(size: int) -> Graph:
    """Star on ``size`` vertices with centre 0."""
    if size < 2:
        raise GraphError(f"star needs at least 2 vertices, got {size}")
    return Graph.from_edges(size, [(0, i) for i in range(1, size)])


def _problem(p: str) -> str:
    p = p.lower()
    if p not in ("mds", "mis", "mvc"):
        raise ValueError(f"unknown problem {p!r}; expected mds, mis or mvc")
    return p


def gadget_opt(kind: str, n: int, d: int | None, problem: str) -> int:
    """Closed-form optimum of a gadget.

    ``n`` is the cycle length for ``"cycle"`` (``n = 2`` is a double edge) and
    ``"regular_cycle"`` (which has ``2n`` vertices), and the vertex count for
    ``"star"``. ``d`` is only used to validate regular cycles.
    """
    p = _problem(problem)
    if kind == "cycle":
        if n < 2:
            raise ValueError(f"cycle needs n >= 2, got {n}")
        return {"mds": -(-n // 3), "mis": n // 2, "mvc": -(-n // 2)}[p]
    if kind == "regular_cycle":
        if n < 3 or (d is not None and d < 3):
            raise ValueError(f"regular cycle needs n >= 3 and d >= 3, got n={n}, d={d}")
        if p == "mds":
            return -(-2 * n // 4) + (1 if n % 4 == 2 else 0)
        if p == "mis":
            return n if n % 2 == 0 else n - 1
        return n if n % 2 == 0 else n + 1
    if kind == "star":
        if n < 2:
            raise ValueError(f"star needs n >= 2, got {n}")
        return n - 1 if p == "mis" else 1
    raise ValueError(f"unknown gadget kind {kind!r}")


def gadget_graph(kind: str, n: int, d: int | None = None) -> Graph:
    if kind == "cycle":
        return cycle_graph(n)
    if kind == "regular_cycle":
        return regular_cycle(n, d)
    if kind == "star":
        return star(n)
    raise ValueError(f"unknown gadget kind {kind!r}")


@dataclass(frozen=True)
class Gadget:
    """``count`` copies of one gadget placed in bucket ``bucket``."""

    bucket: int
    kind: str
    count: int
    n: int
    d: int | None = None

    @property
    def vertices(self) -> int:
        per = 2 * self.n if self.kind == "regular_cycle" else self.n
        return per * self.count

    def to_dict(self):
        return {"bucket": self.bucket, "kind": self.kind, "count": self.count, "n": self.n,
                "d": self.d, "vertices": self.vertices}


@dataclass
class EmbedResult:
    graph: Graph
    input_component_map: tuple
    gadget_inventory: list
    params_used: dict
    growth_C: dict = field(default_factory=dict)
    report: object = None

    def to_dict(self):
        return {
            "n_input": len(self.input_component_map),
            "N": self.graph.n,
            "m": self.graph.m,
            "input_component_map": list(self.input_component_map),
            "gadget_inventory": [g.to_dict() for g in self.gadget_inventory],
            "params_used": self.params_used,
            "growth_C": self.growth_C,
            "plb": self.report.to_dict() if self.report is not None else None,
        }


def embedding_growth(mode: str, c2, beta, t) -> Fraction:
    """Exact growth factor ``1 / (1 - 2 c2 K)`` of the chosen mode."""
    C2, B, T = to_fraction(c2), to_fraction(beta), to_fraction(t)
    if mode == "multigraph":
        if not B > 1:
            raise EmbeddingError(f"beta must exceed 1, got {beta}")
        K = 1 / (T + 1) + 1 / (B - 1)
    else:
        if not B > 2:
            raise EmbeddingError(f"beta must exceed 2 for simple embeddings, got {beta}")
        K = 1 / (T + 1) + 1 / (B - 1) + (T + 1) / (B - 2) + 1
    if not C2 > 0:
        raise EmbeddingError(f"c2 must be positive, got {c2}")
    if T < 0:
        raise EmbeddingError(f"t must be non-negative, got {t}")
    x = 2 * C2 * K
    if x >= 1:
        raise EmbeddingError(f"bracket condition violated: 2*c2*K = {float(x):.6g} >= 1")
    # 1 + x/(1-x) and 1/(1-x) coincide
    return 1 / (1 - x)


def _check_cubic(g: Graph):
    if not g.simple_flag:
        raise EmbeddingError("input graph must be simple")
    if g.n == 0 or any(int(d) != 3 for d in g.degrees):
        raise EmbeddingError("input graph must be 3-regular")


def _ceil_frac(q: Fraction) -> int:
    return -((-q.numerator) // q.denominator)


def _lower(N, beta, t, c2, d):
    return math.ceil(c2 * unit_bound(N, beta, t, d))


def _top_bucket(N, beta):
    delta = math.ceil(N ** (1.0 / (beta - 1.0)))
    return max(1, delta.bit_length() - 1)


def _growth_bounds(n, inventory):
    # OPT of a cubic input is at least n/4 (MDS, MIS) and n/2 (MVC)
    out = {}
    lb = {"mds": Fraction(n, 4), "mis": Fraction(n, 4), "mvc": Fraction(n, 2)}
    for p in ("mds", "mis", "mvc"):
        s = sum(gd.count * gadget_opt(gd.kind, gd.n, gd.d, p) for gd in inventory)
        out[p] = float(1 + s / lb[p])
    return out


def _verify(graph, beta, t, c2, n):
    from .plb import fit_plb_n, fit_plb_u

    c1_fit = fit_plb_u(graph, beta, t)
    c3_fit, _ = fit_plb_n(graph, beta, t)
    rep = check_plb(graph, PlbParams(beta, t, c1=c1_fit, c2=c2, c3=c3_fit))
    if not rep.passed:
        raise EmbeddingError(
            f"constructed graph fails its own constants (pass_u={rep.pass_u}, pass_l={rep.pass_l}, "
            f"pass_n={rep.pass_n}, lower-bound witness bucket {rep.witness_bucket_l})")
    comps = graph.components()
    inside = set(range(n))
    for comp in comps:
        if (comp[0] < n) != (comp[-1] < n) or (comp[0] < n and not set(comp) <= inside):
            raise EmbeddingError("a gadget touches the embedded input")
    return rep


def _assemble(g_cubic, pieces):
    """Union of the input and the gadget list ``[(bucket, kind, n, d), ...]`` in order."""
    graphs = [g_cubic] + [gadget_graph(k, m, d) for _, k, m, d in pieces]
    union, _ = disjoint_union(graphs)
    inv = {}
    order = []
    for b, k, m, d in pieces:
        key = (b, k, m, d)
        if key not in inv:
            inv[key] = 0
            order.append(key)
        inv[key] += 1
    inventory = [Gadget(b, k, inv[(b, k, m, d)], m, d) for (b, k, m, d) in order]
    return union, inventory


def embed_multigraph(g_cubic: Graph, beta: float, t: float, c2: float) -> EmbedResult:
    """Embed a cubic graph into a multigraph with the three bucket properties.

    The target size is ``N = ceil(c n)`` (plus one if ``N - n`` is odd) with
    ``c = 1 / (1 - 2 c2 (1/(t+1) + 1/(beta-1)))``. Buckets ``2 .. top`` get one
    regular cycle of degree ``2^d`` sized to the lower bound, where ``top`` is
    the bucket of ``ceil(N^(1/(beta-1)))``; the highest buckets are dropped if
    they do not fit. Leftover vertex pairs go round-robin to buckets ``>= 2``
    whose upper-bound ratio stays within the largest ratio of the plan, and
    the rest to a cycle in bucket 1 (which holds the input). Bucket 0 stays
    empty, so the smallest degree is 2.
    """
    _check_cubic(g_cubic)
    c = embedding_growth("multigraph", c2, beta, t)
    n = g_cubic.n
    N = _ceil_frac(c * n)
    bumped = bool((N - n) % 2)
    N += bumped
    top = _top_bucket(N, beta)
    f_req = max(0, _lower(N, beta, t, c2, 1) - n)
    f_req += f_req % 2  # the filler cycle keeps N - n even
    budget = N - n - f_req
    if budget < 0:
        raise EmbeddingError(
            f"n={n} too small: bucket 1 needs {f_req} filler vertices but only {N - n} are available")
    halves = {d: max(3, -(-_lower(N, beta, t, c2, d) // 2)) for d in range(2, top + 1)}
    while halves and 2 * sum(halves.values()) > budget:
        del halves[max(halves)]
    free = budget - 2 * sum(halves.values())
    # round-robin pairs into buckets with upper-bound slack
    units = {d: unit_bound(N, beta, t, d) for d in [1] + list(halves)}
    ratio = max([(n + f_req) / units[1]] + [2 * m / units[d] for d, m in halves.items()])
    progress = True
    while free >= 2 and progress:
        progress = False
        for d in sorted(halves):
            if free < 2:
                break
            if (2 * halves[d] + 2) / units[d] <= ratio:
                halves[d] += 1
                free -= 2
                progress = True
    filler = f_req + free
    pieces = []
    if filler:
        pieces.append((1, "cycle", filler, None))
    for d in sorted(halves):
        pieces.append((d, "regular_cycle", halves[d], 1 << d))
    graph, inventory = _assemble(g_cubic, pieces)
    assert graph.n == N
    rep = _verify(graph, beta, t, c2, n)
    params = {"mode": "multigraph", "beta": beta, "t": t, "c1": rep.c1_fit, "c2": c2, "c3": rep.c3_fit,
              "c": float(c), "N": N, "n": n, "top_planned": top, "parity_bumped": bumped}
    return EmbedResult(graph, tuple(range(n)), inventory, params, _growth_bounds(n, inventory), rep)


def embed_simple(g_cubic: Graph, beta: float, t: float, c2: float) -> EmbedResult:
    """Embed a cubic graph into a simple graph with the three bucket properties.

    ``c = 1 / (1 - 2 c2 (1/(t+1) + 1/(beta-1) + (t+1)/(beta-2) + 1))`` and
    ``N = ceil(c n)``. Each bucket ``d = 2 .. top`` receives stars of size
    ``2^d + 1`` up to its lower bound; bucket 1 is topped up with 3-vertex
    paths and bucket 0 with single edges if needed. Further stars go
    round-robin to buckets with upper-bound slack, then single edges fill
    the rest; an odd last vertex becomes a leaf of the lowest-id star centre.
    """
    _check_cubic(g_cubic)
    c = embedding_growth("simple", c2, beta, t)
    n = g_cubic.n
    N = _ceil_frac(c * n)
    top = _top_bucket(N, beta)

    def plan_for(buckets):
        stars = {d: _lower(N, beta, t, c2, d) for d in buckets}
        p3 = max(0, _lower(N, beta, t, c2, 1) - n)
        leaves = sum(k * (1 << d) for d, k in stars.items()) + 2 * p3
        k2 = max(0, -(-(_lower(N, beta, t, c2, 0) - leaves) // 2))
        used = n + sum(k * ((1 << d) + 1) for d, k in stars.items()) + 3 * p3 + 2 * k2
        return stars, p3, k2, used

    buckets = list(range(2, top + 1))
    stars, p3, k2, used = plan_for(buckets)
    while buckets and used > N:
        buckets.pop()
        stars, p3, k2, used = plan_for(buckets)
    if used == N + 1:
        N = used  # the lower bounds alone need one vertex more than ceil(c n)
    elif used > N:
        raise EmbeddingError(f"n={n} too small: the lower bounds need {used} vertices but N={N}")
    free = N - used
    units = {d: unit_bound(N, beta, t, d) for d in range(0, max(buckets, default=1) + 1)}
    counts = {d: k for d, k in stars.items()}
    ratio = max([(n + p3) / units[1]] + [k / units[d] for d, k in counts.items()])
    progress = True
    while progress:
        progress = False
        for d in sorted(counts):
            size = (1 << d) + 1
            if free >= size and (counts[d] + 1) / units[d] <= ratio:
                counts[d] += 1
                free -= size
                progress = True
    k2 += free // 2
    free %= 2
    pieces = []
    for d in sorted(counts):
        pieces += [(d, "star", (1 << d) + 1, None)] * counts[d]
    pieces += [(1, "star", 3, None)] * p3
    pieces += [(0, "star", 2, None)] * k2
    if free:
        if pieces:
            b, k, m, d = pieces[0]
            # one more leaf keeps the centre inside its bucket (or lifts a single edge to bucket 1)
            pieces[0] = (max(b, 1), k, m + 1, d)
        else:
            N += 1
            pieces.append((0, "star", 2, None))
    graph, inventory = _assemble(g_cubic, pieces)
    assert graph.n == N
    if not graph.simple_flag:
        raise EmbeddingError("simple embedding produced parallel edges")
    rep = _verify(graph, beta, t, c2, n)
    params = {"mode": "simple", "beta": beta, "t": t, "c1": rep.c1_fit, "c2": c2, "c3": rep.c3_fit,
              "c": float(c), "N": N, "n": n, "top_planned": top}
    return EmbedResult(graph, tuple(range(n)), inventory, params, _growth_bounds(n, inventory), rep)


def reduction_opt(e: EmbedResult, problem: str, opt_of_input: int) -> int:
    """Optimum of the whole embedded graph from the optimum of the input."""
    total = int(opt_of_input)
    for gd in e.gadget_inventory:
        total += gd.count * gadget_opt(gd.kind, gd.n, gd.d, problem)
    return total
