"""Greedy approximation algorithms and feasibility checks.

Ties are always broken towards the smallest vertex id, so every solver is
deterministic. On multigraphs a vertex degree counts parallel edges, while
domination and covering only depend on adjacency.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .errors import GraphError
from .graph import Graph

__all__ = [
    "PROBLEMS",
    "SolveResult",
    "greedy_mds",
    "greedy_cds",
    "greedy_mis",
    "greedy_vc_degree",
    "matching_vc",
    "validate_solution",
    "solve",
]

PROBLEMS = ("MDS", "CDS", "MIS", "MVC")


@dataclass
class SolveResult:
    problem: str
    algorithm: str
    solution: tuple
    valid: bool
    trace: list = field(default_factory=list)
    witness: object = None

    @property
    def size(self) -> int:
        return len(self.solution)

    def to_dict(self, with_trace=False):
        d = {
            "problem": self.problem,
            "algorithm": self.algorithm,
            "solution": list(self.solution),
            "size": self.size,
            "valid": self.valid,
        }
        if with_trace:
            d["trace"] = [{"vertex": v, "gain": g} for v, g in self.trace]
        return d


def _require_no_isolated(g: Graph, what: str):
    iso = g.isolated_vertices()
    if len(iso):
        raise GraphError(f"{what} needs a graph without isolated vertices; vertex {int(iso[0])} is isolated")


def _finish(g, problem, algorithm, chosen, trace):
    sol = tuple(sorted(chosen))
    ok, wit = validate_solution(g, problem, sol)
    return SolveResult(problem, algorithm, sol, ok, trace, wit)


def greedy_mds(g: Graph) -> SolveResult:
    """Repeatedly take the vertex dominating the most not yet dominated vertices."""
    _require_no_isolated(g, "greedy_mds")
    adj = g.adjacency
    n = g.n
    gain = [len(adj[x]) + 1 for x in range(n)]
    dominated = [False] * n
    heap = [(-gain[x], x) for x in range(n)]
    heapq.heapify(heap)
    left = n
    chosen, trace = [], []
    while left:
        neg, x = heapq.heappop(heap)
        if -neg != gain[x]:
            if gain[x] > 0:
                heapq.heappush(heap, (-gain[x], x))
            continue
        chosen.append(x)
        trace.append((x, gain[x]))
        for y in [x] + adj[x]:
            if dominated[y]:
                continue
            dominated[y] = True
            left -= 1
            gain[y] -= 1
            for z in adj[y]:
                gain[z] -= 1
    return _finish(g, "MDS", "greedy", chosen, trace)


class _DSU:
    __slots__ = ("parent",)

    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a != b:
            self.parent[max(a, b)] = min(a, b)
        return a != b


def greedy_cds(g: Graph) -> SolveResult:
    """Connected dominating set by the two-component potential greedy.

    With ``C`` the chosen set, ``p(C)`` counts the components of the spanning
    subgraph formed by all edges touching ``C`` and ``q(C)`` the components of
    the subgraph induced by ``C``. Each step adds the vertex with the largest
    decrease of ``p + q`` (smallest id on ties) until ``p = q = 1``.
    """
    _require_no_isolated(g, "greedy_cds")
    if not g.is_connected():
        raise GraphError("greedy_cds needs a connected graph")
    n = g.n
    adj = g.adjacency
    span = _DSU(n)  # components of (V, edges touching C)
    ind = _DSU(n)  # components of G[C], meaningful on members of C only
    in_c = [False] * n
    p, q = n, 0
    chosen, trace = [], []
    while p + q > 2 or not chosen:
        best, best_x = None, -1
        for x in range(n):
            if in_c[x]:
                continue
            roots = {span.find(x)}
            croots = set()
            for y in adj[x]:
                roots.add(span.find(y))
                if in_c[y]:
                    croots.add(ind.find(y))
            dec = (len(roots) - 1) + (len(croots) - 1)
            if best is None or dec > best:
                best, best_x = dec, x
        x = best_x
        if best <= 0 and chosen:  # cannot happen on a connected graph; guard against looping
            raise GraphError("potential greedy made no progress")
        in_c[x] = True
        chosen.append(x)
        trace.append((x, best))
        for y in adj[x]:
            if span.union(x, y):
                p -= 1
            if in_c[y] and ind.union(x, y):
                q -= 1
        q += 1
    return _finish(g, "CDS", "greedy", chosen, trace)


def greedy_mis(g: Graph) -> SolveResult:
    """Repeatedly take a vertex of minimum residual degree and delete its closed neighbourhood."""
    n = g.n
    adj, mul = g.adjacency, g.multiplicities
    deg = [int(d) for d in g.degrees]
    alive = [True] * n
    heap = [(deg[x], x) for x in range(n)]
    heapq.heapify(heap)
    chosen, trace = [], []
    while heap:
        d, x = heapq.heappop(heap)
        if not alive[x] or d != deg[x]:
            continue
        chosen.append(x)
        trace.append((x, d))
        alive[x] = False
        gone = [y for y in adj[x] if alive[y]]
        for y in gone:
            alive[y] = False
        for y in gone:
            for z, w in zip(adj[y], mul[y]):
                if alive[z]:
                    deg[z] -= w
                    heapq.heappush(heap, (deg[z], z))
    return _finish(g, "MIS", "greedy", chosen, trace)


def greedy_vc_degree(g: Graph) -> SolveResult:
    """Repeatedly take a vertex of maximum residual degree until no edge is left."""
    n = g.n
    adj, mul = g.adjacency, g.multiplicities
    deg = [int(d) for d in g.degrees]
    removed = [False] * n
    edges_left = g.m
    heap = [(-deg[x], x) for x in range(n) if deg[x] > 0]
    heapq.heapify(heap)
    chosen, trace = [], []
    while edges_left > 0:
        nd, x = heapq.heappop(heap)
        if removed[x] or -nd != deg[x]:
            continue
        chosen.append(x)
        trace.append((x, deg[x]))
        removed[x] = True
        edges_left -= deg[x]
        for y, w in zip(adj[x], mul[x]):
            if not removed[y]:
                deg[y] -= w
                if deg[y] > 0:
                    heapq.heappush(heap, (-deg[y], y))
        deg[x] = 0
    return _finish(g, "MVC", "greedy", chosen, trace)


def matching_vc(g: Graph) -> SolveResult:
    """Both endpoints of a maximal matching built in lexicographic edge order."""
    covered = [False] * g.n
    chosen, trace = [], []
    for a, b in zip(g.u.tolist(), g.v.tolist()):
        if not covered[a] and not covered[b]:
            covered[a] = covered[b] = True
            chosen += [a, b]
            trace.append(((a, b), 2))
    return _finish(g, "MVC", "matching", chosen, trace)


def validate_solution(g: Graph, problem: str, s) -> tuple[bool, object]:
    """Check feasibility of ``s`` for ``problem``; returns ``(ok, witness)``.

    The witness is the largest undominated vertex (MDS, CDS), a vertex of ``s`` cut off
    from the rest (CDS), an edge inside ``s`` or a vertex that could still be
    added (MIS), or an uncovered edge (MVC).
    """
    problem = problem.upper()
    if problem not in PROBLEMS:
        raise ValueError(f"unknown problem {problem!r}")
    members = set(int(x) for x in s)
    for x in members:
        if not 0 <= x < g.n:
            raise GraphError(f"vertex {x} is not in the graph (n={g.n})")
    adj = g.adjacency
    if problem in ("MDS", "CDS"):
        dom = [False] * g.n
        for x in members:
            dom[x] = True
            for y in adj[x]:
                dom[y] = True
        # report the highest undominated id
        for x in range(g.n - 1, -1, -1):
            if not dom[x]:
                return False, x
        if problem == "CDS" and members:
            start = min(members)
            seen = {start}
            stack = [start]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y in members and y not in seen:
                        seen.add(y)
                        stack.append(y)
            if len(seen) != len(members):
                return False, min(members - seen)
        if problem == "CDS" and not members and g.n:
            return False, 0
        return True, None
    if problem == "MIS":
        for x in sorted(members):
            for y in adj[x]:
                if y in members and x < y:
                    return False, (x, y)
        for x in range(g.n):
            if x not in members and not any(y in members for y in adj[x]):
                return False, x
        return True, None
    for a, b in zip(g.u.tolist(), g.v.tolist()):
        if a not in members and b not in members:
            return False, (a, b)
    return True, None


_DISPATCH = {
    ("MDS", "greedy"): greedy_mds,
    ("CDS", "greedy"): greedy_cds,
    ("MIS", "greedy"): greedy_mis,
    ("MVC", "greedy"): greedy_vc_degree,
    ("MVC", "matching"): matching_vc,
}


def solve(g: Graph, problem: str, algorithm: str = "greedy") -> SolveResult:
    key = (problem.upper(), algorithm)
    if key not in _DISPATCH:
        raise ValueError(f"no algorithm {algorithm!r} for problem {problem!r}")
    return _DISPATCH[key](g)
