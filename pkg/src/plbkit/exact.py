"""Exact optima on small graphs using vertex bitmasks.

Every oracle refuses graphs above its vertex budget instead of running for
an exponential amount of time.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import BudgetExceeded, GraphError
from .graph import Graph

__all__ = ["ExactResult", "exact_mds", "exact_mis", "exact_mvc", "exact_cds", "exact", "brute_force"]

MAX_BITS = 64


@dataclass(frozen=True)
class ExactResult:
    problem: str
    size: int
    witness: tuple

    def to_dict(self):
        return {"problem": self.problem, "size": self.size, "witness": list(self.witness)}


def _check_budget(g: Graph, budget: int, what: str):
    if g.n > min(budget, MAX_BITS):
        raise BudgetExceeded(f"{what}: n={g.n} exceeds the vertex budget {min(budget, MAX_BITS)}")


def _bits(mask: int) -> tuple:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def exact_mds(g: Graph, budget: int = 30) -> ExactResult:
    """Minimum dominating set by branch and bound over closed neighbourhoods.

    The undominated vertex with the fewest dominators is branched on; a
    branch is cut when ``ceil(undominated / best single gain)`` more vertices
    cannot beat the incumbent.
    """
    _check_budget(g, budget, "exact_mds")
    n = g.n
    if n == 0:
        return ExactResult("MDS", 0, ())
    closed = g.closed_masks
    full = (1 << n) - 1
    # dominators[v]: mask of vertices whose closed neighbourhood contains v
    dominators = closed  # symmetric
    best = [n + 1, full]

    def rec(undom, chosen, size):
        if undom == 0:
            if size < best[0]:
                best[0], best[1] = size, chosen
            return
        if size + 1 >= best[0]:
            return
        maxgain = 0
        pick, pick_cnt = -1, n + 1
        for v in _bits(undom):
            cands = dominators[v]
            cnt = cands.bit_count()
            if cnt < pick_cnt:
                pick, pick_cnt = v, cnt
        for u in range(n):
            gsz = (closed[u] & undom).bit_count()
            if gsz > maxgain:
                maxgain = gsz
        need = -(-undom.bit_count() // maxgain)
        if size + need >= best[0]:
            return
        cands = sorted(_bits(dominators[pick]), key=lambda u: (-(closed[u] & undom).bit_count(), u))
        for u in cands:
            rec(undom & ~closed[u], chosen | (1 << u), size + 1)

    rec(full, 0, 0)
    return ExactResult("MDS", best[0], _bits(best[1]))


def _mis_mask(adj_masks, n) -> int:
    best = [0, 0]  # size, mask

    def clique_cover_bound(p):
        # greedy partition of p into cliques; its size bounds any independent set in p
        cnt = 0
        while p:
            low = p & -p
            v = low.bit_length() - 1
            clique = low
            cand = p & adj_masks[v]
            while cand:
                lw = cand & -cand
                clique |= lw
                cand &= adj_masks[lw.bit_length() - 1]
            p &= ~clique
            cnt += 1
        return cnt

    def rec(p, chosen, size):
        # fold in vertices of residual degree <= 1: some maximum set contains them
        while p:
            low_deg = -1
            for v in _bits(p):
                if (adj_masks[v] & p).bit_count() <= 1:
                    low_deg = v
                    break
            if low_deg < 0:
                break
            chosen |= 1 << low_deg
            size += 1
            p &= ~((1 << low_deg) | adj_masks[low_deg])
        if p == 0:
            if size > best[0]:
                best[0], best[1] = size, chosen
            return
        if size + clique_cover_bound(p) <= best[0]:
            return
        v = max(_bits(p), key=lambda x: ((adj_masks[x] & p).bit_count(), -x))
        rec(p & ~((1 << v) | adj_masks[v]), chosen | (1 << v), size + 1)
        rec(p & ~(1 << v), chosen, size)

    rec((1 << n) - 1, 0, 0)
    return best[1]


def exact_mis(g: Graph, budget: int = 40) -> ExactResult:
    """Maximum independent set by branch and bound with a clique-cover bound."""
    _check_budget(g, budget, "exact_mis")
    adj_masks = [m & ~(1 << x) for x, m in enumerate(g.closed_masks)]
    mask = _mis_mask(adj_masks, g.n) if g.n else 0
    w = _bits(mask)
    return ExactResult("MIS", len(w), w)


def exact_mvc(g: Graph, budget: int = 40) -> ExactResult:
    """Minimum vertex cover as the complement of a maximum independent set."""
    _check_budget(g, budget, "exact_mvc")
    mis = exact_mis(g.skeleton(), budget)
    inside = set(mis.witness)
    w = tuple(x for x in range(g.n) if x not in inside)
    return ExactResult("MVC", len(w), w)


def _connected_mask(mask: int, adj_masks) -> bool:
    if mask == 0:
        return False
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj_masks[v]
        nxt &= mask & ~seen
        seen |= nxt
        frontier = nxt
    return seen == mask


def exact_cds(g: Graph, budget: int = 20) -> ExactResult:
    """Minimum connected dominating set by enumerating subsets in increasing size."""
    if not g.is_connected() or g.n == 0:
        raise GraphError("exact_cds needs a non-empty connected graph")
    _check_budget(g, budget, "exact_cds")
    n = g.n
    closed = g.closed_masks
    adj_masks = [m & ~(1 << x) for x, m in enumerate(closed)]
    full = (1 << n) - 1
    lo = exact_mds(g, max(budget, n)).size
    for k in range(lo, n + 1):
        for combo in combinations(range(n), k):
            dom = 0
            mask = 0
            for v in combo:
                dom |= closed[v]
                mask |= 1 << v
            if dom == full and _connected_mask(mask, adj_masks):
                return ExactResult("CDS", k, combo)
    raise AssertionError("unreachable: the full vertex set is a connected dominating set")


_ORACLES = {"MDS": exact_mds, "MIS": exact_mis, "MVC": exact_mvc, "CDS": exact_cds}


def exact(g: Graph, problem: str, budget: int | None = None) -> ExactResult:
    fn = _ORACLES.get(problem.upper())
    if fn is None:
        raise ValueError(f"unknown problem {problem!r}")
    return fn(g) if budget is None else fn(g, budget)


def brute_force(g: Graph, problem: str) -> int:
    """Optimum by checking all ``2^n`` subsets; a cross-check for the oracles."""
    problem = problem.upper()
    n = g.n
    if n > 22:
        raise BudgetExceeded(f"brute_force: n={n} is too large")
    closed = g.closed_masks
    adj_masks = [m & ~(1 << x) for x, m in enumerate(closed)]
    full = (1 << n) - 1
    edges = list(zip(g.u.tolist(), g.v.tolist()))
    best = None
    for mask in range(1 << n):
        size = mask.bit_count()
        if problem in ("MDS", "CDS"):
            if best is not None and size >= best:
                continue
            dom = 0
            for v in _bits(mask):
                dom |= closed[v]
            if dom != full:
                continue
            if problem == "CDS" and not _connected_mask(mask, adj_masks):
                continue
            best = size
        elif problem == "MIS":
            if best is not None and size <= best:
                continue
            if any(adj_masks[v] & mask for v in _bits(mask)):
                continue
            best = size
        elif problem == "MVC":
            if best is not None and size >= best:
                continue
            if all(mask >> a & 1 or mask >> b & 1 for a, b in edges):
                best = size
        else:
            raise ValueError(f"unknown problem {problem!r}")
    return best
