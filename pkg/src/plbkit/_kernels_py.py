"""Pure-Python edge samplers.

Reference implementation of the compiled kernels in ``_kernels.pyx``. Both
draw from the same SplitMix64 stream and evaluate the same floating-point
expressions in the same order, so for a given seed they emit identical edge
lists. Only used when the extension is unavailable or explicitly requested.

All samplers are thinned geometric skips in the style of Miller and Hagberg:
candidates are visited along a sequence on which an envelope probability is
non-increasing, skips are drawn from the current envelope, and a landed
candidate is kept with probability ``p_true / p_envelope``.
"""
import math

import numpy as np

MASK64 = 0xFFFFFFFFFFFFFFFF
_INV53 = 1.0 / 9007199254740992.0  # 2**-53
_PI = math.pi
MODE_GIRG1 = 0
MODE_HYP = 1


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed):
        self.state = int(seed) & MASK64

    def next(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def uniform(self):
        """Uniform double on (0, 1]."""
        return ((self.next() >> 11) + 1) * _INV53


def _skip(rng, p):
    # rejected candidates before the next Bernoulli(p) success, as a float;
    # callers compare against the remaining length before truncating
    return math.log(rng.uniform()) / math.log1p(-p)


def chung_lu_edges(w, W, seed):
    """Independent pairs with probability ``min(1, w_i w_j / W)``.

    ``w`` must be sorted non-increasingly so that the probability is
    non-increasing along ``j`` for fixed ``i``.
    """
    w = [float(x) for x in w]
    n = len(w)
    rng = SplitMix64(seed)
    out_a, out_b = [], []
    for u in range(n - 1):
        wu = w[u]
        v = u + 1
        p = wu * w[v] / W
        if p > 1.0:
            p = 1.0
        while v < n and p > 0.0:
            if p < 1.0:
                s = _skip(rng, p)
                if s >= n - v:
                    break
                v += int(s)
            q = wu * w[v] / W
            if q > 1.0:
                q = 1.0
            if rng.uniform() <= q / p:
                out_a.append(u)
                out_b.append(v)
            p = q
            v += 1
    return np.array(out_a, dtype=np.int64), np.array(out_b, dtype=np.int64)


def _circ(a, b):
    d = a - b
    if d < 0.0:
        d = -d
    if d > 0.5:
        d = 1.0 - d
    return d


def _lower_index(arr, lo, hi, x):
    # first index in arr[lo:hi] with arr[i] >= x
    while lo < hi:
        mid = (lo + hi) >> 1
        if arr[mid] < x:
            lo = mid + 1
        else:
            hi = mid
    return lo


def _girg_prob(s, dist, alpha):
    if dist == 0.0:
        return 1.0
    p = math.pow(s / dist, alpha)
    return 1.0 if p > 1.0 else p


def _hyp_prob(cosh_d, R, two_t):
    if cosh_d < 1.0:
        cosh_d = 1.0
    z = (math.acosh(cosh_d) - R) / two_t
    if z > 700.0:
        return 0.0
    return 1.0 / (1.0 + math.exp(z))


def sorted_scan_edges(mode, coord, radius, weight, W, alpha, R, two_t,
                      cls_of, idx_in_cls, cls_start, members, mcoord, cls_lo, cls_hi, seed):
    """Geometric sampler on the circle with vertices grouped into classes.

    Vertices are grouped into classes (weight classes for GIRG, radial bands
    for hyperbolic graphs); ``members[cls_start[k]:cls_start[k+1]]`` lists
    class ``k`` sorted by circle coordinate, with coordinates in ``mcoord``.
    Each vertex ``u`` scans every class ``k >= cls_of[u]`` outward from its own
    coordinate, clockwise over the half circle ahead and counter-clockwise over
    the rest, so the envelope is non-increasing along each scan. A pair is
    owned by the endpoint in the lower class, and by the smaller id within a
    class.

    For ``mode == MODE_GIRG1`` ``cls_hi`` holds the largest weight of each
    class; for ``MODE_HYP`` ``cls_lo``/``cls_hi`` are the band radii.
    """
    coord = [float(x) for x in coord]
    radius = [float(x) for x in radius]
    weight = [float(x) for x in weight]
    mcoord = [float(x) for x in mcoord]
    members = [int(x) for x in members]
    cls_start = [int(x) for x in cls_start]
    cls_lo = [float(x) for x in cls_lo]
    cls_hi = [float(x) for x in cls_hi]
    n = len(coord)
    ncls = len(cls_start) - 1
    rng = SplitMix64(seed)
    out_a, out_b = [], []
    for u in range(n):
        xu = coord[u]
        cu = int(cls_of[u])
        if mode == MODE_GIRG1:
            wu = weight[u]
        else:
            ru = radius[u]
            sh_u = math.sinh(ru)
        for k in range(cu, ncls):
            k0 = cls_start[k]
            size = cls_start[k + 1] - k0
            if size == 0:
                continue
            own = k == cu
            if own:
                base = int(idx_in_cls[u])
                first_right = base + 1
            else:
                base = _lower_index(mcoord, k0, k0 + size, xu) - k0
                first_right = base
            half = xu + 0.5
            if half < 1.0:
                end = _lower_index(mcoord, k0, k0 + size, half) - k0
                n_right = end - first_right
            else:
                end = _lower_index(mcoord, k0, k0 + size, half - 1.0) - k0
                n_right = (size - first_right) + end
            n_left = size - n_right - (1 if own else 0)
            if mode == MODE_GIRG1:
                s_env = wu * cls_hi[k] / W
            else:
                rlo = cls_lo[k]
                if ru < rlo:
                    gap = rlo - ru
                elif ru > cls_hi[k]:
                    gap = ru - cls_hi[k]
                else:
                    gap = 0.0
                ch_gap = math.cosh(gap)
                sh_env = sh_u * math.sinh(rlo)
            for direction in (1, -1):
                if direction == 1:
                    start = first_right
                    cnt = n_right
                else:
                    start = base - 1
                    cnt = n_left
                j = 0
                p = -1.0
                while j < cnt:
                    pos = (start + direction * j) % size
                    v = members[k0 + pos]
                    dist = _circ(xu, mcoord[k0 + pos])
                    if mode == MODE_GIRG1:
                        q = _girg_prob(s_env, dist, alpha)
                    else:
                        sn = math.sin(_PI * dist)
                        q = _hyp_prob(ch_gap + sh_env * 2.0 * sn * sn, R, two_t)
                    if p < 0.0:
                        # first candidate of the scan: envelope starts here
                        p = q
                    if p <= 0.0:
                        break
                    if p < 1.0:
                        s = _skip(rng, p)
                        if s >= cnt - j:
                            break
                        if s >= 1.0:
                            j += int(s)
                            pos = (start + direction * j) % size
                            v = members[k0 + pos]
                            dist = _circ(xu, mcoord[k0 + pos])
                            if mode == MODE_GIRG1:
                                q = _girg_prob(s_env, dist, alpha)
                            else:
                                sn = math.sin(_PI * dist)
                                q = _hyp_prob(ch_gap + sh_env * 2.0 * sn * sn, R, two_t)
                    if not own or v > u:
                        if mode == MODE_GIRG1:
                            pt = _girg_prob(wu * weight[v] / W, dist, alpha)
                        else:
                            rv = radius[v]
                            sn = math.sin(_PI * dist)
                            pt = _hyp_prob(math.cosh(ru - rv) + sh_u * math.sinh(rv) * 2.0 * sn * sn, R, two_t)
                        if rng.uniform() <= pt / p:
                            out_a.append(u)
                            out_b.append(v)
                    p = q
                    j += 1
    return np.array(out_a, dtype=np.int64), np.array(out_b, dtype=np.int64)
