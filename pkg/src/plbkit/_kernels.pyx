# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled edge samplers; see ``_kernels_py`` for the reference version."""
import numpy as np
cimport numpy as cnp
from libc.math cimport log, log1p, pow, sinh, cosh, acosh, exp, sin
from libc.stdint cimport uint64_t, int64_t
from libcpp.vector cimport vector

cnp.import_array()

cdef double PI = 3.141592653589793
cdef double INV53 = 1.0 / 9007199254740992.0

MODE_GIRG1 = 0
MODE_HYP = 1


cdef struct Rng:
    uint64_t state


cdef inline uint64_t _next(Rng* g) nogil:
    g.state += 0x9E3779B97F4A7C15ULL
    cdef uint64_t z = g.state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL
    return z ^ (z >> 31)


cdef inline double _uniform(Rng* g) nogil:
    return <double>((_next(g) >> 11) + 1) * INV53


cdef inline double _skip(Rng* g, double p) nogil:
    return log(_uniform(g)) / log1p(-p)


cdef inline double _circ(double a, double b) nogil:
    cdef double d = a - b
    if d < 0.0:
        d = -d
    if d > 0.5:
        d = 1.0 - d
    return d


cdef inline Py_ssize_t _lower_index(const double* arr, Py_ssize_t lo, Py_ssize_t hi, double x) nogil:
    cdef Py_ssize_t mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if arr[mid] < x:
            lo = mid + 1
        else:
            hi = mid
    return lo


cdef inline double _girg_prob(double s, double dist, double alpha) nogil:
    if dist == 0.0:
        return 1.0
    cdef double p = pow(s / dist, alpha)
    return 1.0 if p > 1.0 else p


cdef inline double _hyp_prob(double cosh_d, double R, double two_t) nogil:
    if cosh_d < 1.0:
        cosh_d = 1.0
    cdef double z = (acosh(cosh_d) - R) / two_t
    if z > 700.0:
        return 0.0
    return 1.0 / (1.0 + exp(z))


cdef _to_arrays(vector[int64_t]& a, vector[int64_t]& b):
    cdef Py_ssize_t m = a.size(), i
    out_a = np.empty(m, dtype=np.int64)
    out_b = np.empty(m, dtype=np.int64)
    cdef int64_t[::1] va = out_a
    cdef int64_t[::1] vb = out_b
    for i in range(m):
        va[i] = a[i]
        vb[i] = b[i]
    return out_a, out_b


def chung_lu_edges(w, double W, uint64_t seed):
    cdef const double[::1] wv = np.ascontiguousarray(w, dtype=np.float64)
    cdef Py_ssize_t n = wv.shape[0], u, v
    cdef double wu, p, q, s
    cdef Rng g
    cdef vector[int64_t] out_a, out_b
    g.state = seed
    with nogil:
        for u in range(n - 1):
            wu = wv[u]
            v = u + 1
            p = wu * wv[v] / W
            if p > 1.0:
                p = 1.0
            while v < n and p > 0.0:
                if p < 1.0:
                    s = _skip(&g, p)
                    if s >= <double>(n - v):
                        break
                    v += <Py_ssize_t>s
                q = wu * wv[v] / W
                if q > 1.0:
                    q = 1.0
                if _uniform(&g) <= q / p:
                    out_a.push_back(u)
                    out_b.push_back(v)
                p = q
                v += 1
    return _to_arrays(out_a, out_b)


def sorted_scan_edges(int mode, coord, radius, weight, double W, double alpha, double R, double two_t,
                      cls_of, idx_in_cls, cls_start, members, mcoord, cls_lo, cls_hi, uint64_t seed):
    cdef const double[::1] xc = np.ascontiguousarray(coord, dtype=np.float64)
    cdef const double[::1] rad = np.ascontiguousarray(radius, dtype=np.float64)
    cdef const double[::1] wt = np.ascontiguousarray(weight, dtype=np.float64)
    cdef const double[::1] mc = np.ascontiguousarray(mcoord, dtype=np.float64)
    cdef const int64_t[::1] mem = np.ascontiguousarray(members, dtype=np.int64)
    cdef const int64_t[::1] cst = np.ascontiguousarray(cls_start, dtype=np.int64)
    cdef const int64_t[::1] cof = np.ascontiguousarray(cls_of, dtype=np.int64)
    cdef const int64_t[::1] idx = np.ascontiguousarray(idx_in_cls, dtype=np.int64)
    cdef const double[::1] clo = np.ascontiguousarray(cls_lo, dtype=np.float64)
    cdef const double[::1] chi = np.ascontiguousarray(cls_hi, dtype=np.float64)
    cdef Py_ssize_t n = xc.shape[0], ncls = cst.shape[0] - 1
    cdef Py_ssize_t u, k, k0, size, base, first_right, end, n_right, n_left
    cdef Py_ssize_t start, cnt, j, pos, v, direction, di
    cdef bint own
    cdef double xu, wu = 0.0, ru = 0.0, sh_u = 0.0, s_env = 0.0, rlo, gap
    cdef double ch_gap = 0.0, sh_env = 0.0, half, p, q, s, dist, sn, pt, rv
    cdef const double* mcp = &mc[0] if mc.shape[0] > 0 else NULL
    cdef Rng g
    cdef vector[int64_t] out_a, out_b
    g.state = seed
    with nogil:
        for u in range(n):
            xu = xc[u]
            if mode == 0:
                wu = wt[u]
            else:
                ru = rad[u]
                sh_u = sinh(ru)
            for k in range(cof[u], ncls):
                k0 = cst[k]
                size = cst[k + 1] - k0
                if size == 0:
                    continue
                own = k == cof[u]
                if own:
                    base = idx[u]
                    first_right = base + 1
                else:
                    base = _lower_index(mcp, k0, k0 + size, xu) - k0
                    first_right = base
                half = xu + 0.5
                if half < 1.0:
                    end = _lower_index(mcp, k0, k0 + size, half) - k0
                    n_right = end - first_right
                else:
                    end = _lower_index(mcp, k0, k0 + size, half - 1.0) - k0
                    n_right = (size - first_right) + end
                n_left = size - n_right - (1 if own else 0)
                if mode == 0:
                    s_env = wu * chi[k] / W
                else:
                    rlo = clo[k]
                    if ru < rlo:
                        gap = rlo - ru
                    elif ru > chi[k]:
                        gap = ru - chi[k]
                    else:
                        gap = 0.0
                    ch_gap = cosh(gap)
                    sh_env = sh_u * sinh(rlo)
                for di in range(2):
                    if di == 0:
                        direction = 1
                        start = first_right
                        cnt = n_right
                    else:
                        direction = -1
                        start = base - 1
                        cnt = n_left
                    j = 0
                    p = -1.0
                    while j < cnt:
                        pos = (start + direction * j) % size
                        if pos < 0:
                            pos += size
                        v = mem[k0 + pos]
                        dist = _circ(xu, mc[k0 + pos])
                        if mode == 0:
                            q = _girg_prob(s_env, dist, alpha)
                        else:
                            sn = sin(PI * dist)
                            q = _hyp_prob(ch_gap + sh_env * 2.0 * sn * sn, R, two_t)
                        if p < 0.0:
                            p = q
                        if p <= 0.0:
                            break
                        if p < 1.0:
                            s = _skip(&g, p)
                            if s >= <double>(cnt - j):
                                break
                            if s >= 1.0:
                                j += <Py_ssize_t>s
                                pos = (start + direction * j) % size
                                if pos < 0:
                                    pos += size
                                v = mem[k0 + pos]
                                dist = _circ(xu, mc[k0 + pos])
                                if mode == 0:
                                    q = _girg_prob(s_env, dist, alpha)
                                else:
                                    sn = sin(PI * dist)
                                    q = _hyp_prob(ch_gap + sh_env * 2.0 * sn * sn, R, two_t)
                        if not own or v > u:
                            if mode == 0:
                                pt = _girg_prob(wu * wt[v] / W, dist, alpha)
                            else:
                                rv = rad[v]
                                sn = sin(PI * dist)
                                pt = _hyp_prob(cosh(ru - rv) + sh_u * sinh(rv) * 2.0 * sn * sn, R, two_t)
                            if _uniform(&g) <= pt / p:
                                out_a.push_back(u)
                                out_b.push_back(v)
                        p = q
                        j += 1
    return _to_arrays(out_a, out_b)
