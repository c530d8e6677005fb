"""Closed-form guarantee constants, approximation ratios and hardness factors.

Every function evaluates in floating point. Where all inputs are rational
and the formula stays rational (integer or exactly extractable roots), an
exact :class:`fractions.Fraction` is available as well via ``exact=True`` or
the ``*_exact`` helpers; they return ``None`` when no exact value exists.
Floats are converted to rationals through their shortest ``repr``, so
``0.05`` is read as ``1/20``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "LOG3_5",
    "BoundValues",
    "HardnessResult",
    "const_a",
    "const_b",
    "const_a_exact",
    "const_b_exact",
    "guarantee_bundle",
    "pvl_bound",
    "mis_plbl_lower",
    "hardness_factor",
    "growth_constant",
    "lemma22_bound",
    "zeta",
    "harmonic",
]

LOG3_5 = math.log(5.0) / math.log(3.0)


# -- exact arithmetic helpers ----------------------------------------------------


def to_fraction(x) -> Fraction | None:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    try:
        xf = float(x)
    except (TypeError, ValueError):
        return None
    if not math.isfinite(xf):
        return None
    return Fraction(repr(xf))


def _iroot(x: int, k: int) -> int | None:
    """Exact integer ``k``-th root of ``x >= 0`` or ``None``."""
    if x < 2:
        return x
    r = int(round(x ** (1.0 / k))) if x.bit_length() < 1000 else 1 << (x.bit_length() // k)
    # Newton refinement from the float guess
    while True:
        nr = ((k - 1) * r + x // r ** (k - 1)) // k
        if nr >= r:
            break
        r = nr
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand ** k == x:
            return cand
    return None


_MAX_EXP = 4096


def exact_product(terms) -> Fraction | None:
    """Exact value of ``prod base_i ** exp_i`` for rational bases and exponents.

    Returns ``None`` when the value is irrational (or the exponents are too
    large to expand). Bases must be positive.
    """
    terms = [(to_fraction(b), to_fraction(e)) for b, e in terms]
    if any(b is None or e is None or b <= 0 for b, e in terms):
        return None
    L = 1
    for _, e in terms:
        L = L * e.denominator // math.gcd(L, e.denominator)
    if L > 64:
        return None
    acc = Fraction(1)
    for b, e in terms:
        k = e * L
        if abs(k.numerator) > _MAX_EXP:
            return None
        acc *= b ** k.numerator  # k is an integer here
    if L == 1:
        return acc
    num = _iroot(acc.numerator, L)
    den = _iroot(acc.denominator, L)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def _fmt_exact(q: Fraction | None):
    return None if q is None else f"{q.numerator}/{q.denominator}"


# -- the two guarantee constants ---------------------------------------------------


def _need_beta_gt2(beta):
    if not beta > 2:
        raise ValueError(f"beta must exceed 2, got {beta}")


def _need_t(t):
    if not t >= 0:
        raise ValueError(f"t must be non-negative, got {t}")


def const_a(beta: float, t: float = 0.0) -> float:
    """``1 + (beta-1)/(beta-2) / (1 - ((t+2)/(t+1))^(1-beta))``."""
    _need_beta_gt2(beta)
    _need_t(t)
    return 1.0 + ((beta - 1.0) / (beta - 2.0)) / (1.0 - ((t + 2.0) / (t + 1.0)) ** (1.0 - beta))


def const_a_exact(beta, t=0) -> Fraction | None:
    _need_beta_gt2(beta)
    _need_t(t)
    B, T = to_fraction(beta), to_fraction(t)
    p = exact_product([((T + 2) / (T + 1), 1 - B)])
    if p is None:
        return None
    return 1 + ((B - 1) / (B - 2)) / (1 - p)


def _b_terms(c1, B, T, extra=Fraction(1)):
    e = 1 / (B - 2)
    return [
        (to_fraction(c1) * (B - 1) / (B - 2) * extra, e),
        (Fraction(2), B * e),
        (T + 1, (B - 1) * e),
    ]


def const_b(c1: float, beta: float, t: float = 0.0) -> float:
    """``(c1 (beta-1)/(beta-2) 2^beta (t+1)^(beta-1))^(1/(beta-2))``."""
    _need_beta_gt2(beta)
    _need_t(t)
    if not c1 > 0:
        raise ValueError(f"c1 must be positive, got {c1}")
    base = c1 * (beta - 1.0) / (beta - 2.0) * 2.0 ** beta * (t + 1.0) ** (beta - 1.0)
    return base ** (1.0 / (beta - 2.0))


def const_b_exact(c1, beta, t=0) -> Fraction | None:
    _need_beta_gt2(beta)
    _need_t(t)
    if not c1 > 0:
        raise ValueError(f"c1 must be positive, got {c1}")
    return exact_product(_b_terms(c1, to_fraction(beta), to_fraction(t)))


@dataclass(frozen=True)
class BoundValues:
    a: float
    b: float
    mds_lb_fraction: float
    greedy_ds_ratio: float
    cds_ratio: float
    a_exact: Fraction | None = None
    b_exact: Fraction | None = None
    mds_lb_fraction_exact: Fraction | None = None

    def to_dict(self):
        return {
            "a": self.a,
            "b": self.b,
            "mds_lb_fraction": self.mds_lb_fraction,
            "greedy_ds_ratio": self.greedy_ds_ratio,
            "cds_ratio": self.cds_ratio,
            "exact": {
                "a": _fmt_exact(self.a_exact),
                "b": _fmt_exact(self.b_exact),
                "mds_lb_fraction": _fmt_exact(self.mds_lb_fraction_exact),
            },
        }


def guarantee_bundle(c1: float, beta: float, t: float = 0.0) -> BoundValues:
    """Lower-bound fraction ``1/(2ab+1)`` and the greedy MDS / CDS ratios."""
    a = const_a(beta, t)
    b = const_b(c1, beta, t)
    ae = const_a_exact(beta, t)
    be = const_b_exact(c1, beta, t)
    fe = 1 / (2 * ae * be + 1) if ae is not None and be is not None else None
    return BoundValues(
        a=a,
        b=b,
        mds_lb_fraction=1.0 / (2.0 * a * b + 1.0),
        greedy_ds_ratio=LOG3_5 * a * math.log(b + 1.0) + 1.0,
        cds_ratio=2.0 + math.log(2.0 * a * b + 1.0),
        a_exact=ae,
        b_exact=be,
        mds_lb_fraction_exact=fe,
    )


def pvl_bound(g_kind: str, c: float, C: float, c1: float, beta: float, t: float, n: float, M: float,
              exact: bool = False):
    """Per-element bound ``c * a * g(arg) + C`` of the potential volume bound.

    ``arg = (c1 (beta-1)/(beta-2) (n/M) 2^(beta-1) (t+1)^(beta-1))^(1/(beta-2))``
    and ``g`` is the identity (``"linear"``) or ``x -> ln(x+1)`` (``"log1p"``).
    With ``exact=True`` returns ``(float, Fraction | None)``; only the linear
    kind can be exact.
    """
    if g_kind not in ("linear", "log1p"):
        raise ValueError(f"unsupported g_kind {g_kind!r}; expected 'linear' or 'log1p'")
    _need_beta_gt2(beta)
    _need_t(t)
    if not (1 <= M <= n * (n - 1)):
        raise ValueError(f"M must satisfy 1 <= M <= n(n-1), got M={M}, n={n}")
    a = const_a(beta, t)
    base = c1 * (beta - 1.0) / (beta - 2.0) * (n / M) * 2.0 ** (beta - 1.0) * (t + 1.0) ** (beta - 1.0)
    arg = base ** (1.0 / (beta - 2.0))
    g = arg if g_kind == "linear" else math.log(arg + 1.0)
    val = c * a * g + C
    if not exact:
        return val
    ex = None
    if g_kind == "linear":
        B, T = to_fraction(beta), to_fraction(t)
        e = 1 / (B - 2)
        ratio = to_fraction(n) / to_fraction(M)
        arg_e = exact_product([
            (to_fraction(c1) * (B - 1) / (B - 2) * ratio, e),
            (Fraction(2), (B - 1) * e),
            (T + 1, (B - 1) * e),
        ])
        ae = const_a_exact(beta, t)
        ce, Ce = to_fraction(c), to_fraction(C)
        if None not in (arg_e, ae, ce, Ce):
            ex = ce * ae * arg_e + Ce
    return val, ex


def mis_plbl_lower(c2: float, beta: float, t: float, d_min: int, connected: bool = False, exact: bool = False):
    """Guaranteed independent-set size as a fraction of ``n`` under the lower bucket property.

    ``c2 (t+1)^(beta-1) / ((t+d_min)^beta (d_min+1))``, or ``c2/(t+1)`` for
    connected graphs with minimum degree 1.
    """
    _need_beta_gt2(beta)
    _need_t(t)
    if d_min < 1:
        raise ValueError(f"d_min must be >= 1, got {d_min}")
    if connected and d_min == 1:
        val = c2 / (t + 1.0)
        ex_terms = [(to_fraction(c2), 1), (to_fraction(t) + 1, -1)]
    else:
        val = c2 * (t + 1.0) ** (beta - 1.0) / ((t + d_min) ** beta * (d_min + 1))
        B, T = to_fraction(beta), to_fraction(t)
        ex_terms = [(to_fraction(c2), 1), (T + 1, B - 1), (T + d_min, -B), (Fraction(d_min + 1), -1)]
    if not exact:
        return val
    return val, exact_product(ex_terms) if c2 > 0 else (Fraction(0) if c2 == 0 else None)


# -- hardness factors ----------------------------------------------------------------


@dataclass(frozen=True)
class HardnessResult:
    factor: float
    growth_c: float
    bracket: float  # 2 c2 K, must be < 1
    factor_exact: Fraction | None = None

    def to_dict(self):
        return {"factor": self.factor, "growth_c": self.growth_c, "bracket": self.bracket,
                "exact": {"factor": _fmt_exact(self.factor_exact)}}


def _bracket(mode, c2, beta, t):
    if mode == "multigraph":
        if not beta > 1:
            raise ValueError(f"beta must exceed 1, got {beta}")
        K = 1.0 / (t + 1.0) + 1.0 / (beta - 1.0)
    elif mode == "simple":
        _need_beta_gt2(beta)
        K = 1.0 / (t + 1.0) + 1.0 / (beta - 1.0) + (t + 1.0) / (beta - 2.0) + 1.0
    else:
        raise ValueError(f"unknown mode {mode!r}; expected 'multigraph' or 'simple'")
    _need_t(t)
    if not c2 > 0:
        raise ValueError(f"c2 must be positive, got {c2}")
    x = 2.0 * c2 * K
    if x >= 1.0:
        raise ValueError(f"bracket condition violated: 2*c2*K = {x} >= 1")
    return x


def growth_constant(mode: str, c2: float, beta: float, t: float = 0.0) -> float:
    """Vertex growth factor of the embedding: ``1 + x/(1-x)`` (multigraph) or ``1/(1-x)`` (simple)."""
    x = _bracket(mode, c2, beta, t)
    return 1.0 + x / (1.0 - x) if mode == "multigraph" else 1.0 / (1.0 - x)


_SQRT5_TERM = 10.0 * math.sqrt(5.0) - 22.0


def hardness_factor(problem: str, mode: str, c1: float | None, c2: float, beta: float, t: float = 0.0,
                    gamma: float = 0.0) -> HardnessResult:
    """Inapproximability factor for MDS, MIS or MVC on power-law bounded graphs.

    ``gamma`` only enters the MIS factors and ``c1`` only the simple-graph MIS
    factor. The exact rational value is attached for MDS and MIS when the
    inputs are rational (the MVC factors contain ``sqrt 5``).
    """
    if problem not in ("mds", "mis", "mvc"):
        raise ValueError(f"unknown problem {problem!r}")
    x = _bracket(mode, c2, beta, t)
    gc = growth_constant(mode, c2, beta, t)
    if gamma < 0:
        raise ValueError(f"gamma must be non-negative, got {gamma}")
    g = gamma
    ex = None
    F = [to_fraction(v) for v in (c2, beta, t, gamma)]
    if mode == "multigraph":
        if problem == "mds":
            f = 1.0 + 1.0 / (130.0 * (4.0 * x / (1.0 - x) + 15.0))
        elif problem == "mis":
            f = 1.0 + (1.0 / 139.0 - g) * (1.0 - x) / (2.0 * x * (140.0 / 139.0 - g) + 1.0 - x)
        else:
            f = 1.0 + _SQRT5_TERM * (1.0 - x) / (3.0 - 2.0 * x)
        if problem != "mvc" and None not in F:
            C2, B, T, G = F
            X = 2 * C2 * (1 / (T + 1) + 1 / (B - 1))
            if problem == "mds":
                ex = 1 + 1 / (130 * (4 * X / (1 - X) + 15))
            else:
                ex = 1 + (Fraction(1, 139) - G) * (1 - X) / (2 * X * (Fraction(140, 139) - G) + 1 - X)
    else:
        if problem == "mds":
            f = 1.0 + 1.0 / (130.0 * (4.0 * (1.0 - c2 / (t + 1.0)) / (1.0 - x) + 1.0))
        elif problem == "mis":
            if c1 is None or not c1 > 0:
                raise ValueError("the simple-graph MIS factor needs a positive c1")
            f = 1.0 + (1.0 / 139.0 - g) * (t + 1.0) * (1.0 - x) / (
                4.0 * c1 * (140.0 / 139.0 - g) + (t + 1.0) * (1.0 - x))
        else:
            f = 1.0 + (1.0 - x) * _SQRT5_TERM / (
                2.0 * c2 * (1.0 / (beta - 1.0) + (t + 1.0) / (beta - 2.0) + 1.0) + 1.0)
        C1 = to_fraction(c1) if c1 is not None else None
        if problem != "mvc" and None not in F:
            C2, B, T, G = F
            X = 2 * C2 * (1 / (T + 1) + 1 / (B - 1) + (T + 1) / (B - 2) + 1)
            if problem == "mds":
                ex = 1 + 1 / (130 * (4 * (1 - C2 / (T + 1)) / (1 - X) + 1))
            elif C1 is not None:
                ex = 1 + (Fraction(1, 139) - G) * (T + 1) * (1 - X) / (
                    4 * C1 * (Fraction(140, 139) - G) + (T + 1) * (1 - X))
    return HardnessResult(f, gc, x, ex)


# -- miscellaneous -------------------------------------------------------------------


def lemma22_bound(a: int, b: int, c: float, exact: bool = False):
    """``(a^-c, c/(1-2^-c) * sum_{i=a}^{b-1} i^(-c-1))`` for integers ``1 <= a <= b/2``.

    The left value never exceeds the right one.
    """
    if int(a) != a or int(b) != b:
        raise ValueError("a and b must be integers")
    a, b = int(a), int(b)
    if a < 1 or 2 * a > b:
        raise ValueError(f"need 1 <= a <= b/2, got a={a}, b={b}")
    if not c > 0:
        raise ValueError(f"c must be positive, got {c}")
    lhs = float(a) ** -c
    s = math.fsum(float(i) ** (-c - 1.0) for i in range(a, b))
    rhs = c / (1.0 - 2.0 ** -c) * s
    if not exact:
        return lhs, rhs
    C = to_fraction(c)
    if C.denominator != 1:
        return (lhs, rhs), None
    k = C.numerator
    L = Fraction(1, a ** k)
    R = C / (1 - Fraction(1, 2 ** k)) * sum(Fraction(1, i ** (k + 1)) for i in range(a, b))
    return (lhs, rhs), (L, R)


# Bernoulli numbers B_2 .. B_14 for the Euler-Maclaurin tail
_BERN = [Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42), Fraction(-1, 30), Fraction(5, 66),
         Fraction(-691, 2730), Fraction(7, 6)]


def zeta(s: float, N: int = 32) -> float:
    """Riemann zeta for real ``s > 1``: direct sum to ``N-1`` plus an Euler-Maclaurin tail.

    With ``N = 32`` and seven correction terms the truncation error is far
    below ``1e-12`` for every ``s > 1``.
    """
    if not s > 1:
        raise ValueError(f"zeta needs s > 1, got {s}")
    terms = [float(k) ** -s for k in range(1, N)]
    terms.append(N ** (1.0 - s) / (s - 1.0))
    terms.append(0.5 * N ** -s)
    rising = s  # s (s+1) ... (s+2j-2)
    fact = 2.0  # (2j)!
    for j, B in enumerate(_BERN, start=1):
        terms.append(float(B) / fact * rising * N ** (-s - 2 * j + 1))
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        fact *= (2 * j + 1) * (2 * j + 2)
    return math.fsum(terms)


def harmonic(k: int) -> float:
    """``H_k = sum_{i=1}^k 1/i`` (``H_0 = 0``)."""
    return math.fsum(1.0 / i for i in range(1, int(k) + 1))
