"""Expected-degree weight sequences following a general power law."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

__all__ = ["WeightSequence", "GeneralPowerLawReport", "power_law_weights", "verify_general_power_law"]


@dataclass(frozen=True)
class WeightSequence:
    """Positive weights sorted non-increasingly.

    ``beta_prime`` is the nominal exponent of the sequence and ``w_bar`` the
    upper end of the range on which the lower counting bound is required
    (defaults to ``n ** (1 / (beta_prime - 1))``).
    """

    w: np.ndarray
    beta_prime: float
    w_bar: float | None = None
    W: float = field(init=False)
    w_min: float = field(init=False)

    def __post_init__(self):
        w = np.asarray(self.w, dtype=np.float64)
        if w.ndim != 1 or len(w) == 0:
            raise ValueError("weight sequence must be a non-empty 1-d array")
        if not np.all(np.isfinite(w)) or w.min() <= 0:
            raise ValueError("weights must be positive and finite")
        if np.any(np.diff(w) > 0):
            raise ValueError("weights must be sorted non-increasingly")
        w = w.copy()
        w.setflags(write=False)
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "W", math.fsum(w.tolist()))
        object.__setattr__(self, "w_min", float(w[-1]))

    @property
    def n(self) -> int:
        return len(self.w)

    @property
    def threshold(self) -> float:
        if self.w_bar is not None:
            return float(self.w_bar)
        return float(self.n) ** (1.0 / (self.beta_prime - 1.0))

    def count_at_least(self, x: float) -> int:
        """Number of weights ``>= x``."""
        # w is non-increasing, so search in the reversed (non-decreasing) view
        return int(len(self.w) - np.searchsorted(self.w[::-1], x, side="left"))

    def to_text(self) -> str:
        return "".join(f"{x!r}\n" for x in self.w.tolist())


def power_law_weights(n: int, beta_prime: float, w_min: float = 1.0) -> WeightSequence:
    """Deterministic quantile weights ``w_i = w_min * (n / i) ** (1 / (beta_prime - 1))``."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not beta_prime > 2:
        raise ValueError(f"beta_prime must exceed 2, got {beta_prime}")
    if not w_min >= 1:
        raise ValueError(f"w_min must be >= 1, got {w_min}")
    i = np.arange(1, n + 1, dtype=np.float64)
    w = w_min * (n / i) ** (1.0 / (beta_prime - 1.0))
    w[-1] = w_min  # (n/n)**x is exactly 1, but keep the invariant explicit
    return WeightSequence(w, float(beta_prime))


@dataclass(frozen=True)
class GeneralPowerLawReport:
    c1_fit: float
    c2_fit: float
    passed: bool
    eta: float
    w_bar: float

    def to_dict(self):
        return {"c1_fit": self.c1_fit, "c2_fit": self.c2_fit, "pass": self.passed,
                "eta": self.eta, "w_bar": self.w_bar}


def verify_general_power_law(ws: WeightSequence, eta: float, w_bar: float | None = None) -> GeneralPowerLawReport:
    """Fit the two counting constants of a general power law.

    Let ``N(x) = #{i : w_i >= x}``. The upper constant is the smallest ``c2``
    with ``N(x) <= c2 * n / x**(b'-1-eta)`` for all ``x >= w_min``; the lower
    constant is the largest ``c1`` with ``N(x) >= c1 * n / x**(b'-1+eta)`` for
    ``w_min <= x <= w_bar``.

    ``N`` is a left-continuous step function, so the supremum of the upper
    ratio is attained at the distinct weight values, while the infimum of the
    lower ratio is approached from the right of each step; both are evaluated
    exactly at those points.
    """
    if ws.n == 0:
        raise ValueError("empty weight sequence")
    bp = ws.beta_prime
    if not 0 < eta < bp - 2:
        raise ValueError(f"eta must satisfy 0 < eta < beta_prime - 2, got {eta}")
    n = ws.n
    w_bar = ws.threshold if w_bar is None else float(w_bar)
    hi = max(w_bar, ws.w_min)

    vals = np.unique(ws.w)  # ascending distinct weights
    counts = np.array([ws.count_at_least(x) for x in vals], dtype=np.float64)
    up_exp = bp - 1.0 - eta
    lo_exp = bp - 1.0 + eta

    c2_fit = float(np.max(counts * vals ** up_exp) / n)

    # Lower inequality on [w_min, hi]: at x = w_min the count is n; on each step
    # (vals[j], vals[j+1]] the count is counts[j+1], infimum at x -> vals[j]+.
    cands = [n * ws.w_min ** lo_exp]
    for j in range(len(vals)):
        left = vals[j]
        if left >= hi:
            break
        nxt = counts[j + 1] if j + 1 < len(vals) else 0.0
        cands.append(nxt * left ** lo_exp)
    c1_fit = float(min(cands) / n)
    passed = bool(c1_fit > 0 and math.isfinite(c1_fit) and c2_fit > 0 and math.isfinite(c2_fit))
    return GeneralPowerLawReport(c1_fit, c2_fit, passed, float(eta), w_bar)
