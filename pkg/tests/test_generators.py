import math

import mpmath
import numpy as np
import pytest
from scipy import stats

from plbkit import _backend
from plbkit.generators import (
    GirgParams,
    HyperbolicParams,
    abplg_degree_counts,
    gen_alpha_beta_plg,
    gen_chung_lu,
    gen_girg,
    gen_hyperbolic,
    girg_positions,
    hyperbolic_distance,
    hyperbolic_positions,
    random_regular,
)
from plbkit.weights import WeightSequence, power_law_weights

compiled = pytest.mark.skipif(_backend.BACKEND != "compiled", reason="compiled kernels not built")


def same(g, h):
    return g.n == h.n and np.array_equal(g.u, h.u) and np.array_equal(g.v, h.v) and np.array_equal(g.mult, h.mult)


# -- Chung-Lu ------------------------------------------------------------------------


def test_chung_lu_clamped_pair_always_present():
    ws = WeightSequence(np.array([3.0, 3.0]), 3.0)
    assert all(gen_chung_lu(ws, s).m == 1 for s in range(50))


def test_chung_lu_deterministic_and_simple():
    ws = power_law_weights(2000, 2.5)
    g, h = gen_chung_lu(ws, 11), gen_chung_lu(ws, 11)
    assert same(g, h) and g.simple_flag
    assert not same(g, gen_chung_lu(ws, 12))


def test_chung_lu_mean_degree_constant_weights():
    ws = WeightSequence(np.full(10**4, 5.0), 3.0)
    for s in range(20):
        g = gen_chung_lu(ws, s)
        assert 4.5 <= 2 * g.m / g.n <= 5.5


def test_chung_lu_pair_frequencies():
    # each pair is a Bernoulli(min(1, w_i w_j / W)) trial per seed
    ws = power_law_weights(8, 2.5, 1.0)
    trials = 10**4
    hits = np.zeros((8, 8))
    for s in range(trials):
        g = gen_chung_lu(ws, s)
        hits[g.u, g.v] += 1
    W = ws.W
    for i in range(8):
        for j in range(i + 1, 8):
            p = min(1.0, ws.w[i] * ws.w[j] / W)
            sd = math.sqrt(trials * p * (1 - p))
            assert abs(hits[i, j] - trials * p) <= max(3 * sd, 1e-9), (i, j)


def test_two_unit_weights_half_probability():
    ws = WeightSequence(np.array([1.0, 1.0]), 3.0)
    k = sum(gen_chung_lu(ws, s).m for s in range(4000))
    assert abs(k - 2000) <= 3 * math.sqrt(1000)


# -- GIRG ----------------------------------------------------------------------------


def girg_prob(p, pos):
    w, W = p.weights.w, p.weights.W
    d = np.abs(pos[:, None, :] - pos[None, :, :])
    d = np.minimum(d, 1 - d).max(axis=2)
    s = (np.outer(w, w) / W) ** p.alpha
    with np.errstate(divide="ignore"):
        pr = np.where(d > 0, s / np.where(d > 0, d, 1) ** (p.alpha * p.dim), 1.0)
    return np.triu(np.minimum(pr, 1.0), 1)


def test_girg_formula_examples():
    ws = WeightSequence(np.array([1.0, 1.0]), 3.0)  # w_u w_v / W = 1/2
    p = GirgParams(1, 2.0, ws)
    pos = np.array([[0.1], [0.6]])
    assert girg_prob(p, pos)[0, 1] == pytest.approx(1.0)  # (1/2)^2 / (1/2)^2
    pos = np.array([[0.3], [0.3]])
    assert girg_prob(p, pos)[0, 1] == 1.0


@pytest.mark.parametrize("method", ["fast", "naive"])
def test_girg_edge_count_matches_expectation(method):
    # summed over seeds, (m - E[m | positions]) / sd is standard normal
    p = GirgParams(1, 2.0, power_law_weights(300, 2.5))
    dev, var = 0.0, 0.0
    for s in range(40):
        pr = girg_prob(p, girg_positions(p, s))
        g = gen_girg(p, s, method=method)
        dev += g.m - pr.sum()
        var += (pr * (1 - pr)).sum()
    assert abs(dev) / math.sqrt(var) < 4


def test_girg_pair_frequency_fast_path():
    # positions change with the seed, so each pair's hit count is compared with
    # its summed per-seed probability
    p = GirgParams(1, 2.0, power_law_weights(12, 2.5, 2.0))
    trials = 3000
    hits = np.zeros((12, 12))
    probs = np.zeros((12, 12))
    var = np.zeros((12, 12))
    for s in range(trials):
        pr = girg_prob(p, girg_positions(p, s))
        probs += pr
        var += pr * (1 - pr)
        g = gen_girg(p, s, method="fast")
        hits[g.u, g.v] += 1
    iu = np.triu_indices(12, 1)
    z = (hits[iu] - probs[iu]) / np.sqrt(np.maximum(var[iu], 1e-12))
    assert np.all(np.abs(z) < 4.5)


def test_girg_two_dimensional_uses_naive_path():
    p = GirgParams(2, 2.0, power_law_weights(200, 2.5))
    assert same(gen_girg(p, 3), gen_girg(p, 3, method="naive"))
    with pytest.raises(ValueError):
        gen_girg(p, 3, method="fast")


def test_girg_positions_are_seed_only():
    p = GirgParams(1, 2.0, power_law_weights(100, 2.5))
    q = GirgParams(1, 3.0, power_law_weights(100, 2.5))
    np.testing.assert_array_equal(girg_positions(p, 5), girg_positions(q, 5))


def test_girg_rejects_small_alpha():
    with pytest.raises(ValueError):
        GirgParams(1, 1.0, power_law_weights(10, 2.5))


# -- hyperbolic ----------------------------------------------------------------------


def test_hyperbolic_distance_matches_cosine_law():
    mpmath.mp.dps = 50
    rng = np.random.default_rng(0)
    for _ in range(200):
        r1, r2 = rng.uniform(0, 20, 2)
        t1, t2 = rng.random(2)
        ch = (mpmath.cosh(r1) * mpmath.cosh(r2)
              - mpmath.sinh(r1) * mpmath.sinh(r2) * mpmath.cos(2 * mpmath.pi * (mpmath.mpf(t1) - t2)))
        want = float(mpmath.acosh(max(ch, 1)))
        assert float(hyperbolic_distance(r1, t1, r2, t2)) == pytest.approx(want, rel=1e-9, abs=1e-7)


def test_hyperbolic_radial_law():
    p = HyperbolicParams(5000, 0.75)
    r, theta = hyperbolic_positions(p, 1)
    R, a = p.r_disk, p.alpha_h
    cdf = lambda x: (np.cosh(a * np.asarray(x)) - 1) / (np.cosh(a * R) - 1)
    assert stats.kstest(r, cdf).pvalue > 1e-3
    assert stats.kstest(theta, "uniform").pvalue > 1e-3
    assert r.max() <= R


def hyp_prob(p, r, theta):
    d = hyperbolic_distance(r[:, None], theta[:, None], r[None, :], theta[None, :])
    pr = 1 / (1 + np.exp(np.minimum((d - p.r_disk) / (2 * p.t_h), 700)))
    return np.triu(pr, 1)


@pytest.mark.parametrize("method", ["fast", "naive"])
def test_hyperbolic_edge_count_matches_expectation(method):
    p = HyperbolicParams(400, 0.75, 0.0, 0.3)
    dev, var = 0.0, 0.0
    for s in range(30):
        r, th = hyperbolic_positions(p, s)
        pr = hyp_prob(p, r, th)
        dev += gen_hyperbolic(p, s, method=method).m - pr.sum()
        var += (pr * (1 - pr)).sum()
    assert abs(dev) / math.sqrt(var) < 4


# -- backends ------------------------------------------------------------------------


@compiled
@pytest.mark.parametrize("seed", [0, 1, 2**63 + 5])
def test_backends_bit_identical(seed):
    ws = power_law_weights(3000, 2.5)
    assert same(gen_chung_lu(ws, seed, backend="compiled"), gen_chung_lu(ws, seed, backend="python"))
    p = GirgParams(1, 2.0, ws)
    assert same(gen_girg(p, seed, "fast", "compiled"), gen_girg(p, seed, "fast", "python"))
    h = HyperbolicParams(2000, 0.75)
    assert same(gen_hyperbolic(h, seed, "fast", "compiled"), gen_hyperbolic(h, seed, "fast", "python"))


# -- (alpha, beta) graphs and regular graphs -------------------------------------------


def test_abplg_counts():
    assert abplg_degree_counts(1000, 3).tolist() == [1000, 125, 37, 15, 8, 4, 2, 1, 1, 1]
    g = gen_alpha_beta_plg(1000, 3, 0)
    assert g.n == 1194
    g = gen_alpha_beta_plg(1, 2, 0)
    assert g.n == 2 and g.degrees.tolist() == [1, 1]
    with pytest.raises(ValueError):
        abplg_degree_counts(100, 1)


def test_abplg_histogram_exact():
    y = abplg_degree_counts(10**5, 3)
    g = gen_alpha_beta_plg(10**5, 3, 7)
    want = np.repeat(np.arange(1, len(y) + 1), y)
    if want.sum() % 2:
        want = np.append(want, 1)
    np.testing.assert_array_equal(g.degrees, want)


def test_abplg_simple_mode():
    g = gen_alpha_beta_plg(10**4, 2.5, 3, simple=True)
    assert g.simple_flag
    y = abplg_degree_counts(10**4, 2.5)
    assert int(g.degrees.sum()) <= int(np.dot(np.arange(1, len(y) + 1), y)) + 1


def test_random_regular():
    g = random_regular(20, 3, 4)
    assert g.simple_flag and set(g.degrees.tolist()) == {3}
    with pytest.raises(ValueError):
        random_regular(5, 3, 0)
