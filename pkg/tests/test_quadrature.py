import math

import numpy as np
import pytest

from betaineq.errors import NumericalError
from betaineq.quadrature import log_beta_integral, window


def test_unit_integrand():
    v, err = log_beta_integral(1.0, 1.0)
    assert abs(v) < 1e-14
    assert err < 1e-12


def test_monomials():
    for n in range(1, 8):
        v, _ = log_beta_integral(float(n), 1.0)
        assert v == pytest.approx(-math.log(n), abs=1e-13)


def test_singular_endpoints():
    # B(1/2, 1/2) = pi with inverse square-root singularities at both ends
    v, _ = log_beta_integral(0.5, 0.5)
    assert v == pytest.approx(math.log(math.pi), abs=1e-13)
    # B(1e-3, 1) = 1000
    v, _ = log_beta_integral(1e-3, 1.0)
    assert v == pytest.approx(math.log(1000.0), abs=1e-12)


def test_log_weight_monomials():
    # int t^n (-ln t) dt = 1/(n+1)^2
    for n in range(0, 5):
        v, _ = log_beta_integral(n + 1.0, 1.0, log_weight=True)
        assert v == pytest.approx(-2.0 * math.log(n + 1.0), abs=1e-13)


def test_log_weight_allows_negative_q():
    # int (1-t)^(q-1) (-ln t) dt converges for q > -1; q = -0.5 at p = 1:
    # sum_k 1/(k(k+q)) form, compare with mpmath
    mpmath = pytest.importorskip("mpmath")
    mpmath.mp.dps = 30
    ref = mpmath.quad(lambda t: (1 - t) ** (-1.5) * (-mpmath.log(t)), [0, 0.5, 1])
    v, _ = log_beta_integral(1.0, -0.5, log_weight=True)
    assert v == pytest.approx(float(mpmath.log(ref)), abs=1e-11)


def test_batch_equals_scalar():
    rng = np.random.default_rng(3)
    p = 10 ** rng.uniform(-2, 2, 600)
    q = 10 ** rng.uniform(-2, 2, 600)
    batch, _ = log_beta_integral(p, q)
    for i in (0, 17, 255, 256, 599):
        single, _ = log_beta_integral(float(p[i]), float(q[i]))
        assert single == batch[i]


def test_shape_preserved():
    v, e = log_beta_integral(np.ones((3, 4)), 2.0)
    assert v.shape == (3, 4) and e.shape == (3, 4)


def test_rejects_bad_exponents():
    with pytest.raises(ValueError):
        log_beta_integral(0.0, 1.0)
    with pytest.raises(ValueError):
        log_beta_integral(1.0, -0.5)


def test_non_convergence_carries_estimate():
    with pytest.raises(NumericalError) as info:
        log_beta_integral(50.0, 50.0, tol=1e-16)
    assert info.value.estimate is not None
    assert math.isfinite(info.value.estimate)


def test_window_fixed_above_threshold():
    assert window(1e-3, 5.0) == window(3.0, 70.0)
    assert window(1e-6, 1.0) > window(1e-3, 1.0)
