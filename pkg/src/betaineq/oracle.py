"""High-precision beta oracle: log-gamma, digamma, log-beta and beta ratios.

Every beta quantity is kept in log space.  ``log_beta`` evaluates the gamma
route (Lanczos series) and cross-checks it against an independent route: the
double-exponential quadrature of the defining integral when both arguments
are at most 100, otherwise the same quadrature after shifting the large
argument(s) down with B(x+1, y) = B(x, y) x / (x + y).  The reported error is
the larger of the internal estimates and the disagreement between routes.

Scalar entry points take the parameter dataclasses; the ``*_many`` variants
take numpy arrays and are what the verifier uses for whole sample batches.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .quadrature import log_beta_integral

__all__ = [
    "ValueParams",
    "RatioParams",
    "SymmetricParams",
    "OracleValue",
    "log_gamma",
    "digamma",
    "log_beta",
    "log_beta_quad",
    "ratio_log",
    "symmetric_ratio_log",
    "beta_difference",
    "log_beta_dx",
    "log_beta_dx_quad",
    "log_beta_many",
    "log_beta_quad_many",
    "log_beta_dx_many",
    "log_beta_dx_quad_many",
    "QUAD_LIMIT",
    "MIN_GAP",
]

QUAD_LIMIT = 100.0
# b - a below this is treated as degenerate for ratio arguments
MIN_GAP = 1e-9

_EPS = np.finfo(float).eps


def _check_positive(name, value):
    if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
        raise DomainError(f"{name} must be a positive finite number, got {value!r}")


@dataclass(frozen=True)
class ValueParams:
    """Arguments (x, y) of B(x, y)."""

    x: float
    y: float

    def __post_init__(self):
        _check_positive("x", self.x)
        _check_positive("y", self.y)


@dataclass(frozen=True)
class RatioParams:
    """Arguments of the ratio B(b, y) / B(a, y) with 0 < a < b."""

    a: float
    b: float
    y: float

    def __post_init__(self):
        _check_positive("a", self.a)
        _check_positive("b", self.b)
        _check_positive("y", self.y)
        if not self.b >= self.a + MIN_GAP:
            raise DomainError(f"need b - a >= {MIN_GAP:g}, got a={self.a!r}, b={self.b!r}")


@dataclass(frozen=True)
class SymmetricParams:
    """Arguments of the symmetric ratio B(b, b) / B(a, a) with 0 < a < b."""

    a: float
    b: float

    def __post_init__(self):
        _check_positive("a", self.a)
        _check_positive("b", self.b)
        if not self.b >= self.a + MIN_GAP:
            raise DomainError(f"need b - a >= {MIN_GAP:g}, got a={self.a!r}, b={self.b!r}")


@dataclass(frozen=True)
class OracleValue:
    """Natural log of a beta quantity with an absolute error bound on it."""

    log_value: float
    abs_err: float


# ---------------------------------------------------------------------------
# log-gamma and digamma

# Lanczos coefficients for g = 607/128, 15 terms (Godfrey)
_LANCZOS_G = 607.0 / 128.0
_LANCZOS_C = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
)
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)


def _as_positive_array(x, name="x"):
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr) & (arr > 0)):
        raise DomainError(f"{name} must be positive and finite")
    return arr


def _lanczos(x):
    # valid for x >= 0.5
    z = x - 1.0
    series = np.full_like(z, _LANCZOS_C[0])
    for k in range(len(_LANCZOS_C) - 1, 0, -1):
        series = series + _LANCZOS_C[k] / (z + k)
    t = z + _LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (z + 0.5) * np.log(t) - t + np.log(series)


def log_gamma(x):
    """ln Gamma(x) for x > 0 (scalar or array), via a 15-term Lanczos series.

    Arguments below 1/2 are shifted up with Gamma(x) = Gamma(x + 1) / x.
    """
    arr = _as_positive_array(x)
    small = arr < 0.5
    shifted = np.where(small, arr + 1.0, arr)
    out = _lanczos(shifted) - np.where(small, np.log(arr), 0.0)
    return float(out) if out.ndim == 0 else out


_DIGAMMA_ASYMP = (
    (2, 1.0 / 12.0),
    (4, -1.0 / 120.0),
    (6, 1.0 / 252.0),
    (8, -1.0 / 240.0),
    (10, 1.0 / 132.0),
    (12, -691.0 / 32760.0),
    (14, 1.0 / 12.0),
)


def _digamma(arr, threshold=10.0):
    acc = np.zeros_like(arr)
    xx = arr.copy()
    mask = xx < threshold
    while np.any(mask):
        acc = acc - np.where(mask, 1.0 / xx, 0.0)
        xx = np.where(mask, xx + 1.0, xx)
        mask = xx < threshold
    inv2 = 1.0 / (xx * xx)
    tail = np.zeros_like(xx)
    # Horner in x**-2: inv2*(c2 + inv2*(c4 + ...))
    for _, coef in reversed(_DIGAMMA_ASYMP):
        tail = (tail + coef) * inv2
    return acc + np.log(xx) - 0.5 / xx - tail


def digamma(x):
    """psi(x) = d/dx ln Gamma(x) for x > 0 (scalar or array).

    Upward recurrence psi(x) = psi(x + 1) - 1/x to x >= 10, then the
    asymptotic series through x**-14.
    """
    arr = _as_positive_array(x)
    out = _digamma(arr)
    return float(out) if out.ndim == 0 else out


# ---------------------------------------------------------------------------
# batch log-beta


# lnGamma(x) - [(x - 1/2) ln x - x + ln(2 pi)/2], as a series in 1/x^2 (x >= 10)
_STIRLING = (1.0 / 12.0, -1.0 / 360.0, 1.0 / 1260.0, -1.0 / 1680.0, 1.0 / 1188.0,
             -691.0 / 360360.0, 1.0 / 156.0)
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)


def _stirling_rest(x):
    inv2 = 1.0 / (x * x)
    acc = np.zeros_like(x)
    for coef in reversed(_STIRLING):
        acc = acc * inv2 + coef
    return acc / x


def _series_many(x, y):
    """Gamma route.  When the larger argument is >= 10 the leading Stirling
    terms are cancelled analytically, so the absolute error stays near eps
    instead of eps * lnGamma(x + y)."""
    x = np.asarray(x, float)
    y = np.asarray(y, float)
    p, q = np.minimum(x, y), np.maximum(x, y)
    s = p + q
    big_q = q >= 10.0
    big_p = p >= 10.0

    lx, ly, lxy = log_gamma(x), log_gamma(y), log_gamma(s)
    direct = lx + ly - lxy
    derr = 1.0 + np.abs(lx) + np.abs(ly) + np.abs(lxy)

    qs = np.where(big_q, q, 10.0)
    ps = np.where(big_p, p, 10.0)
    ss = np.where(big_q, s, 20.0)
    rq, rs = _stirling_rest(qs), _stirling_rest(ss)
    tail_q = np.log1p(-p / ss)  # ln(q / s)
    # both large
    t1 = (ps - 0.5) * np.log(ps / ss)
    t2 = q * tail_q
    both = _HALF_LOG_2PI - 0.5 * np.log(qs) + _stirling_rest(ps) + rq - rs + t1 + t2
    berr = 1.0 + np.abs(t1) + np.abs(t2) + 0.5 * np.abs(np.log(qs))
    # one large: lnGamma(p) + lnGamma(q) - lnGamma(p + q)
    lp = log_gamma(p)
    t3 = (qs - 0.5) * tail_q
    t4 = p * np.log(ss)
    one = lp + t3 + p - t4 + rq - rs
    oerr = 1.0 + np.abs(lp) + np.abs(t3) + p + np.abs(t4)

    value = np.where(big_p, both, np.where(big_q, one, direct))
    err = 4.0 * _EPS * np.where(big_p, berr, np.where(big_q, oerr, derr))
    return value, err


def _kahan_log_shift(start, count, other):
    """sum_{k < count} ln((start + k) / (start + k + other)), compensated."""
    total = np.zeros_like(start)
    comp = np.zeros_like(start)
    n_max = int(count.max()) if count.size else 0
    for k in range(n_max):
        live = k < count
        term = np.where(live, -np.log1p(other / (start + k)), 0.0)
        yk = term - comp
        tk = total + yk
        comp = (tk - total) - yk
        total = tk
    return total


def _shift_count(v):
    return np.where(v > QUAD_LIMIT, np.ceil(v - QUAD_LIMIT), 0.0).astype(np.int64)


def _reduced_quad_many(x, y):
    """Quadrature route with large arguments shifted into (0, 100]."""
    nx = _shift_count(x)
    xr = x - nx
    corr = _kahan_log_shift(xr, nx, y)
    ny = _shift_count(y)
    yr = y - ny
    corr = corr + _kahan_log_shift(yr, ny, xr)
    q, qerr = log_beta_integral(xr, yr)
    n_terms = nx + ny
    return q + corr, qerr + 4.0 * _EPS * (1.0 + np.abs(corr)) * np.sqrt(n_terms + 1.0)


def log_beta_quad_many(x, y):
    """Direct quadrature of ln B(x, y) for arrays; returns (value, abs_err)."""
    x = _as_positive_array(x, "x")
    y = _as_positive_array(y, "y")
    return log_beta_integral(*np.broadcast_arrays(x, y))


def log_beta_many(x, y):
    """ln B(x, y) for arrays with cross-validated error; returns (value, abs_err)."""
    x, y = np.broadcast_arrays(_as_positive_array(x, "x"), _as_positive_array(y, "y"))
    value, serr = _series_many(x, y)
    check, cerr = _reduced_quad_many(np.asarray(x, float), np.asarray(y, float))
    err = np.maximum(np.maximum(serr, cerr), np.abs(value - check))
    return value, err


def log_beta_dx_quad_many(x, y):
    """d/dx ln B(x, y) by quadrature of the ln t-weighted integral."""
    x, y = np.broadcast_arrays(_as_positive_array(x, "x"), _as_positive_array(y, "y"))
    l1, e1 = log_beta_integral(x, y, log_weight=True)
    l0, e0 = log_beta_integral(x, y)
    value = -np.exp(l1 - l0)
    return value, np.abs(value) * (e0 + e1 + 4.0 * _EPS)


def log_beta_dx_many(x, y):
    """psi(x) - psi(x + y) for arrays with cross-validated error.

    The independent route integrates ln t against the beta density after
    shifting arguments above 100 down with the psi recurrence.
    """
    x, y = np.broadcast_arrays(_as_positive_array(x, "x"), _as_positive_array(y, "y"))
    x = np.asarray(x, float)
    y = np.asarray(y, float)
    px, pxy = _digamma(x), _digamma(x + y)
    value = px - pxy
    serr = 8.0 * _EPS * (1.0 + np.abs(px) + np.abs(pxy) + 10.0 / np.minimum(x, 10.0))

    nx = _shift_count(x)
    xr = x - nx
    corr = np.zeros_like(x)
    for k in range(int(nx.max()) if nx.size else 0):
        corr = corr + np.where(k < nx, y / ((xr + k) * (xr + k + y)), 0.0)
    ny = _shift_count(y)
    yr = y - ny
    for k in range(int(ny.max()) if ny.size else 0):
        corr = corr - np.where(k < ny, 1.0 / (xr + yr + k), 0.0)
    q, qerr = log_beta_dx_quad_many(xr, yr)
    check = q + corr
    cerr = qerr + 4.0 * _EPS * (np.abs(corr) + 1.0) * np.sqrt(nx + ny + 1.0)
    err = np.maximum(np.maximum(serr, cerr), np.abs(value - check))
    return value, err


# ---------------------------------------------------------------------------
# scalar API


def log_beta(p: ValueParams) -> OracleValue:
    """ln B(x, y) by the gamma route, error cross-checked by quadrature."""
    value, err = log_beta_many(p.x, p.y)
    return OracleValue(float(value), float(err))


def log_beta_quad(p: ValueParams) -> OracleValue:
    """ln B(x, y) straight from the defining integral (tanh-sinh)."""
    value, err = log_beta_quad_many(p.x, p.y)
    return OracleValue(float(value), float(err))


def ratio_log(p: RatioParams) -> OracleValue:
    """ln(B(b, y) / B(a, y))."""
    v, e = log_beta_many(np.array([p.b, p.a]), p.y)
    return OracleValue(float(v[0] - v[1]), float(e[0] + e[1]))


def symmetric_ratio_log(a: float, b: float) -> OracleValue:
    """ln(B(b, b) / B(a, a)) for 0 < a < b."""
    p = SymmetricParams(a, b)
    v, e = log_beta_many(np.array([p.b, p.a]), np.array([p.b, p.a]))
    return OracleValue(float(v[0] - v[1]), float(e[0] + e[1]))


def beta_difference(p: RatioParams) -> tuple[float, float]:
    """B(b+1, y) - B(a+1, y) in linear space, with its absolute error."""
    v, e = log_beta_many(np.array([p.b + 1.0, p.a + 1.0]), p.y)
    hi, lo = math.exp(v[0]), math.exp(v[1])
    err = hi * math.expm1(e[0]) + lo * math.expm1(e[1]) + 2.0 * _EPS * (hi + lo)
    return hi - lo, err


def log_beta_dx(p: ValueParams) -> tuple[float, float]:
    """psi(x) - psi(x + y) = d/dx ln B(x, y), with its absolute error."""
    v, e = log_beta_dx_many(p.x, p.y)
    return float(v), float(e)


def log_beta_dx_quad(p: ValueParams) -> tuple[float, float]:
    """d/dx ln B(x, y) by quadrature alone (no digamma)."""
    v, e = log_beta_dx_quad_many(p.x, p.y)
    return float(v), float(e)
