"""Quadrature check of the integration-by-parts identity behind the ratio bounds.

For a positive integer k and reals h, l with p = x + k - l > 0 and
q = y - h > 0, the identity reads

    int t^(p-1) (1-t)^q dt + p int t^(p-1) (1-t)^q ln t dt
        = q int t^p (1-t)^(q-1) ln t dt

(all integrals over (0, 1)).  :func:`lemma_residual` evaluates both sides
with the tanh-sinh engine and returns their difference.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .quadrature import log_beta_integral

__all__ = ["LemmaParams", "lemma_sides", "lemma_residual", "lemma_residual_many",
           "reduced_residual", "sample_lemma_params", "lemma_suite"]


@dataclass(frozen=True)
class LemmaParams:
    x: float
    y: float
    k: int
    h: float
    l: float

    def __post_init__(self):
        for name in ("x", "y", "h", "l"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v)):
                raise DomainError(f"{name} must be a finite real, got {v!r}")
        if self.x <= 0 or self.y <= 0:
            raise DomainError("x and y must be positive")
        if isinstance(self.k, bool) or not isinstance(self.k, (int, np.integer)) or self.k < 1:
            raise DomainError(f"k must be a positive integer, got {self.k!r}")
        if not self.y - self.h > 0:
            raise DomainError(f"need y - h > 0, got y={self.y!r}, h={self.h!r}")
        if not self.x + self.k - self.l > 0:
            raise DomainError(f"need x + k - l > 0, got {self.x + self.k - self.l!r}")


def _sides(p, q):
    # integrals written as I(P, Q, m) = int t^(P-1) (1-t)^(Q-1) (-ln t)^m
    l0, _ = log_beta_integral(p, q + 1.0)
    l1, _ = log_beta_integral(p, q + 1.0, log_weight=True)
    l2, _ = log_beta_integral(p + 1.0, q, log_weight=True)
    lhs = np.exp(l0) - p * np.exp(l1)
    rhs = -q * np.exp(l2)
    return lhs, rhs


def lemma_sides(params: LemmaParams) -> tuple[float, float]:
    """(left-hand side, right-hand side) of the identity."""
    p = params.x + params.k - params.l
    q = params.y - params.h
    lhs, rhs = _sides(np.float64(p), np.float64(q))
    return float(lhs), float(rhs)


def lemma_residual(params: LemmaParams) -> float:
    """Left-hand side minus right-hand side; ~0 up to quadrature error."""
    lhs, rhs = lemma_sides(params)
    return lhs - rhs


def lemma_residual_many(params: list[LemmaParams]) -> np.ndarray:
    """Residuals for many tuples, sharing one batched quadrature pass."""
    if not params:
        return np.empty(0)
    p = np.array([t.x + t.k - t.l for t in params], dtype=float)
    q = np.array([t.y - t.h for t in params], dtype=float)
    lhs, rhs = _sides(p, q)
    return lhs - rhs


def reduced_residual(x: float, y: float) -> float:
    """Residual of the k = l, h = 1 specialisation written with B and its x-derivative.

    B(x, y) + x dB/dx(x, y) = (y - 1) int t^x (1-t)^(y-2) ln t dt.
    The ln t factor vanishes at t = 1, so the right side converges for all y > 0.
    """
    if not (x > 0 and y > 0):
        raise DomainError("reduced form needs x > 0 and y > 0")
    lb, _ = log_beta_integral(x, y)
    ld, _ = log_beta_integral(x, y, log_weight=True)
    lr, _ = log_beta_integral(x + 1.0, y - 1.0, log_weight=True)
    lhs = math.exp(lb) - x * math.exp(ld)
    rhs = -(y - 1.0) * math.exp(lr)
    return lhs - rhs


def sample_lemma_params(n: int, seed: int) -> list[LemmaParams]:
    """Admissible tuples: x, y in (0, 10], k in {1,2,3}, h in [-2, y-0.1], l in [-2, x+k-0.1]."""
    out = []
    for i in range(n):
        rng = random.Random(f"lemma/{seed}/{i}")
        x = rng.uniform(1e-3, 10.0)
        y = rng.uniform(0.1 + 1e-3, 10.0)
        k = rng.choice((1, 2, 3))
        h = rng.uniform(-2.0, y - 0.1)
        l = rng.uniform(-2.0, x + k - 0.1)
        out.append(LemmaParams(x, y, k, h, l))
    return out


def lemma_suite(n: int, seed: int) -> dict:
    """Residual statistics over ``n`` sampled admissible tuples."""
    params = sample_lemma_params(n, seed)
    res = lemma_residual_many(params)
    if res.size == 0:
        return {"n_samples": 0, "max_abs_residual": 0.0, "params_at_max": None}
    i = int(np.argmax(np.abs(res)))
    worst = params[i]
    return {
        "n_samples": n,
        "seed": seed,
        "max_abs_residual": float(abs(res[i])),
        "params_at_max": {"x": worst.x, "y": worst.y, "k": worst.k, "h": worst.h, "l": worst.l},
    }
