"""Exact Beta values at integer and half-integer arguments.

B(m, n) = (m-1)! (n-1)! / (m+n-1)! for integers; half-integers are reduced
with B(x+1, y) = B(x, y) x / (x + y) down to the four base cases
B(1,1)=1, B(1/2,1)=B(1,1/2)=2, B(1/2,1/2)=pi.  Values are returned as
(rational, pi_power) so the log is ln(rational) + pi_power * ln(pi).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

_HALF = Fraction(1, 2)
_BASE = {
    (Fraction(1), Fraction(1)): (Fraction(1), 0),
    (_HALF, Fraction(1)): (Fraction(2), 0),
    (Fraction(1), _HALF): (Fraction(2), 0),
    (_HALF, _HALF): (Fraction(1), 1),
}


@lru_cache(maxsize=None)
def exact_beta(x: Fraction, y: Fraction) -> tuple[Fraction, int]:
    x, y = Fraction(x), Fraction(y)
    if (x * 2).denominator != 1 or (y * 2).denominator != 1 or x <= 0 or y <= 0:
        raise ValueError("integer or half-integer arguments only")
    if (x, y) in _BASE:
        return _BASE[(x, y)]
    if x > 1:
        r, k = exact_beta(x - 1, y)
        return r * (x - 1) / (x - 1 + y), k
    r, k = exact_beta(y, x)
    return r, k


def exact_log_beta(x, y) -> float:
    r, k = exact_beta(Fraction(x), Fraction(y))
    return math.log(r.numerator) - math.log(r.denominator) + k * math.log(math.pi)


# 20 pairs spanning small, large, integer, half-integer and mixed arguments
EXACT_PAIRS = [
    (1, 1), (2, 2), (2, 0.5), (0.5, 0.5), (3, 1), (1, 7), (4, 6), (10, 3),
    (0.5, 1.5), (1.5, 2.5), (2.5, 0.5), (5.5, 3), (7, 7.5), (12, 0.5),
    (20, 20), (30, 4.5), (0.5, 40), (45.5, 45.5), (60, 1.5), (80, 90),
]
