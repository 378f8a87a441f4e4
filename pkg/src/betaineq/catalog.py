"""Registry of closed-form bounds on the beta function, its ratios and differences.

Each :class:`Claim` is one side of one printed inequality.  Its evaluator is
a plain numpy expression, so the same code serves scalar calls
(:func:`eval_bound`) and whole sample batches (the verifier, the region map).
Multiplicative bounds are evaluated as logarithms built from the two stable
primitives

    L(s) = ln((b+s)/(a+s))                 = log1p((b-a)/(a+s))
    D(s) = (b+s) ln(b+s) - (a+s) ln(a+s)   = (b-a) ln(b+s) + (a+s) L(s)

so nothing like b**b is ever formed and b -> a degrades gracefully.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence, Union

import numpy as np

from .errors import DomainError, UsageError
from .oracle import RatioParams, SymmetricParams, ValueParams

__all__ = [
    "ClaimId",
    "Target",
    "Side",
    "Status",
    "Interval",
    "RatioDomain",
    "ValueDomain",
    "SymmetricDomain",
    "UnionDomain",
    "Claim",
    "LinearizationCoeffs",
    "Dominance",
    "VACUOUS",
    "TIE_BAND",
    "catalog",
    "lookup",
    "coeffs",
    "eval_bound",
    "compare_bounds",
    "dominance_relations",
    "lookup_dominance",
    "claims_table",
]

Params = Union[RatioParams, ValueParams, SymmetricParams]

# log of a lower bound that is <= 0; such a bound says nothing
VACUOUS = float("-inf")
TIE_BAND = 1e-12


class ClaimId(str, enum.Enum):
    DRAGOMIR_L = "DRAGOMIR_L"
    DRAGOMIR_U = "DRAGOMIR_U"
    IVADY_L = "IVADY_L"
    IVADY_U = "IVADY_U"
    FROM_L = "FROM_L"
    FROM_U = "FROM_U"
    UG_L = "UG_L"
    UG_U = "UG_U"
    FROM317_U = "FROM317_U"
    T21_L = "T21_L"
    T21_U = "T21_U"
    T22_L = "T22_L"
    T22_U = "T22_U"
    S1_L = "S1_L"
    S1_U = "S1_U"
    S2_L = "S2_L"
    S2_U = "S2_U"
    M3_L = "M3_L"
    M3_U = "M3_U"
    M41_U = "M41_U"
    M42_L = "M42_L"
    M6_U = "M6_U"
    M7_L = "M7_L"
    S3_L = "S3_L"
    S3_U = "S3_U"
    D1_L = "D1_L"
    D2_U = "D2_U"
    COR_U = "COR_U"
    DQ1_L = "DQ1_L"
    DQ1_U = "DQ1_U"

    def __str__(self):
        return self.value


class Target(str, enum.Enum):
    VALUE = "Value"                      # B(x, y)
    RATIO = "Ratio"                      # B(b, y) / B(a, y)
    SYMMETRIC_RATIO = "SymmetricRatio"   # B(b, b) / B(a, a)
    DIFFERENCE = "Difference"            # B(b+1, y) - B(a+1, y)
    LOG_DERIVATIVE = "LogDerivative"     # d/dx ln B(x, y)

    @property
    def log_space(self) -> bool:
        return self in (Target.VALUE, Target.RATIO, Target.SYMMETRIC_RATIO)

    @property
    def params_type(self):
        if self in (Target.RATIO, Target.DIFFERENCE):
            return RatioParams
        if self is Target.SYMMETRIC_RATIO:
            return SymmetricParams
        return ValueParams


class Side(str, enum.Enum):
    LOWER = "Lower"
    UPPER = "Upper"


class Status(str, enum.Enum):
    ASSERTED = "Asserted"
    DISPUTED = "Disputed"


# ---------------------------------------------------------------------------
# domains

_INF = math.inf


@dataclass(frozen=True)
class Interval:
    lo: float = 0.0
    hi: float = _INF
    lo_closed: bool = False
    hi_closed: bool = False

    def __contains__(self, v: float) -> bool:
        above = v >= self.lo if self.lo_closed else v > self.lo
        below = v <= self.hi if self.hi_closed else v < self.hi
        return above and below

    def describe(self, name: str) -> str:
        parts = []
        if self.lo > 0 or self.lo_closed:
            parts.append(f"{_fmt(self.lo)}{'≤' if self.lo_closed else '<'}")
        else:
            parts.append("0<")
        parts.append(name)
        if self.hi < _INF:
            parts.append(f"{'≤' if self.hi_closed else '<'}{_fmt(self.hi)}")
        return "".join(parts)


def _fmt(v: float) -> str:
    return f"{v:g}"


def _loguniform(rng, lo: float, hi: float) -> float:
    if hi <= lo:
        return lo
    return math.exp(rng.uniform(math.log(lo), math.log(hi)))


@dataclass(frozen=True)
class RatioDomain:
    """Region of (a, b, y) with 0 < a < b, given as nested coordinate ranges.

    ``a_above(y)`` and ``b_below(y)`` are optional strict constraints that
    depend on y (used by the comparison remarks).
    """

    text: str
    y: Interval = Interval()
    a: Interval = Interval()
    b_max: float = _INF
    b_max_closed: bool = True
    a_above: Optional[Callable[[float], float]] = None
    b_below: Optional[Callable[[float], float]] = None

    def contains(self, p) -> bool:
        if not isinstance(p, RatioParams):
            return False
        if p.y not in self.y or p.a not in self.a or not p.a < p.b:
            return False
        if not (p.b <= self.b_max if self.b_max_closed else p.b < self.b_max):
            return False
        if self.a_above is not None and not p.a > self.a_above(p.y):
            return False
        if self.b_below is not None and not p.b < self.b_below(p.y):
            return False
        return True

    def draw(self, rng, cap: float, floor: float, gap: float):
        y = _loguniform(rng, max(self.y.lo, floor), min(self.y.hi, cap))
        a_lo = max(self.a.lo, floor)
        if self.a_above is not None:
            a_lo = max(a_lo, self.a_above(y))
        b_hi = min(self.b_max, cap)
        if self.b_below is not None:
            b_hi = min(b_hi, self.b_below(y))
        a_hi = min(self.a.hi, b_hi - gap)
        if not a_lo < a_hi:
            return None
        a = _loguniform(rng, a_lo, a_hi)
        if not a + gap < b_hi:
            return None
        b = _loguniform(rng, a + gap, b_hi)
        try:
            return RatioParams(a, b, y)
        except DomainError:
            return None


@dataclass(frozen=True)
class ValueDomain:
    text: str
    x: Interval = Interval()
    y: Interval = Interval()

    def contains(self, p) -> bool:
        return isinstance(p, ValueParams) and p.x in self.x and p.y in self.y

    def draw(self, rng, cap: float, floor: float, gap: float):
        x = _loguniform(rng, max(self.x.lo, floor), min(self.x.hi, cap))
        y = _loguniform(rng, max(self.y.lo, floor), min(self.y.hi, cap))
        return ValueParams(x, y)


@dataclass(frozen=True)
class SymmetricDomain:
    text: str
    a: Interval = Interval()
    b_max: float = _INF
    b_max_closed: bool = False

    def contains(self, p) -> bool:
        if not isinstance(p, SymmetricParams) or p.a not in self.a or not p.a < p.b:
            return False
        return p.b <= self.b_max if self.b_max_closed else p.b < self.b_max

    def draw(self, rng, cap: float, floor: float, gap: float):
        b_hi = min(self.b_max, cap)
        a_lo = max(self.a.lo, floor)
        a_hi = min(self.a.hi, b_hi - gap)
        if not a_lo < a_hi:
            return None
        a = _loguniform(rng, a_lo, a_hi)
        b = _loguniform(rng, a + gap, b_hi)
        try:
            return SymmetricParams(a, b)
        except DomainError:
            return None


@dataclass(frozen=True)
class UnionDomain:
    text: str
    parts: tuple

    def contains(self, p) -> bool:
        return any(part.contains(p) for part in self.parts)

    def draw(self, rng, cap: float, floor: float, gap: float):
        return self.parts[rng.randrange(len(self.parts))].draw(rng, cap, floor, gap)


Domain = Union[RatioDomain, ValueDomain, SymmetricDomain, UnionDomain]

# ---------------------------------------------------------------------------
# stable building blocks (numpy, broadcast-friendly)


def _L(a, b, s):
    return np.log1p((b - a) / (a + s))


def _D(a, b, s):
    return (b - a) * np.log(b + s) + (a + s) * np.log1p((b - a) / (a + s))


def _one_minus_log1p_ratio(u):
    """1 - log1p(u)/u without cancellation for small u."""
    u = np.asarray(u, dtype=float)
    small = np.abs(u) < 1e-3
    us = np.where(small, u, 0.0)
    series = us * (0.5 + us * (-1.0 / 3.0 + us * (0.25 + us * (-0.2))))
    safe = np.where(small, 1.0, u)
    direct = 1.0 - np.log1p(safe) / safe
    return np.where(small, series, direct)


def _c_from317(a, b, y):
    # 1 - y/(b-a) ln((b+y)/(a+y))
    s = a + y
    return a / s + (y / s) * _one_minus_log1p_ratio((b - a) / s)


def _c_main6(a, b, y):
    # 1 - y/(b-a) ln((b+y+1)/(a+y+1))
    s = a + y + 1.0
    return (a + 1.0) / s + (y / s) * _one_minus_log1p_ratio((b - a) / s)


def _c_main7(a, b, y):
    # (b-a) / (b-a + y ln(b/a))
    d = b - a
    return d / (d + y * np.log1p(d / a))


# ---------------------------------------------------------------------------
# evaluators; ratio/value/symmetric ones return logs, the rest linear values


def _dragomir_l(x, y):
    v = 1.0 / (x * y) - 0.25
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(v > 0, np.log(np.where(v > 0, v, 1.0)), VACUOUS)


def _dragomir_u(x, y):
    return -np.log(x) - np.log(y)


def _ivady_l(x, y):
    return np.log(x + y - x * y) - np.log(x) - np.log(y)


def _ivady_u(x, y):
    return np.log(x + y) - np.log(x) - np.log(y) - np.log1p(x * y)


def _from_l(a, b, y):
    return _D(a, b, 0.0) - _L(a, b, 0.0) - _D(a, b, y) + _L(a, b, y)


def _from_u(a, b, y):
    return _D(a, b, 0.0) - _D(a, b, y)


def _ug_l(a, b, y):
    return _L(a, b, y) - (y + 1.0) * _L(a, b, 0.0)


def _ug_u(a, b, y):
    return _L(a, b, y) - _L(a, b, 0.0) - y * _L(a, b, y + 1.0)


def _from317_u(a, b, y):
    c = _c_from317(a, b, y)
    alpha, beta = np.log(c) - 1.0, 1.0 / c
    return (alpha + beta) * (b - a) - y * beta * _L(a, b, y)


def _power_ratio(a, b, y):
    # ((b+y)/(a+y))**(1-y) * (a/b)
    return (1.0 - y) * _L(a, b, y) - _L(a, b, 0.0)


def _power_a_over_b(a, b, y):
    # (a/b)**y
    return -y * _L(a, b, 0.0)


def _m3_l(a, b, y):
    return _D(a, b, 0.0) - _L(a, b, 0.0) - _D(a, b, y - 1.0)


def _m3_u(a, b, y):
    return -_L(a, b, 0.0) + _D(a, b, 1.0) - _D(a, b, y)


def _m4(a, b, y):
    # (a/b) * (b^b (a+y)^(a+y) / (a^a (b+y)^(b+y)))**(1 - 1/y)
    return -_L(a, b, 0.0) + (1.0 - 1.0 / y) * (_D(a, b, 0.0) - _D(a, b, y))


def _m6_u(a, b, y):
    c = _c_main6(a, b, y)
    alpha, beta = np.log(c) - 1.0, 1.0 / c
    return ((alpha + beta) * (b - a) - y * beta * _L(a, b, y + 1.0)
            - _L(a, b, 0.0) + y * _L(a, b, y))


def _m7_l(a, b, y):
    c = _c_main7(a, b, y)
    alpha, beta = np.log(c) + 1.0, -c
    return (alpha + beta) * (b - a) + (y * beta - 1.0) * _L(a, b, 0.0) + _L(a, b, y)


def _s_half(a, b):
    # exp((a-b)/2) * (a/b)**(1/2)
    return -0.5 * (b - a) - 0.5 * _L(a, b, 0.0)


def _s_exp(a, b):
    return a - b


def _s3_l(a, b):
    return (a - b) - _L(a, b, 0.0)


def _s3_u(a, b):
    return -0.5 * (b - a) - _L(a, b, 0.0) + 0.25 * np.log1p(2.0 * (b - a) / (2.0 * a + 1.0))


_DIFF_SCALE = 1.0 / (8.0 * math.log(1.5))
_LN_4_9 = math.log(4.0 / 9.0)
_LN_5_9 = math.log(5.0 / 9.0)


def _difference_increment(a, b, y):
    # K (5/9)**(y-1) [(4/9)**(b-1) - (4/9)**(a-1)]
    return (_DIFF_SCALE * np.exp((y - 1.0) * _LN_5_9 + (a - 1.0) * _LN_4_9)
            * np.expm1((b - a) * _LN_4_9))


def _cor_u(x, y):
    return (math.log(_DIFF_SCALE) + y * _LN_5_9 + (x - 1.0) * _LN_4_9
            + np.log(x + y) + np.log(x + y + 1.0) - np.log(x) - np.log(y))


def _dq_small_y(x, y):
    return -(y - 1.0) / (x + y) - 1.0 / x


def _dq_y_over_x(x, y):
    return -y / x


def _dq1_l(x, y):
    return np.where(y <= 1.0, _dq_small_y(x, y), _dq_y_over_x(x, y))


def _dq1_u(x, y):
    return np.where(y <= 1.0, _dq_y_over_x(x, y), _dq_small_y(x, y))


# ---------------------------------------------------------------------------
# the roster


@dataclass(frozen=True)
class Claim:
    """One side of one printed inequality."""

    id: ClaimId
    target: Target
    side: Side
    domain: Domain
    status: Status
    formula: str
    evaluator: Callable = field(repr=False, compare=False)
    note: str = ""

    def evaluate(self, *args):
        """Evaluate on raw coordinates (scalars or arrays): (x, y), (a, b, y) or (a, b)."""
        return self.evaluator(*args)


_ALL_Y = RatioDomain("0<a<b, y>0")
_Y_SMALL = RatioDomain("0<a<b, 0<y≤1", y=Interval(0.0, 1.0, hi_closed=True))
_Y_LARGE = RatioDomain("0<a<b, y>1", y=Interval(1.0))
_Y_GE1 = RatioDomain("0<a<b, y≥1", y=Interval(1.0, lo_closed=True))

_D1_DOMAIN = RatioDomain(
    "1≤y≤2, 1≤a<b≤2",
    y=Interval(1.0, 2.0, True, True),
    a=Interval(1.0, 2.0, lo_closed=True),
    b_max=2.0,
)
_D2_DOMAIN = UnionDomain(
    "(y>2, 0<a<b≤1) or (0<y<1, 2≤a<b)",
    (
        RatioDomain("y>2, 0<a<b≤1", y=Interval(2.0), b_max=1.0),
        RatioDomain("0<y<1, 2≤a<b", y=Interval(0.0, 1.0), a=Interval(2.0, lo_closed=True)),
    ),
)

_DISPUTED_NOTES = {
    ClaimId.S1_L: "oracle counterexample at (a,b)=(0.25,0.75)",
    ClaimId.S1_U: "derived from the same symmetric-argument step as S1_L",
    ClaimId.S2_L: "oracle counterexample at (a,b)=(1,2)",
    ClaimId.S2_U: "derived from the same symmetric-argument step as S2_L",
    ClaimId.S3_L: "oracle counterexample at (a,b)=(1,2)",
    ClaimId.M6_U: "fails for 0<y<1, e.g. (a,b,y)=(1,2,0.5); holds on sampled y>=1",
    ClaimId.COR_U: "oracle counterexample at (x,y)=(2,0.5); the derivation gives a lower bound",
}


def _claim(cid, target, side, domain, formula, evaluator):
    status = Status.DISPUTED if cid in _DISPUTED_NOTES else Status.ASSERTED
    return Claim(cid, target, side, domain, status, formula, evaluator,
                 _DISPUTED_NOTES.get(cid, ""))


_R, _V, _S = Target.RATIO, Target.VALUE, Target.SYMMETRIC_RATIO
_LO, _UP = Side.LOWER, Side.UPPER

_ROSTER = (
    _claim(ClaimId.DRAGOMIR_L, _V, _LO, ValueDomain("x≥1, y≥1", Interval(1.0, lo_closed=True), Interval(1.0, lo_closed=True)),
           "1/(xy) - 1/4", _dragomir_l),
    _claim(ClaimId.DRAGOMIR_U, _V, _UP, ValueDomain("x≥1, y≥1", Interval(1.0, lo_closed=True), Interval(1.0, lo_closed=True)),
           "1/(xy)", _dragomir_u),
    _claim(ClaimId.IVADY_L, _V, _LO, ValueDomain("0<x≤1, 0<y≤1", Interval(0.0, 1.0, hi_closed=True), Interval(0.0, 1.0, hi_closed=True)),
           "(x+y-xy)/(xy)", _ivady_l),
    _claim(ClaimId.IVADY_U, _V, _UP, ValueDomain("0<x≤1, 0<y≤1", Interval(0.0, 1.0, hi_closed=True), Interval(0.0, 1.0, hi_closed=True)),
           "(x+y)/(xy(1+xy))", _ivady_u),
    _claim(ClaimId.FROM_L, _R, _LO, _ALL_Y,
           "b^(b-1) (a+y)^(a+y-1) / (a^(a-1) (b+y)^(b+y-1))", _from_l),
    _claim(ClaimId.FROM_U, _R, _UP, _ALL_Y,
           "b^b (a+y)^(a+y) / (a^a (b+y)^(b+y))", _from_u),
    _claim(ClaimId.UG_L, _R, _LO, _ALL_Y,
           "(b+y)/(a+y) (a/b)^(y+1)", _ug_l),
    _claim(ClaimId.UG_U, _R, _UP, _ALL_Y,
           "(b+y)/(a+y) (a/b) ((a+y+1)/(b+y+1))^y", _ug_u),
    _claim(ClaimId.FROM317_U, _R, _UP, _ALL_Y,
           "e^((alpha+beta)(b-a)) ((a+y)/(b+y))^(y beta), c=1-y/(b-a) ln((b+y)/(a+y))", _from317_u),
    _claim(ClaimId.T21_L, _R, _LO, _Y_SMALL,
           "((b+y)/(a+y))^(1-y) (a/b)", _power_ratio),
    _claim(ClaimId.T21_U, _R, _UP, _Y_SMALL,
           "(a/b)^y", _power_a_over_b),
    _claim(ClaimId.T22_L, _R, _LO, _Y_LARGE,
           "(a/b)^y", _power_a_over_b),
    _claim(ClaimId.T22_U, _R, _UP, _Y_LARGE,
           "((b+y)/(a+y))^(1-y) (a/b)", _power_ratio),
    _claim(ClaimId.S1_L, _S, _LO, SymmetricDomain("0<a<b<1", b_max=1.0),
           "e^((a-b)/2) (a/b)^(1/2)", _s_half),
    _claim(ClaimId.S1_U, _S, _UP, SymmetricDomain("0<a<b<1", b_max=1.0),
           "e^(a-b)", _s_exp),
    _claim(ClaimId.S2_L, _S, _LO, SymmetricDomain("1≤a<b", Interval(1.0, lo_closed=True)),
           "e^(a-b)", _s_exp),
    _claim(ClaimId.S2_U, _S, _UP, SymmetricDomain("1≤a<b", Interval(1.0, lo_closed=True)),
           "e^((a-b)/2) (a/b)^(1/2)", _s_half),
    _claim(ClaimId.M3_L, _R, _LO, _Y_GE1,
           "b^(b-1) (a+y-1)^(a+y-1) / (a^(a-1) (b+y-1)^(b+y-1))", _m3_l),
    _claim(ClaimId.M3_U, _R, _UP, _Y_GE1,
           "a (b+1)^(b+1) (a+y)^(a+y) / (b (a+1)^(a+1) (b+y)^(b+y))", _m3_u),
    _claim(ClaimId.M41_U, _R, _UP, _Y_SMALL,
           "(a/b) (b^b (a+y)^(a+y) / (a^a (b+y)^(b+y)))^(1-1/y)", _m4),
    _claim(ClaimId.M42_L, _R, _LO, _Y_LARGE,
           "(a/b) (b^b (a+y)^(a+y) / (a^a (b+y)^(b+y)))^(1-1/y)", _m4),
    _claim(ClaimId.M6_U, _R, _UP, _ALL_Y,
           "e^((alpha+beta)(b-a)) ((a+y+1)/(b+y+1))^(y beta) (a/b) ((b+y)/(a+y))^y, "
           "c=1-y/(b-a) ln((b+y+1)/(a+y+1))", _m6_u),
    _claim(ClaimId.M7_L, _R, _LO, _ALL_Y,
           "e^((alpha+beta)(b-a)) (b/a)^(y beta - 1) (b+y)/(a+y), c=(b-a)/(b-a+y ln(b/a))", _m7_l),
    _claim(ClaimId.S3_L, _S, _LO, SymmetricDomain("0<a<b"),
           "e^(a-b) (a/b)", _s3_l),
    _claim(ClaimId.S3_U, _S, _UP, SymmetricDomain("0<a<b"),
           "e^((a-b)/2) (a/b) ((2b+1)/(2a+1))^(1/4)", _s3_u),
    _claim(ClaimId.D1_L, Target.DIFFERENCE, _LO, _D1_DOMAIN,
           "B(a+1,y) + (5/9)^(y-1) [(4/9)^(b-1) - (4/9)^(a-1)] / (8 ln(3/2))", _difference_increment),
    _claim(ClaimId.D2_U, Target.DIFFERENCE, _UP, _D2_DOMAIN,
           "B(a+1,y) + (5/9)^(y-1) [(4/9)^(b-1) - (4/9)^(a-1)] / (8 ln(3/2))", _difference_increment),
    _claim(ClaimId.COR_U, _V, _UP, ValueDomain("x≥2, 0<y<1", Interval(2.0, lo_closed=True), Interval(0.0, 1.0)),
           "(5/9)^y (4/9)^(x-1) (x+y)(x+y+1) / (8 ln(3/2) x y)", _cor_u),
    _claim(ClaimId.DQ1_L, Target.LOG_DERIVATIVE, _LO, ValueDomain("x>0, y>0"),
           "-(y-1)/(x+y) - 1/x if y≤1 else -y/x", _dq1_l),
    _claim(ClaimId.DQ1_U, Target.LOG_DERIVATIVE, _UP, ValueDomain("x>0, y>0"),
           "-y/x if y≤1 else -(y-1)/(x+y) - 1/x", _dq1_u),
)

_BY_ID = {c.id: c for c in _ROSTER}


def catalog() -> list[Claim]:
    """The full roster, in a fixed order."""
    return list(_ROSTER)


def lookup(cid) -> Claim:
    try:
        return _BY_ID[ClaimId(cid)]
    except ValueError:
        raise UsageError(f"unknown claim id {cid!r}") from None


def claims_table() -> list[dict]:
    return [
        {
            "id": c.id.value,
            "target": c.target.value,
            "side": c.side.value,
            "domain": c.domain.text,
            "status": c.status.value,
        }
        for c in _ROSTER
    ]


# ---------------------------------------------------------------------------
# linearization coefficients


@dataclass(frozen=True)
class LinearizationCoeffs:
    c: float
    alpha: float
    beta: float


_COEFF_FORMS = {
    ClaimId.FROM317_U: (_c_from317, -1.0, False),
    ClaimId.M6_U: (_c_main6, -1.0, False),
    ClaimId.M7_L: (_c_main7, 1.0, True),
}


def coeffs(cid, p: RatioParams) -> LinearizationCoeffs:
    """(c, alpha, beta) used by the tangent-line bounds FROM317_U, M6_U and M7_L."""
    cid = ClaimId(cid)
    if cid not in _COEFF_FORMS:
        raise UsageError(f"{cid} has no linearization coefficients")
    form, shift, negate = _COEFF_FORMS[cid]
    c = float(form(p.a, p.b, p.y))
    assert 0.0 < c <= 1.0, f"coefficient c={c!r} outside (0, 1] at {p}"
    beta = -c if negate else 1.0 / c
    return LinearizationCoeffs(c, math.log(c) + shift, beta)


# ---------------------------------------------------------------------------
# evaluation and comparison


def _coords(claim: Claim, params: Params):
    expected = claim.target.params_type
    if not isinstance(params, expected):
        raise UsageError(f"{claim.id} needs {expected.__name__}, got {type(params).__name__}")
    if isinstance(params, RatioParams):
        return params.a, params.b, params.y
    if isinstance(params, SymmetricParams):
        return params.a, params.b
    return params.x, params.y


def eval_bound(cid, params: Params, allow_outside_domain: bool = False) -> float:
    """Value of a bound at ``params``.

    Logarithm of the bound for Value, Ratio and SymmetricRatio targets; the
    plain value for Difference (the increment added to B(a+1, y)) and
    LogDerivative targets.  A Dragomir lower bound that is not positive
    yields :data:`VACUOUS`.
    """
    claim = lookup(cid)
    coords = _coords(claim, params)
    if not allow_outside_domain and not claim.domain.contains(params):
        raise DomainError(f"{params} outside the domain of {claim.id} ({claim.domain.text})")
    with np.errstate(invalid="ignore", divide="ignore"):
        return float(claim.evaluate(*coords))


def compare_bounds(first, second, params: Params, allow_outside_domain: bool = False) -> int:
    """Sign of bound(first) - bound(second): -1, 0 or +1 (0 inside the tie band)."""
    ca, cb = lookup(first), lookup(second)
    if ca.target is not cb.target:
        raise UsageError(f"{ca.id} bounds {ca.target.value} but {cb.id} bounds {cb.target.value}")
    diff = (eval_bound(ca.id, params, allow_outside_domain)
            - eval_bound(cb.id, params, allow_outside_domain))
    if abs(diff) <= TIE_BAND:
        return 0
    return 1 if diff > 0 else -1


# ---------------------------------------------------------------------------
# comparison remarks: "larger >= smaller" on a stated region


@dataclass(frozen=True)
class Dominance:
    name: str
    larger: ClaimId
    smaller: ClaimId
    domain: Domain
    strict: bool
    text: str


def _sqrt_bound(y):
    return 1.0 + math.sqrt(y + 1.0)


def _rem_d_bound(y):
    return (y * y - y) / (2.0 - y)


_DOMINANCE = (
    Dominance("rem1a_lower", ClaimId.T21_L, ClaimId.FROM_L,
              RatioDomain("0<a<b, 0<y<1", y=Interval(0.0, 1.0)), True,
              "T21_L > FROM_L for 0<y<1"),
    Dominance("rem1a_upper", ClaimId.FROM_U, ClaimId.T21_U,
              RatioDomain("0<a<b, 0<y<1", y=Interval(0.0, 1.0)), False,
              "T21_U <= FROM_U for 0<y<1"),
    Dominance("rem1b", ClaimId.UG_U, ClaimId.T21_U,
              RatioDomain("1/y-y<a<b, 0<y<1", y=Interval(0.0, 1.0), a_above=lambda y: 1.0 / y - y), False,
              "T21_U <= UG_U for 0<y<1, a>1/y-y"),
    Dominance("rem1c", ClaimId.FROM_U, ClaimId.T22_U,
              RatioDomain("0<a<b<1+sqrt(y+1), y>1", y=Interval(1.0), b_below=_sqrt_bound), True,
              "T22_U < FROM_U for y>1, b<1+sqrt(y+1)"),
    Dominance("rem1d", ClaimId.T22_L, ClaimId.FROM_L,
              RatioDomain("0<a<b<(y^2-y)/(2-y), 1<y<2", y=Interval(1.0, 2.0), b_below=_rem_d_bound), False,
              "T22_L >= FROM_L for 1<y<2, b<(y^2-y)/(2-y)"),
    Dominance("rem1e", ClaimId.UG_U, ClaimId.T22_U, _Y_LARGE, False,
              "T22_U <= UG_U for y>1"),
    Dominance("main3_vs_ug_upper", ClaimId.UG_U, ClaimId.M3_U, _Y_GE1, False,
              "M3_U <= UG_U for y>=1"),
    Dominance("main3_vs_from_lower", ClaimId.M3_L, ClaimId.FROM_L, _Y_GE1, False,
              "M3_L >= FROM_L for y>=1"),
    Dominance("main3_vs_from_upper", ClaimId.FROM_U, ClaimId.M3_U, _Y_GE1, False,
              "M3_U <= FROM_U for y>=1"),
    Dominance("main3_vs_t22_lower", ClaimId.M3_L, ClaimId.T22_L, _Y_LARGE, False,
              "T22_L <= M3_L for y>1"),
    Dominance("main3_vs_t22_upper", ClaimId.T22_U, ClaimId.M3_U, _Y_LARGE, False,
              "M3_U <= T22_U for y>1"),
    Dominance("main4_vs_t21_upper", ClaimId.T21_U, ClaimId.M41_U,
              RatioDomain("0<a<b, 0<y<1", y=Interval(0.0, 1.0)), False,
              "M41_U <= T21_U for 0<y<1"),
    Dominance("main4_vs_main3_lower", ClaimId.M42_L, ClaimId.M3_L,
              RatioDomain("1+y/2<a<b, y>1", y=Interval(1.0), a_above=lambda y: 1.0 + 0.5 * y), False,
              "M42_L >= M3_L for y>1, a>1+y/2"),
    Dominance("s3_vs_s2_upper", ClaimId.S2_U, ClaimId.S3_U,
              SymmetricDomain("1≤a<b", Interval(1.0, lo_closed=True)), False,
              "S3_U <= S2_U for 1<=a<b"),
    Dominance("s3_vs_s1_upper", ClaimId.S1_U, ClaimId.S3_U,
              SymmetricDomain("0<a<b<1", b_max=1.0), False,
              "S3_U <= S1_U for 0<a<b<1"),
)

_DOMINANCE_BY_NAME = {d.name: d for d in _DOMINANCE}


def dominance_relations() -> list[Dominance]:
    return list(_DOMINANCE)


def lookup_dominance(name: str) -> Dominance:
    try:
        return _DOMINANCE_BY_NAME[name]
    except KeyError:
        raise UsageError(f"unknown comparison {name!r}") from None
