"""Sample claim domains, compare bounds with the oracle, and aggregate verdicts.

Margins are signed so that positive means the printed inequality holds:
``oracle - bound`` for lower bounds, ``bound - oracle`` for upper bounds.
They are differences of logs for multiplicative targets and plain
differences for the Difference and LogDerivative targets.  A margin inside
``tolerance + 3 * oracle_err`` of zero is MARGINAL.

Sampling is a pure function of (seed, claim id, sample index), so reports do
not depend on evaluation order.
"""

from __future__ import annotations

import csv
import datetime as _dt
import enum
import json
import math
import os
import random
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from . import oracle
from .catalog import (
    TIE_BAND,
    Claim,
    ClaimId,
    Dominance,
    Side,
    Status,
    Target,
    catalog,
    dominance_relations,
    eval_bound,
    lookup,
)
from .errors import ConfigurationError
from .oracle import RatioParams, SymmetricParams, ValueParams

__all__ = [
    "Verdict",
    "VerifyRecord",
    "Aggregate",
    "SuiteReport",
    "DEFAULT_CAP",
    "WIDE_CAP",
    "sample_domain",
    "check_claim",
    "run_suite",
    "dominance_suite",
    "select_claims",
    "requery_with_quadrature",
]

DEFAULT_CAP = 50.0
WIDE_CAP = 1e3
SAMPLE_FLOOR = 1e-3
SAMPLE_GAP = 1e-6
MAX_DRAWS = 1000
SOUNDNESS_CHECKS = 20
REPORT_SCHEMA = "betaineq.suite-report/1"


class Verdict(str, enum.Enum):
    HOLDS = "HOLDS"
    FAILS = "FAILS"
    MARGINAL = "MARGINAL"


@dataclass(frozen=True)
class VerifyRecord:
    claim_id: ClaimId
    params: object
    bound: float
    oracle: float
    oracle_err: float
    margin: float
    verdict: Verdict


def params_dict(p) -> dict:
    if isinstance(p, RatioParams):
        return {"a": p.a, "b": p.b, "y": p.y}
    if isinstance(p, SymmetricParams):
        return {"a": p.a, "b": p.b}
    return {"x": p.x, "y": p.y}


@dataclass
class Aggregate:
    id: str
    n_samples: int = 0
    n_holds: int = 0
    n_fails: int = 0
    n_marginal: int = 0
    worst_margin: Optional[float] = None
    params_at_worst: Optional[dict] = None
    info: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {"id": self.id}
        out.update(self.info)
        out.update(
            n_samples=self.n_samples,
            n_holds=self.n_holds,
            n_fails=self.n_fails,
            n_marginal=self.n_marginal,
            worst_margin=_finite_or_none(self.worst_margin),
            params_at_worst=self.params_at_worst,
        )
        return out


def _finite_or_none(v):
    if v is None or not math.isfinite(v):
        return None
    return v


def _timestamp() -> str:
    epoch = os.environ.get("SOURCE_DATE_EPOCH")
    if epoch is not None:
        now = _dt.datetime.fromtimestamp(int(epoch), tz=_dt.timezone.utc)
    else:
        now = _dt.datetime.now(tz=_dt.timezone.utc)
    return now.isoformat(timespec="seconds")


@dataclass
class SuiteReport:
    kind: str
    seed: int
    tolerance: float
    samples: int
    wide: bool
    aggregates: list[Aggregate]
    timestamp: str = field(default_factory=_timestamp)
    soundness: Optional[dict] = None
    records: list[VerifyRecord] = field(default_factory=list)

    def aggregate(self, cid) -> Aggregate:
        key = str(cid)
        for agg in self.aggregates:
            if agg.id == key:
                return agg
        raise KeyError(key)

    def failures(self, status: Optional[Status] = None) -> list[str]:
        out = []
        for agg in self.aggregates:
            if agg.n_fails and (status is None or agg.info.get("status") == status.value):
                out.append(agg.id)
        return out

    def to_dict(self) -> dict:
        doc = {
            "schema": REPORT_SCHEMA,
            "kind": self.kind,
            "seed": self.seed,
            "tolerance": self.tolerance,
            "samples_per_claim": self.samples,
            "wide": self.wide,
            "timestamp": self.timestamp,
            "claims": [a.to_dict() for a in self.aggregates],
        }
        if self.kind == "claims":
            doc["asserted_failures"] = self.failures(Status.ASSERTED)
            doc["disputed_failures"] = self.failures(Status.DISPUTED)
        if self.soundness is not None:
            doc["soundness"] = self.soundness
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, allow_nan=False) + "\n"

    def write_json(self, path) -> None:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(self.to_json())

    def write_records_csv(self, path) -> None:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["claim_id", "a", "b", "y", "bound", "oracle", "margin", "verdict"])
            for r in self.records:
                a, b, y = _aby(r.params)
                w.writerow([r.claim_id.value, a, b, y, repr(r.bound), repr(r.oracle),
                            repr(r.margin), r.verdict.value])


def _aby(p):
    if isinstance(p, RatioParams):
        return repr(p.a), repr(p.b), repr(p.y)
    if isinstance(p, SymmetricParams):
        return repr(p.a), repr(p.b), ""
    return repr(p.x), "", repr(p.y)


# ---------------------------------------------------------------------------
# sampling


def sample_domain(claim, n: int, seed: int, wide: bool = False) -> list:
    """``n`` parameter tuples inside ``claim``'s domain (a Claim or a Dominance).

    Coordinates are log-uniform over the domain intersected with
    (1e-3, cap], cap = 50 (or 1e3 with ``wide``); b starts 1e-6 above a.
    """
    if n < 0:
        raise ConfigurationError("sample count must be non-negative")
    label = claim.id.value if isinstance(claim, Claim) else claim.name
    domain = claim.domain
    cap = WIDE_CAP if wide else DEFAULT_CAP
    out = []
    for i in range(n):
        rng = random.Random(f"{seed}/{label}/{i}")
        for _ in range(MAX_DRAWS):
            p = domain.draw(rng, cap, SAMPLE_FLOOR, SAMPLE_GAP)
            if p is not None and domain.contains(p):
                out.append(p)
                break
        else:
            raise ConfigurationError(
                f"could not sample the domain of {label} ({domain.text}) within cap {cap:g}"
            )
    return out


def _coords(target: Target, params: Sequence):
    if target in (Target.RATIO, Target.DIFFERENCE):
        return (np.array([p.a for p in params]), np.array([p.b for p in params]),
                np.array([p.y for p in params]))
    if target is Target.SYMMETRIC_RATIO:
        return np.array([p.a for p in params]), np.array([p.b for p in params])
    return np.array([p.x for p in params]), np.array([p.y for p in params])


# ---------------------------------------------------------------------------
# oracle per target


def _oracle_many(target: Target, coords):
    if target is Target.VALUE:
        x, y = coords
        return oracle.log_beta_many(x, y)
    if target is Target.RATIO:
        a, b, y = coords
        vb, eb = oracle.log_beta_many(b, y)
        va, ea = oracle.log_beta_many(a, y)
        return vb - va, eb + ea
    if target is Target.SYMMETRIC_RATIO:
        a, b = coords
        vb, eb = oracle.log_beta_many(b, b)
        va, ea = oracle.log_beta_many(a, a)
        return vb - va, eb + ea
    if target is Target.DIFFERENCE:
        a, b, y = coords
        vb, eb = oracle.log_beta_many(b + 1.0, y)
        va, ea = oracle.log_beta_many(a + 1.0, y)
        hi, lo = np.exp(vb), np.exp(va)
        err = hi * np.expm1(eb) + lo * np.expm1(ea) + 2.0 * np.finfo(float).eps * (hi + lo)
        return hi - lo, err
    x, y = coords
    return oracle.log_beta_dx_many(x, y)


def _quad_many(target: Target, coords):
    """Same quantities from the quadrature route only (no gamma/digamma series)."""
    if target is Target.VALUE:
        x, y = coords
        return oracle.log_beta_quad_many(x, y)
    if target is Target.RATIO:
        a, b, y = coords
        vb, eb = oracle.log_beta_quad_many(b, y)
        va, ea = oracle.log_beta_quad_many(a, y)
        return vb - va, eb + ea
    if target is Target.SYMMETRIC_RATIO:
        a, b = coords
        vb, eb = oracle.log_beta_quad_many(b, b)
        va, ea = oracle.log_beta_quad_many(a, a)
        return vb - va, eb + ea
    if target is Target.DIFFERENCE:
        a, b, y = coords
        vb, eb = oracle.log_beta_quad_many(b + 1.0, y)
        va, ea = oracle.log_beta_quad_many(a + 1.0, y)
        hi, lo = np.exp(vb), np.exp(va)
        return hi - lo, hi * np.expm1(eb) + lo * np.expm1(ea)
    x, y = coords
    return oracle.log_beta_dx_quad_many(x, y)


def _margins(side: Side, bound, value):
    with np.errstate(invalid="ignore"):
        if side is Side.LOWER:
            return np.where(np.isneginf(bound), np.inf, value - bound)
        return bound - value


def _verdicts(margin, err, tolerance):
    band = tolerance + 3.0 * err
    fails = margin < -band
    marginal = ~fails & (np.abs(margin) <= band)
    return np.where(fails, 2, np.where(marginal, 1, 0))


_VERDICT_CODES = (Verdict.HOLDS, Verdict.MARGINAL, Verdict.FAILS)


# ---------------------------------------------------------------------------
# single record


def check_claim(claim, params, tolerance: float, allow_outside_domain: bool = False) -> VerifyRecord:
    """Compare one claim with the oracle at one parameter tuple."""
    if not tolerance > 0:
        raise ConfigurationError("tolerance must be positive")
    claim = claim if isinstance(claim, Claim) else lookup(claim)
    bound = eval_bound(claim.id, params, allow_outside_domain)
    coords = _coords(claim.target, [params])
    value, err = _oracle_many(claim.target, coords)
    margin = _margins(claim.side, np.array([bound]), value)
    code = int(_verdicts(margin, err, tolerance)[0])
    return VerifyRecord(claim.id, params, bound, float(value[0]), float(err[0]),
                        float(margin[0]), _VERDICT_CODES[code])


def requery_with_quadrature(record: VerifyRecord, tolerance: float) -> Verdict:
    """Verdict for ``record`` recomputed with the quadrature oracle alone."""
    claim = lookup(record.claim_id)
    coords = _coords(claim.target, [record.params])
    value, err = _quad_many(claim.target, coords)
    margin = _margins(claim.side, np.array([record.bound]), value)
    return _VERDICT_CODES[int(_verdicts(margin, err, tolerance)[0])]


# ---------------------------------------------------------------------------
# suites


def select_claims(spec: str) -> list[Claim]:
    """Parse ``all``, ``asserted``, ``disputed`` or a comma list of ids."""
    spec = spec.strip()
    if spec == "all":
        return catalog()
    if spec == "asserted":
        return [c for c in catalog() if c.status is Status.ASSERTED]
    if spec == "disputed":
        return [c for c in catalog() if c.status is Status.DISPUTED]
    if not spec:
        return []
    return [lookup(tok.strip()) for tok in spec.split(",") if tok.strip()]


def _claim_info(claim: Claim) -> dict:
    return {
        "target": claim.target.value,
        "side": claim.side.value,
        "status": claim.status.value,
        "domain": claim.domain.text,
    }


def _fill(agg: Aggregate, codes, margins, params):
    agg.n_samples = int(codes.size)
    agg.n_holds = int(np.sum(codes == 0))
    agg.n_marginal = int(np.sum(codes == 1))
    agg.n_fails = int(np.sum(codes == 2))
    if codes.size:
        i = int(np.argmin(margins))
        agg.worst_margin = float(margins[i])
        agg.params_at_worst = params_dict(params[i])


def run_suite(
    claims: Iterable,
    n: int,
    seed: int,
    tolerance: float,
    wide: bool = False,
    keep_records: bool = False,
    soundness_checks: int = SOUNDNESS_CHECKS,
) -> SuiteReport:
    """Check every selected claim on ``n`` domain samples.

    ``soundness_checks`` records (chosen from the seed) are re-judged with the
    quadrature oracle alone; the outcome goes to ``report.soundness``.
    """
    if n < 1:
        raise ConfigurationError("need at least one sample per claim")
    if not tolerance > 0:
        raise ConfigurationError("tolerance must be positive")
    claims = [c if isinstance(c, Claim) else lookup(c) for c in claims]
    aggregates = []
    pool = []  # (record builder inputs) for soundness re-checks and CSV output
    records = []
    for claim in claims:
        params = sample_domain(claim, n, seed, wide)
        coords = _coords(claim.target, params)
        with np.errstate(invalid="ignore", divide="ignore"):
            bound = np.broadcast_to(claim.evaluate(*coords), (n,)).astype(float)
        value, err = _oracle_many(claim.target, coords)
        margin = _margins(claim.side, bound, value)
        codes = _verdicts(margin, err, tolerance)
        agg = Aggregate(claim.id.value, info=_claim_info(claim))
        _fill(agg, codes, margin, params)
        aggregates.append(agg)
        pool.append((claim, params, bound, value, err, margin, codes))
        if keep_records:
            records.extend(
                VerifyRecord(claim.id, params[i], float(bound[i]), float(value[i]), float(err[i]),
                             float(margin[i]), _VERDICT_CODES[int(codes[i])])
                for i in range(n)
            )

    soundness = None
    if pool and soundness_checks > 0:
        rng = random.Random(f"soundness/{seed}")
        checked = []
        for _ in range(soundness_checks):
            claim, params, bound, value, err, margin, codes = pool[rng.randrange(len(pool))]
            i = rng.randrange(n)
            rec = VerifyRecord(claim.id, params[i], float(bound[i]), float(value[i]), float(err[i]),
                               float(margin[i]), _VERDICT_CODES[int(codes[i])])
            again = requery_with_quadrature(rec, tolerance)
            checked.append({
                "claim_id": claim.id.value,
                "params": params_dict(params[i]),
                "verdict": rec.verdict.value,
                "quadrature_verdict": again.value,
            })
        soundness = {
            "checked": len(checked),
            "agreed": sum(c["verdict"] == c["quadrature_verdict"] for c in checked),
            "records": checked,
        }
    return SuiteReport("claims", seed, tolerance, n, wide, aggregates,
                       soundness=soundness, records=records)


def dominance_suite(
    n: int,
    seed: int,
    relations: Optional[Iterable[Dominance]] = None,
    wide: bool = False,
) -> SuiteReport:
    """Count how often each comparison remark's asserted direction is observed.

    HOLDS: larger - smaller > 1e-12; MARGINAL: within the tie band; FAILS:
    reversed.  ``worst_margin`` is the smallest observed larger - smaller.
    """
    if n < 1:
        raise ConfigurationError("need at least one sample per relation")
    relations = dominance_relations() if relations is None else list(relations)
    aggregates = []
    for rel in relations:
        big, small = lookup(rel.larger), lookup(rel.smaller)
        params = sample_domain(rel, n, seed, wide)
        for p in params:
            assert big.domain.contains(p) and small.domain.contains(p), (rel.name, p)
        coords = _coords(big.target, params)
        gap = np.asarray(big.evaluate(*coords) - small.evaluate(*coords), dtype=float)
        codes = np.where(gap > TIE_BAND, 0, np.where(gap >= -TIE_BAND, 1, 2))
        agg = Aggregate(rel.name, info={
            "larger": rel.larger.value,
            "smaller": rel.smaller.value,
            "relation": rel.text,
            "domain": rel.domain.text,
        })
        _fill(agg, codes, gap, params)
        aggregates.append(agg)
    return SuiteReport("dominance", seed, TIE_BAND, n, wide, aggregates)
