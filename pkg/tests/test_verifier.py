import csv
import json
import math

import pytest

from betaineq import verifier
from betaineq.catalog import ClaimId, Status, lookup, lookup_dominance
from betaineq.errors import ConfigurationError, DomainError
from betaineq.oracle import RatioParams, SymmetricParams, ValueParams
from betaineq.verifier import Verdict, check_claim, run_suite, sample_domain


# --- sampling -------------------------------------------------------------


def test_sample_t21_upper():
    ps = sample_domain(lookup("T21_U"), 3, 7)
    assert len(ps) == 3
    for p in ps:
        assert 0 < p.a < p.b <= 50 and 0 < p.y <= 1


def test_sample_empty_and_deterministic():
    assert sample_domain(lookup("M3_L"), 0, 1) == []
    assert sample_domain(lookup("M3_L"), 25, 4) == sample_domain(lookup("M3_L"), 25, 4)
    assert sample_domain(lookup("M3_L"), 25, 4) != sample_domain(lookup("M3_L"), 25, 5)


def test_sample_prefix_independent_of_n():
    # each tuple depends only on (seed, claim, index)
    assert sample_domain(lookup("UG_U"), 10, 2) == sample_domain(lookup("UG_U"), 30, 2)[:10]


def test_sample_respects_caps():
    for c in (lookup("FROM_U"), lookup("DRAGOMIR_L"), lookup("S1_U")):
        for p in sample_domain(c, 200, 1):
            assert c.domain.contains(p)
            for v in verifier.params_dict(p).values():
                assert 1e-3 <= v <= 50
    wide = sample_domain(lookup("FROM_U"), 300, 1, wide=True)
    assert max(p.b for p in wide) > 50 and max(p.b for p in wide) <= 1e3


def test_sample_dominance_domain():
    rel = lookup_dominance("rem1b")
    for p in sample_domain(rel, 100, 1):
        assert p.a > 1 / p.y - p.y and p.y < 1


def test_sample_negative_count():
    with pytest.raises(ConfigurationError):
        sample_domain(lookup("T21_U"), -1, 1)


def test_sample_empty_intersection():
    # a > 60 cannot meet the default cap of 50
    from betaineq.catalog import Dominance, Interval, RatioDomain
    impossible = Dominance("void", ClaimId.T22_U, ClaimId.FROM_U,
                           RatioDomain("a>60", a=Interval(60.0)), False, "void")
    with pytest.raises(ConfigurationError):
        sample_domain(impossible, 1, 1)


# --- single checks --------------------------------------------------------


def test_check_t21_upper():
    r = check_claim(lookup("T21_U"), RatioParams(1, 2, 0.5), 1e-9)
    assert r.margin == pytest.approx(-0.3465736 + 0.4054651, abs=1e-7)
    assert r.verdict is Verdict.HOLDS


def test_check_s3_lower():
    r = check_claim(lookup("S3_L"), SymmetricParams(1, 2), 1e-9)
    assert r.bound == pytest.approx(-1.6931472, abs=1e-7)
    assert r.oracle == pytest.approx(-1.7917595, abs=1e-7)
    assert r.margin == pytest.approx(-0.0986123, abs=1e-7)
    assert r.verdict is Verdict.FAILS


def test_check_cor_upper():
    r = check_claim(lookup("COR_U"), ValueParams(2, 0.5), 1e-9)
    assert math.exp(r.bound) == pytest.approx(0.8936072, abs=1e-5)
    assert math.exp(r.oracle) == pytest.approx(4 / 3, abs=1e-12)
    assert r.verdict is Verdict.FAILS


def test_check_difference():
    r = check_claim(lookup("D1_L"), RatioParams(1, 2, 1), 1e-9)
    assert r.oracle == pytest.approx(-1 / 6, abs=1e-12)
    assert r.bound == pytest.approx(-(5 / 9) / (8 * math.log(1.5)), abs=1e-14)
    assert r.verdict is Verdict.HOLDS


def test_check_marginal_band():
    # at y = 1 the T21 bounds are exact, so the margin sits in the tie band
    r = check_claim(lookup("T21_U"), RatioParams(1, 3, 1), 1e-9)
    assert abs(r.margin) <= 1e-9 + 3 * r.oracle_err
    assert r.verdict is Verdict.MARGINAL


def test_check_vacuous_dragomir():
    r = check_claim(lookup("DRAGOMIR_L"), ValueParams(3, 2), 1e-9)
    assert r.margin == math.inf and r.verdict is Verdict.HOLDS


def test_check_domain_and_tolerance_errors():
    with pytest.raises(DomainError):
        check_claim(lookup("T21_U"), RatioParams(1, 2, 2), 1e-9)
    with pytest.raises(ConfigurationError):
        check_claim(lookup("T21_U"), RatioParams(1, 2, 0.5), 0.0)


def test_margin_orientation_invariant():
    for cid, p in [("T21_L", RatioParams(1, 2, 0.5)), ("T21_U", RatioParams(1, 2, 0.5)),
                   ("DQ1_L", ValueParams(2, 0.5)), ("DQ1_U", ValueParams(2, 0.5))]:
        c = lookup(cid)
        r = check_claim(c, p, 1e-9)
        want = r.oracle - r.bound if c.side.value == "Lower" else r.bound - r.oracle
        assert r.margin == want


# --- suites -----------------------------------------------------------------


def test_suite_counts_and_soundness():
    rep = run_suite([lookup("T21_U"), lookup("S2_L"), lookup("DQ1_L")], 300, 1, 1e-9)
    for a in rep.aggregates:
        assert a.n_holds + a.n_fails + a.n_marginal == a.n_samples == 300
    assert rep.aggregate("S2_L").n_fails > 0
    assert rep.aggregate("T21_U").n_fails == 0
    assert rep.soundness["checked"] == 20
    assert rep.soundness["agreed"] == 20


def test_suite_s1_lower_fails():
    rep = run_suite([lookup("S1_L")], 1000, 1, 1e-9)
    agg = rep.aggregate("S1_L")
    assert agg.n_fails > 0
    assert agg.params_at_worst["a"] < agg.params_at_worst["b"] < 1


def test_suite_empty_selection():
    rep = run_suite([], 10, 1, 1e-9)
    assert rep.aggregates == [] and rep.soundness is None


def test_suite_rejects_zero_samples():
    with pytest.raises(ConfigurationError):
        run_suite([lookup("T21_U")], 0, 1, 1e-9)


def test_suite_matches_scalar_checks():
    rep = run_suite([lookup("M7_L")], 40, 3, 1e-9, keep_records=True)
    for rec in rep.records[::7]:
        single = check_claim(lookup("M7_L"), rec.params, 1e-9)
        assert single.bound == rec.bound and single.oracle == rec.oracle
        assert single.verdict is rec.verdict


def test_select_claims():
    assert {c.status for c in verifier.select_claims("disputed")} == {Status.DISPUTED}
    assert [c.id for c in verifier.select_claims("T21_U, M3_L")] == [ClaimId.T21_U, ClaimId.M3_L]
    assert len(verifier.select_claims("all")) == len(ClaimId)


def test_json_and_csv(tmp_path, monkeypatch):
    monkeypatch.setenv("SOURCE_DATE_EPOCH", "0")
    rep = run_suite([lookup("DRAGOMIR_L"), lookup("S1_L"), lookup("D1_L")], 50, 2, 1e-9,
                    keep_records=True)
    assert rep.timestamp == "1970-01-01T00:00:00+00:00"
    rep.write_json(tmp_path / "r.json")
    doc = json.loads((tmp_path / "r.json").read_text())
    assert [c["id"] for c in doc["claims"]] == ["DRAGOMIR_L", "S1_L", "D1_L"]
    assert doc["disputed_failures"] == ["S1_L"] and doc["asserted_failures"] == []
    for c in doc["claims"]:
        assert c["n_holds"] + c["n_fails"] + c["n_marginal"] == c["n_samples"]
    rep.write_records_csv(tmp_path / "r.csv")
    with open(tmp_path / "r.csv", newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["claim_id", "a", "b", "y", "bound", "oracle", "margin", "verdict"]
    assert len(rows) == 151
    drag = [r for r in rows if r[0] == "DRAGOMIR_L"][0]
    sym = [r for r in rows if r[0] == "S1_L"][0]
    assert drag[2] == "" and drag[3] != ""
    assert sym[3] == "" and sym[2] != ""
    # full precision round trip
    rec = rep.records[60]
    row = rows[61]
    assert float(row[4]) == rec.bound and float(row[5]) == rec.oracle


def test_report_deterministic(monkeypatch):
    monkeypatch.setenv("SOURCE_DATE_EPOCH", "1700000000")
    a = run_suite(verifier.select_claims("T21_L,M42_L"), 200, 9, 1e-9).to_json()
    b = run_suite(verifier.select_claims("T21_L,M42_L"), 200, 9, 1e-9).to_json()
    assert a == b


def test_dominance_suite_shapes():
    rep = verifier.dominance_suite(50, 1, relations=[lookup_dominance("rem1a_lower"),
                                                     lookup_dominance("rem1c")])
    assert [a.id for a in rep.aggregates] == ["rem1a_lower", "rem1c"]
    assert rep.aggregate("rem1a_lower").n_holds == 50
    assert rep.kind == "dominance"
    json.loads(rep.to_json())
