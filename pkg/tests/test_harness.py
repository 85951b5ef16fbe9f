import dataclasses
import json

import pytest

from carmseq.harness import (
    ASSERTED_ONLY,
    HarnessMismatch,
    Kind,
    PaperClaim,
    claim_table,
    evaluate_claim,
    exhaustive_small_scan,
    run_claim_table,
    theorem2_verdict,
    verdict_json,
    wright_list_check,
)
import carmseq.harness as harness


@pytest.fixture(scope="module")
def verdict():
    return theorem2_verdict()


def test_all_claims_pass(verdict):
    assert verdict.passed
    assert not verdict.failed_claims
    assert verdict.scan_hits == []
    assert verdict.k1_hits == []
    assert verdict.k27 == [7, 13, 19]


def test_claim_ids_unique():
    ids = [c.id for c in claim_table()]
    assert len(ids) == len(set(ids))


def test_congruence_rows_count():
    rows = [c for c in claim_table() if c.kind is Kind.CONGRUENCE and "p" in c.payload]
    assert len(rows) >= 25


def test_wrong_expectation_fails():
    c = next(c for c in claim_table() if c.id == "k9_p13")
    bad = dataclasses.replace(c, expected=(9, 12))
    r = evaluate_claim(bad)
    assert not r.passed and r.observed == (10, 12)


def test_broken_row_is_isolated():
    c = PaperClaim("bogus", Kind.IDENTITY, {"op": "nope"}, True, "test")
    r = evaluate_claim(c)
    assert not r.passed and r.error


def test_missing_claims_reported():
    table = [c for c in claim_table() if c.id != "k21_17_337"]
    v = theorem2_verdict(claims=table)
    assert v.missing == ["k21_17_337"]
    assert not v.passed


def test_skip_scans():
    rs = run_claim_table(skip_scans=True)
    assert all(r.claim.kind is not Kind.SCAN for r in rs)
    assert all(r.passed for r in rs)


def test_json_report(verdict):
    data = json.loads(verdict_json(verdict))
    assert data["passed"] is True
    assert data["asserted_only"] == list(ASSERTED_ONLY)
    claims = {c["id"]: c for c in data["finite_checks"]["claims"]}
    assert claims["k21_17_337"]["observed"] == [130, 168]
    assert claims["k15_qr_d3"]["observed"] == [0, 8]


def test_text_report(verdict):
    text = verdict.to_text()
    assert "verdict: smallest k is 27" in text
    assert "asserted, not machine-checked" in text
    assert "FAIL" not in text


def test_small_scan_subset():
    assert exhaustive_small_scan([27], 10) == [(27, 6)]
    assert exhaustive_small_scan([3, 5], 40) == []


def test_wright_list():
    rep = wright_list_check()
    assert rep.passed
    assert all(r["carmichael"] for r in rep.rows)
    assert rep.excluded["fermat_factors"] == [5, 65537]


def test_wright_list_mismatch_raises(monkeypatch):
    monkeypatch.setattr(harness, "WRIGHT_LIST", harness.WRIGHT_LIST + ((3, 5, 7),))  # 105 is not Carmichael
    with pytest.raises(HarnessMismatch):
        wright_list_check()
