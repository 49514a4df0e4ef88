import json

import pytest

from ordex import engine, harness
from ordex.certificate import verify_certificate
from ordex.engine import Certificate, Confirmed
from ordex.families import Family, zeros_oracle, IndexSet

EXPECTED_IDS = [
    "lemma-2.1", "thm-2.2-certificates", "ex-3.1", "ex-3.2", "ex-3.3", "cor-3.4-primes",
    "ex-3.4-xxry", "ex-3.5-coprime", "lemma-4.2", "lemma-4.5", "eq-4.9", "thm-5.2-lower",
    "thm-5.2-ext-list", "thm-5.2-decomposition", "lemma-5.3-kw", "ex-5.5-ue", "lemma-A.1",
    "lemma-A.2", "lemma-A.3", "obs-A.4", "lemma-A.5", "lemma-A.6", "lemma-A.7", "lemma-A.8",
    "eq-A.21",
]


def test_registry_ids():
    claims = harness.list_claims()
    assert [c[0] for c in claims] == EXPECTED_IDS
    assert all(isinstance(b, dict) for _, _, b in claims)


def test_unknown_claim():
    with pytest.raises(harness.UnknownClaim):
        harness.run_claim("lemma-9.9")


def test_eq_4_9_passes():
    assert harness.run_claim("eq-4.9").status == harness.PASS


def test_coprime_discrepancy_witness():
    r = harness.run_claim("ex-3.5-coprime")
    assert r.status == harness.DISCREPANCY
    w = next(w for w in r.witnesses if w["prefix"] == "00")
    assert w["computed"][1] == "01" and w["stated"][1] == "111"
    oracle = Family("coprime").oracle()
    assert engine.jth_extension_bounded(oracle, "00", 2, 3) == Confirmed("01")


def test_lemma_a3_parts():
    r = harness.run_claim("lemma-A.3")
    assert r.status == harness.DISCREPANCY
    parts = r.details["parts"]
    assert parts["A.4"] == parts["A.5"] == parts["A.6 as used (B_0)"] == harness.PASS
    assert parts["A.6 literal (B_1)"] == harness.DISCREPANCY
    w = r.witnesses[0]
    assert w["j"] == 1 and w["lhs"] == ["0", "00"] and w["rhs"] == ["", "0"]


def test_budget_overrides_and_scale():
    r = harness.run_claim("eq-4.9", {"jmax": 7})
    assert r.budgets == {"jmax": 7}
    r = harness.run_claim("lemma-A.7", scale=2)
    assert r.budgets == {"jmax": 120} and r.status == harness.PASS


def test_lower_bound_monotone_in_budget():
    small = harness.run_claim("thm-5.2-lower", {"jmax": 4, "verify_jmax": 3})
    large = harness.run_claim("thm-5.2-lower", {"jmax": 10, "verify_jmax": 5})
    assert small.status == large.status == harness.PASS
    assert len(large.witnesses) > len(small.witnesses)


def test_lower_bound_witnesses_recheck():
    r = harness.run_claim("thm-5.2-lower", {"jmax": 5})
    c51 = Family("c51").oracle()
    for w in r.witnesses:
        entries = tuple(tuple(e) for e in w["entries"])
        assert verify_certificate(c51, Certificate(w["j"], entries, 40))


def test_prime_gap_witnesses_recheck():
    r = harness.run_claim("cor-3.4-primes")
    oracle = zeros_oracle(IndexSet("primes", limit=200))
    assert len(r.witnesses) >= 6
    for w in r.witnesses:
        assert engine.jth_extension_bounded(oracle, w["prefix"], 2, 200) == Confirmed(w["extension"])


def test_decomposition_family_is_real():
    r = harness.run_claim("thm-5.2-decomposition", {"jmax": 2, "prefix_len": 30, "ext_len": 20})
    assert r.status == harness.DISCREPANCY
    c51 = Family("c51").oracle()
    for item in r.details["second_extension_family"]:
        assert item["second_extension"] == item["expected"]
        assert engine.jth_extension_bounded(c51, item["prefix"], 2, 30) == Confirmed(item["expected"])


def test_findings_priority():
    f = harness.Findings(undecided=[1])
    assert f.status == harness.INCONCLUSIVE
    f.discrepancies.append(2)
    assert f.status == harness.DISCREPANCY
    f.failures.append(3)
    assert f.status == harness.FAIL


def test_run_all_deterministic():
    ids = ["lemma-2.1", "ex-3.3", "thm-5.2-ext-list", "lemma-A.3"]
    a, sa = harness.run_all(ids=ids)
    b, sb = harness.run_all(ids=list(reversed(ids)))
    assert sa == sb
    dump = lambda rs: json.dumps([r.to_json(with_time=False) for r in rs])
    assert dump(a) == dump(b)
    assert [r.id for r in a] == ids
