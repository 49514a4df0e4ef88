"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v`` (the summary lines are
printed at the end of the session) or ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import json
import random
import re
import subprocess
import sys
import time
from contextlib import contextmanager

import pytest

from ordex import engine, harness
from ordex.certificate import verify_certificate
from ordex.engine import Certificate
from ordex.families import (
    EVENS,
    PRIMES,
    Family,
    IndexSet,
    a_ext,
    bcal,
    bset,
    padded_oracle,
    zeros_oracle,
)
from ordex.harness import random_dfa
from ordex.regex import regex_dfa
from oracles import jth

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # executed as a script
    ACCEPTANCE_LINES = []

INDEX_SETS = (EVENS, PRIMES, IndexSet("pseudo", seed=7))


@contextmanager
def criterion(number: int, title: str, limit: float):
    """Time the body, record a PASS/FAIL line, and re-raise failures."""
    state = {"detail": ""}
    started = time.perf_counter()
    try:
        yield state
        elapsed = time.perf_counter() - started
        assert elapsed < limit, f"took {elapsed:.1f}s, limit {limit}s"
    except AssertionError as exc:
        elapsed = time.perf_counter() - started
        line = f"criterion {number:2d} FAIL  {title} ({elapsed:.2f}s): {str(exc).splitlines()[0]}"
        print(line)
        ACCEPTANCE_LINES.append(line)
        raise
    line = f"criterion {number:2d} PASS  {title} ({elapsed:.2f}s) {state['detail']}".rstrip()
    print(line)
    ACCEPTANCE_LINES.append(line)


def test_criterion_01_ordinal_sets_bounded_by_index():
    with criterion(1, "|A^(j)| <= Myhill-Nerode index on 100 random DFAs", 30) as c:
        rng = random.Random(1)
        checked = 0
        for _ in range(100):
            d = random_dfa(rng, 8)
            index = engine.mn_index(d)
            for j in range(1, 51):
                size = len(engine.ordinal_set_exact(d, j))
                assert size <= index, f"j={j}: {size} > {index} for {d.to_json()}"
                checked += 1
        c["detail"] = f"[{checked} (dfa, j) pairs]"


def test_criterion_02_exact_vs_bounded():
    with criterion(2, "bounded (P=8, E=10) equals exact for j <= 6", 30) as c:
        mismatches = []
        for pattern in ("0*1*", "(0|1)*11", "(00)*", "0*1*0*"):
            d = regex_dfa(pattern)
            for j in range(1, 7):
                exact = engine.ordinal_set_exact(d, j)
                bounded = set(engine.ordinal_set_bounded(d.oracle(), j, 8, 10).confirmed)
                if bounded != exact:
                    missing = sorted(exact - bounded, key=len)
                    mismatches.append(f"{pattern} j={j} missing {missing}")
        assert not mismatches, "; ".join(mismatches)
        c["detail"] = "[4 regexes x 6 ordinals]"


def test_criterion_03_eq_count_certificate():
    with criterion(3, "eq-count certificate with 10 classes at j=1", 5) as c:
        oracle = Family("eq-count").oracle()
        cert = engine.certify_nonregular(oracle, 10, 1, 10, 12)
        assert isinstance(cert, Certificate), f"producer failed: {cert}"
        assert cert.j == 1 and cert.classes == 10
        check = verify_certificate(oracle, cert)
        assert check.ok, check.problems
        for x, w in cert.entries:
            assert jth(oracle.membership, "01", x, 1, 12) == w
        c["detail"] = f"[extensions {[w for _, w in cert.entries][-3:]}...]"


def test_criterion_04_palindromes():
    with criterion(4, "palindrome A^(1) contains 0^n for 1 <= n <= 10", 10) as c:
        oracle = Family("palindrome").oracle()
        prefixes = ["0" * n + "1" for n in range(1, 11)]
        got = engine.ordinal_set_bounded(oracle, 1, 0, 11, prefixes=prefixes)
        missing = [n for n in range(1, 11) if "0" * n not in got.confirmed]
        assert not missing, f"missing 0^n for n in {missing}"
        for x, y in got.witnesses:
            assert y == x[:-1]
        c["detail"] = f"[{got.size} confirmed]"


def test_criterion_05_prime_gaps():
    with criterion(5, "primes <= 200: |A^(2)| >= 6 via distinct prime gaps", 10) as c:
        primes = IndexSet("primes", limit=200)
        oracle = zeros_oracle(primes)
        got = engine.ordinal_set_bounded(oracle, 2, 200, 200)
        assert got.size >= 6, f"only {got.size} confirmed"
        plist = list(primes.elements(200))
        for x, y in got.witnesses:
            # members 0^q with q >= |x|, in order; the second one fixes y
            second = [q for q in plist if q >= len(x)][1]
            assert y == "0" * (second - len(x))
        used = set()
        for p, nxt in zip(plist, plist[1:]):
            gap = nxt - p
            assert jth(oracle.membership, "0", "0" * p, 2, gap) == "0" * gap
            assert "0" * gap in got.confirmed
            used.add(gap)
        assert len(used) >= 6
        c["detail"] = f"[{got.size} confirmed, gaps {sorted(used)}]"


def test_criterion_06_padded_unary():
    with criterion(6, "padded unary: |{a_n^(j)}| <= 3, a_n^(j) in B_(n mod 3)^j, |B^(j)| <= 3", 20) as c:
        for index in INDEX_SETS:
            oracle = padded_oracle(index)
            exts = {n: engine.first_extensions(oracle, "0" * n, 40, 130) for n in range(121)}
            for j in range(1, 41):
                values = set()
                big = bcal(j)
                assert len(big) <= 3, f"|B^({j})| = {len(big)}"
                for n in range(121):
                    a = a_ext(index, n, j)
                    assert exts[n][j - 1] == "0" * a, (index, n, j)
                    assert a in bset(n % 3, j), (index.describe(), n, j)
                    assert bset(n % 3, j) <= big
                    values.add(a)
                assert len(values) <= 3, (index.describe(), j, values)
        c["detail"] = "[3 index sets, n <= 120, j <= 40]"


def test_criterion_07_appendix_identities():
    with criterion(7, "lemma-A.1, lemma-A.2, lemma-A.3 sub-parts, lemma-A.7 for j <= 60", 5) as c:
        for cid in ("lemma-A.1", "lemma-A.2", "lemma-A.7"):
            r = harness.run_claim(cid, {"jmax": 60})
            assert r.status == harness.PASS, (cid, r.witnesses[:1])
        r = harness.run_claim("lemma-A.3", {"jmax": 60})
        parts = r.details["parts"]
        for part in ("A.4", "A.5", "A.6 as used (B_0)"):
            assert parts[part] == harness.PASS, part
        assert r.status == harness.DISCREPANCY
        assert parts["A.6 literal (B_1)"] == harness.DISCREPANCY
        w = r.witnesses[0]
        assert w["j"] == 1 and w["lhs"] == ["0", "00"] and w["rhs"] == ["", "0"]
        c["detail"] = "[literal A.6 DISCREPANCY at j=1: {0,00} not in {λ,0}]"


def test_criterion_08_observation():
    with criterion(8, "delta-case identities for n <= 100, j <= 30", 20) as c:
        r = harness.run_claim("obs-A.4", {"nmax": 100, "jmax": 30})
        assert r.status == harness.PASS, r.witnesses[:2]
        c["detail"] = f"[delta cases {r.details['delta_case_counts']}]"


def test_criterion_09_triangular_construction():
    with criterion(9, "triangular construction: lower bound, extension list, decomposition", 60) as c:
        lower = harness.run_claim("thm-5.2-lower", {"jmax": 8, "verify_jmax": 5})
        listing = harness.run_claim("thm-5.2-ext-list", {"jmax": 8})
        decomposition = harness.run_claim("thm-5.2-decomposition", {"jmax": 4})
        verdicts = {"a": lower.status, "b": listing.status, "c": decomposition.status}
        assert lower.status == harness.PASS, f"(a) {lower.witnesses[:1]}"
        assert listing.status == harness.PASS, f"(b) {listing.witnesses[:1]}"
        assert decomposition.status == harness.PASS, (
            f"(a) PASS, (b) PASS, (c) {decomposition.status}: "
            f"{json.dumps(decomposition.witnesses[:2])}"
        )
        c["detail"] = str(verdicts)


def test_criterion_10_kamae_weiss():
    with criterion(10, "Kamae-Weiss universal extensions and length-lex bound", 60) as c:
        ue = harness.run_claim("ex-5.5-ue", {"nmax": 3, "prefix_len": 10})
        assert ue.status == harness.PASS, ue.witnesses
        bound = harness.run_claim("lemma-5.3-kw", {"jmax": 4, "prefix_len": 10, "ext_len": 30})
        assert bound.status == harness.PASS, bound.witnesses[:2]
        c["detail"] = f"[{[w['confirmed'] for w in bound.witnesses]} confirmed per j]"


_WALL = re.compile(r'"wall_time": [0-9.e-]+')


def test_criterion_11_verify_scale_1(tmp_path):
    with criterion(11, "ordex verify --scale 1: 23 PASS, 2 DISCREPANCY, deterministic", 300) as c:
        reports = []
        for run in range(2):
            path = tmp_path / f"report{run}.json"
            proc = subprocess.run(
                [sys.executable, "-m", "ordex", "verify", "--scale", "1", "--json", str(path)],
                capture_output=True, text=True,
            )
            assert proc.returncode == 0, proc.stderr
            reports.append(path.read_text())
        assert _WALL.sub("", reports[0]) == _WALL.sub("", reports[1]), "reports differ"
        data = json.loads(reports[0])
        summary = data["summary"]
        discrepant = sorted(r["id"] for r in data["results"] if r["status"] == harness.DISCREPANCY)
        c["detail"] = f"[{summary}]"
        assert len(data["results"]) == 25
        assert (summary["PASS"], summary["DISCREPANCY"], summary["FAIL"], summary["INCONCLUSIVE"]) \
            == (23, 2, 0, 0), f"got {summary}, DISCREPANCY on {discrepant}"
        assert discrepant == ["ex-3.5-coprime", "lemma-A.3"]


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
