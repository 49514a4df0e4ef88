"""Registry of executable claims and the runner that checks them.

Each claim runs a finite instance of a stated property and reports PASS,
FAIL, INCONCLUSIVE or DISCREPANCY. DISCREPANCY marks a brute-force value that
contradicts the value a claim's source text states; FAIL marks a property
the implementation itself should satisfy but does not.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from typing import Callable

from ordex import engine
from ordex.certificate import verify_certificate
from ordex.dfa import Dfa
from ordex.engine import Certificate, Confirmed
from ordex.families import (
    EVENS,
    PRIMES,
    Family,
    IndexSet,
    a_ext,
    bcal,
    bset,
    c51_classify,
    c51_D,
    c51_predicted_extensions,
    concat,
    delta_info,
    eq_count_viable,
    gaps,
    is_prime,
    kw_universal,
    padded_oracle,
    quotient0,
    triangular,
    triangular_inverse,
    x_word,
    y_word,
    zeros_oracle,
)
from ordex.lang import BINARY, Alphabet, LanguageOracle
from ordex.regex import regex_dfa

PASS, FAIL, INCONCLUSIVE, DISCREPANCY = "PASS", "FAIL", "INCONCLUSIVE", "DISCREPANCY"
STATUSES = (PASS, FAIL, INCONCLUSIVE, DISCREPANCY)

INDEX_SETS = (EVENS, PRIMES, IndexSet("pseudo", seed=7))


class UnknownClaim(KeyError):
    pass


@dataclass
class Findings:
    failures: list = field(default_factory=list)
    discrepancies: list = field(default_factory=list)
    undecided: list = field(default_factory=list)
    details: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)

    @property
    def status(self) -> str:
        if self.failures:
            return FAIL
        if self.discrepancies:
            return DISCREPANCY
        if self.undecided:
            return INCONCLUSIVE
        return PASS


@dataclass(frozen=True)
class Claim:
    id: str
    anchor: str
    budgets: dict
    check: Callable[[dict], Findings]
    # what a violated main assertion means: FAIL (our bug) or DISCREPANCY (source text)
    on_violation: str = FAIL


@dataclass
class ClaimResult:
    id: str
    anchor: str
    status: str
    budgets: dict
    witnesses: list
    details: dict
    wall_time: float = 0.0

    def to_json(self, with_time: bool = True) -> dict:
        out = {
            "id": self.id,
            "anchor": self.anchor,
            "status": self.status,
            "budgets": self.budgets,
            "witnesses": self.witnesses,
            "details": self.details,
        }
        if with_time:
            out["wall_time"] = round(self.wall_time, 4)
        return out


REGISTRY: dict[str, Claim] = {}


def claim(cid: str, anchor: str, on_violation: str = FAIL, **budgets: int):
    def register(fn: Callable[[dict], Findings]) -> Callable[[dict], Findings]:
        REGISTRY[cid] = Claim(cid, anchor, dict(budgets), fn, on_violation)
        return fn

    return register


def _violated(f: Findings, cid: str, witness) -> None:
    if REGISTRY[cid].on_violation == DISCREPANCY:
        f.discrepancies.append(witness)
    else:
        f.failures.append(witness)


def lengths_as_words(s) -> list[str]:
    return ["0" * n for n in sorted(s)]


# -- random automata ---------------------------------------------------------


def random_dfa(rng: random.Random, max_states: int, alphabet: Alphabet = BINARY) -> Dfa:
    n = rng.randint(1, max_states)
    rows = tuple(tuple(rng.randrange(n) for _ in alphabet.symbols) for _ in range(n))
    accepting = frozenset(q for q in range(n) if rng.random() < 0.5)
    return Dfa(alphabet, rows, rng.randrange(n), accepting)


@claim("lemma-2.1", "Lemma 2.1", trials=100, jmax=50, nmax=8)
def _lemma_2_1(b: dict) -> Findings:
    f = Findings()
    rng = random.Random(20210521)
    tight = 0
    for t in range(b["trials"]):
        d = random_dfa(rng, b["nmax"])
        index = engine.mn_index(d)
        for j in range(1, b["jmax"] + 1):
            size = len(engine.ordinal_set_exact(d, j))
            if size > index:
                _violated(f, "lemma-2.1", {"trial": t, "dfa": d.to_json(), "j": j,
                                           "size": size, "mn_index": index})
            tight += size == index
    f.details = {"dfas": b["trials"], "pairs_at_equality": tight}
    return f


# -- certificates ------------------------------------------------------------


@claim("thm-2.2-certificates", "Theorem 2.2", prefix_len=10, ext_len=12, jmax=2)
def _thm_2_2(b: dict) -> Findings:
    f = Findings()
    targets = [
        ("family:eq-count", Family("eq-count").oracle(), 10),
        ("family:palindrome", Family("palindrome").oracle(), 6),
        ("family:xxry", Family("xxry").oracle(), 5),
        ("family:coprime", Family("coprime").oracle(), 4),
        ("family:zeros?I=primes", Family("zeros", PRIMES).oracle(), 3),
    ]
    produced = {}
    for name, oracle, k in targets:
        cert = engine.certify_nonregular(oracle, k, b["jmax"], b["prefix_len"], b["ext_len"])
        if not isinstance(cert, Certificate):
            f.undecided.append({"language": name, "k": k, "best": [cert.best_j, cert.best_count]})
            continue
        check = verify_certificate(oracle, cert)
        if not check.ok:
            _violated(f, "thm-2.2-certificates", {"language": name, "problems": check.problems})
        produced[name] = {"j": cert.j, "entries": [list(e) for e in cert.entries]}
    # a regular language can never yield more entries than its state count
    for pattern in ("0*1*", "(0|1)*11", "(00)*"):
        d = regex_dfa(pattern)
        k = engine.mn_index(d) + 1
        out = engine.certify_nonregular(d.oracle(), k, b["jmax"], b["prefix_len"], b["ext_len"])
        if isinstance(out, Certificate):
            _violated(f, "thm-2.2-certificates", {"regex": pattern, "certificate": list(out.entries)})
    f.details = {"certificates": produced}
    f.witnesses = [{"language": n, "classes": len(c["entries"])} for n, c in produced.items()]
    return f


# -- example languages -------------------------------------------------------


@claim("ex-3.1", "Example 3.1", nmax=12, prefix_len=10, ext_len=12)
def _ex_3_1(b: dict) -> Findings:
    f = Findings()
    subsets = {
        "all": lambda n: True,
        "even n": lambda n: n % 2 == 0,
        "prime n": is_prime,
    }
    for label, keep in subsets.items():
        def member(w: str, keep=keep) -> bool:
            h = len(w) // 2
            return len(w) % 2 == 0 and w == "0" * h + "1" * h and keep(h)

        oracle = LanguageOracle(BINARY, f"eq-count[{label}]", member, eq_count_viable)
        for n in range(b["nmax"] + 1):
            if not keep(n):
                continue
            got = engine.jth_extension_bounded(oracle, "0" * n, 1, n + 1)
            if got != Confirmed("1" * n):
                _violated(f, "ex-3.1", {"subset": label, "prefix": "0" * n, "got": repr(got)})
    eq = Family("eq-count").oracle()
    cert = engine.certify_nonregular(eq, 10, 1, b["prefix_len"], b["ext_len"])
    if not isinstance(cert, Certificate):
        f.undecided.append({"certificate": "not reached", "best": cert.best_count})
    else:
        check = verify_certificate(eq, cert)
        if not check.ok:
            _violated(f, "ex-3.1", {"problems": check.problems})
        f.witnesses = [list(e) for e in cert.entries]
    return f


@claim("ex-3.2", "Example 3.2", nmax=10)
def _ex_3_2(b: dict) -> Findings:
    f = Findings()
    pal = Family("palindrome").oracle()
    prefixes = ["0" * n + "1" for n in range(1, b["nmax"] + 1)]
    got = engine.ordinal_set_bounded(pal, 1, 0, b["nmax"] + 1, prefixes=prefixes)
    for x, y in got.witnesses:
        if y != x[:-1]:
            _violated(f, "ex-3.2", {"prefix": x, "first_extension": y, "expected": x[:-1]})
    missing = [("0" * n) for n in range(1, b["nmax"] + 1) if "0" * n not in got.confirmed]
    for w in missing:
        _violated(f, "ex-3.2", {"missing": w})
    f.witnesses = [list(p) for p in got.witnesses]
    return f


def _explicit(index: IndexSet, bound: int, keep=lambda i, n: True) -> IndexSet:
    members = [n for i, n in enumerate(index.elements(bound)) if keep(i, n)]
    return IndexSet("list", tuple(members))


@claim("ex-3.3", "Example 3.3", nmax=60)
def _ex_3_3(b: dict) -> Findings:
    f = Findings()
    bound = b["nmax"]
    subsets = {
        "J = primes": _explicit(PRIMES, bound),
        "J = every other prime": _explicit(PRIMES, bound, lambda i, n: i % 2 == 0),
        "J = primes = 1 mod 4": _explicit(PRIMES, bound, lambda i, n: n % 4 == 1),
    }
    reading_differs = []
    for label, J in subsets.items():
        oracle = zeros_oracle(J)
        members = list(J.values)
        for n, nxt in zip(members, members[1:]):
            got = engine.first_extensions(oracle, "0" * n, 2, nxt - n)
            expected = ["", "0" * (nxt - n)]
            if got != expected:
                _violated(f, "ex-3.3", {"J": label, "n": n, "got": got, "expected": expected})
            succ_i = PRIMES.successor(n)
            if succ_i != nxt:
                reading_differs.append({"J": label, "n": n, "gap_in_J": nxt - n, "gap_in_I": succ_i - n})
        f.witnesses.append({"J": label, "gaps": sorted(gaps(J))})
    f.details = {
        "successor_reading": "second extension of 0^n is 0^(next element of J - n)",
        "instances_where_I_successor_would_differ": reading_differs[:10],
        "count_where_I_successor_would_differ": len(reading_differs),
    }
    return f


@claim("cor-3.4-primes", "Corollary 3.4", nmax=200)
def _cor_3_4(b: dict) -> Findings:
    f = Findings()
    top = b["nmax"]
    primes = IndexSet("primes", limit=top)
    oracle = zeros_oracle(primes)
    got = engine.ordinal_set_bounded(oracle, 2, top, top)
    expected_gaps = gaps(primes, top)
    witnesses = []
    for p in primes.elements(top):
        nxt = primes.successor(p)
        if nxt is None:
            continue
        res = engine.jth_extension_bounded(oracle, "0" * p, 2, top)
        if res != Confirmed("0" * (nxt - p)):
            _violated(f, "cor-3.4-primes", {"prefix_length": p, "got": repr(res)})
    for g in sorted(expected_gaps):
        p = next(p for p in primes.elements(top) if primes.successor(p) == p + g)
        witnesses.append({"prefix": "0" * p, "extension": "0" * g, "gap": g})
        if "0" * g not in got.confirmed:
            _violated(f, "cor-3.4-primes", {"gap": g, "missing_from_confirmed": True})
    if len(expected_gaps) < 6:
        _violated(f, "cor-3.4-primes", {"distinct_gaps": sorted(expected_gaps)})
    f.witnesses = witnesses
    f.details = {"confirmed_size": got.size, "distinct_gaps": sorted(expected_gaps)}
    return f


@claim("ex-3.4-xxry", "Example 3.4", nmax=4, prefix_len=8, ext_len=10)
def _ex_3_4(b: dict) -> Findings:
    f = Findings()
    oracle = Family("xxry").oracle()
    got = engine.ordinal_set_bounded(oracle, 1, b["prefix_len"], b["ext_len"])
    via = dict((y, x) for x, y in got.witnesses)
    for n in range(b["nmax"] + 1):
        w = "10" * n + "0"
        if w not in got.confirmed:
            _violated(f, "ex-3.4-xxry", {"n": n, "missing": w})
            continue
        f.witnesses.append({"n": n, "extension": w, "least_prefix": via[w]})
        if n >= 1:
            res = engine.jth_extension_bounded(oracle, "01" * n, 1, 2 * n + 2)
            if res != Confirmed(w):
                _violated(f, "ex-3.4-xxry", {"prefix": "01" * n, "got": repr(res), "expected": w})
    first_of_empty = engine.jth_extension_bounded(oracle, "", 1, b["ext_len"])
    f.details = {
        "n=0": "'0' is not the first extension of the empty word "
               f"(that is {first_of_empty.word!r}); it is reached from prefix {via.get('0')!r}",
    }
    return f


@claim("ex-3.5-coprime", "Example 3.5", on_violation=DISCREPANCY, pmax=5)
def _ex_3_5(b: dict) -> Findings:
    f = Findings()
    oracle = Family("coprime").oracle()
    for p in range(2, b["pmax"] + 1):
        if not is_prime(p):
            continue
        m = math.factorial(p - 1)
        res = engine.first_extensions(oracle, "0" * m, 2, p)
        stated = ["1", "1" * p]
        entry = {"p": p, "prefix": "0" * m, "computed": res, "stated": stated}
        if res != stated:
            _violated(f, "ex-3.5-coprime", entry)
        else:
            f.witnesses.append(entry)
    f.details = {"note": "the word 01 extends 0^m to 0^(m+1)1, which is in the language "
                         "for every m and precedes 1^p for p >= 2"}
    return f


# -- padded unary construction -----------------------------------------------


@claim("lemma-4.2", "Lemma 4.2", jmax=40, nmax=120)
def _lemma_4_2(b: dict) -> Findings:
    f = Findings()
    sizes = {}
    for index in INDEX_SETS:
        oracle = padded_oracle(index)
        rows = engine.spectrum_bounded(oracle, b["jmax"], b["nmax"], b["nmax"] + 3 * b["jmax"] + 3,
                                       witnesses=True)
        for row in rows:
            if row.inconclusive_prefixes:
                f.undecided.append({"I": index.describe(), "j": row.j,
                                    "inconclusive_prefixes": row.inconclusive_prefixes})
            if row.size > 3:
                _violated(f, "lemma-4.2", {"I": index.describe(), "j": row.j,
                                           "A_j": [w for _, w in row.witnesses]})
        sizes[index.describe()] = [r.size for r in rows]
    f.details = {"sizes": sizes}
    return f


@claim("lemma-4.5", "Lemma 4.5", jmax=40, nmax=120)
def _lemma_4_5(b: dict) -> Findings:
    f = Findings()
    for index in INDEX_SETS:
        oracle = padded_oracle(index)
        for n in range(b["nmax"] + 1):
            engine_exts = engine.first_extensions(oracle, "0" * n, b["jmax"], 3 * b["jmax"] + 3)
            for j in range(1, b["jmax"] + 1):
                length = a_ext(index, n, j)
                if engine_exts[j - 1] != "0" * length:
                    _violated(f, "lemma-4.5", {"I": index.describe(), "n": n, "j": j,
                                               "a_ext": length, "engine": len(engine_exts[j - 1])})
                if length not in bcal(j):
                    _violated(f, "lemma-4.5", {"I": index.describe(), "n": n, "j": j,
                                               "extension": "0" * length,
                                               "B_j": lengths_as_words(bcal(j))})
    return f


@claim("eq-4.9", "Eq. (4.9)", jmax=200)
def _eq_4_9(b: dict) -> Findings:
    f = Findings()
    for j in range(1, b["jmax"] + 1):
        if len(bcal(j)) > 3:
            _violated(f, "eq-4.9", {"j": j, "B_j": lengths_as_words(bcal(j))})
    f.details = {"max_size": max(len(bcal(j)) for j in range(1, b["jmax"] + 1))}
    return f


# -- triangular construction -------------------------------------------------


C51 = Family("c51")


@claim("thm-5.2-lower", "Theorem 5.2", jmax=8, verify_jmax=5)
def _thm_5_2_lower(b: dict) -> Findings:
    f = Findings()
    oracle = C51.oracle()
    for j in range(1, b["jmax"] + 1):
        entries = []
        for i in range(1, j + 1):
            n = triangular(j - 1) + i
            res = engine.jth_extension_bounded(oracle, x_word(n), j, 2 * n + j + 4)
            if res != Confirmed(y_word(j, i)):
                _violated(f, "thm-5.2-lower", {"j": j, "i": i, "prefix": x_word(n),
                                               "got": repr(res), "expected": y_word(j, i)})
            else:
                entries.append((x_word(n), res.word))
        if len({w for _, w in entries}) < j:
            _violated(f, "thm-5.2-lower", {"j": j, "distinct": len({w for _, w in entries})})
        if j <= b["verify_jmax"] and len(entries) == j:
            check = verify_certificate(oracle, Certificate(j, tuple(entries), 2 * j + 2))
            if not check.ok:
                _violated(f, "thm-5.2-lower", {"j": j, "independent_check": check.problems})
        f.witnesses.append({"j": j, "entries": [list(e) for e in entries]})
    return f


@claim("thm-5.2-ext-list", "Theorem 5.2 (eqA.x)", jmax=8)
def _thm_5_2_list(b: dict) -> Findings:
    f = Findings()
    oracle = C51.oracle()
    last = triangular(b["jmax"])
    for n in range(1, last + 1):
        t_inv = triangular_inverse(n)
        predicted = c51_predicted_extensions(n)
        # ask for one more than predicted: the bound covers every member extension
        found = engine.first_extensions(oracle, x_word(n), t_inv + 1, 2 * n + t_inv + 4)
        if found != predicted:
            _violated(f, "thm-5.2-ext-list", {"n": n, "found": found, "predicted": predicted})
    f.details = {"n_checked": last}
    f.witnesses = [{"n": n, "extensions": c51_predicted_extensions(n)} for n in (1, 5, last)]
    return f


@claim("thm-5.2-decomposition", "Theorem 5.2 (eqA.x+3)-(eqA.x+7)", on_violation=DISCREPANCY,
       jmax=4, prefix_len=66, ext_len=40, tmax=10)
def _thm_5_2_decomposition(b: dict) -> Findings:
    f = Findings()
    oracle = C51.oracle()
    sizes = {}
    for s in engine.ordinal_sets_bounded(oracle, b["jmax"], b["prefix_len"], b["ext_len"], None):
        j = s.j
        predicted = {"0" * (j - 1) + "1" + y_word(1, 1)} | {y_word(j, i) for i in range(1, j + 1)}
        predicted |= c51_D(j)
        if j == 1:
            predicted.add("")
        outside = [(x, y) for x, y in s.witnesses if y not in predicted]
        sizes[j] = {"confirmed": s.size, "outside_predicted_union": len(outside)}
        for x, y in outside[:8]:
            _violated(f, "thm-5.2-decomposition",
                      {"j": j, "prefix": x, "extension": y, "prefix_class": c51_classify(x)})
    # an explicit family of distinct second extensions, one per triangular block
    family = []
    for t in range(2, b["tmax"] + 1):
        x = "0" * triangular(t) + "1" + "0" * (t - 1)
        res = engine.jth_extension_bounded(oracle, x, 2, t + 4)
        family.append({"prefix": x, "second_extension": getattr(res, "word", None),
                       "expected": "01" + "0" * t + "1"})
    f.details = {
        "per_j": sizes,
        "second_extension_family": family,
        "note": "prefixes 0^t(T) 1 0^(T-1) have second extension 0 1 0^T 1 for every T >= 2, "
                "so A^(2) is infinite",
    }
    return f


# -- universal extensions ------------------------------------------------------


KW = Family("kamae-weiss")


@claim("lemma-5.3-kw", "Lemma 5.3", jmax=4, prefix_len=10, ext_len=30)
def _lemma_5_3(b: dict) -> Findings:
    f = Findings()
    oracle = KW.oracle()
    key = BINARY.key
    for s in engine.ordinal_sets_bounded(oracle, b["jmax"], b["prefix_len"], b["ext_len"], None):
        z = kw_universal(s.j)
        late = [(x, y) for x, y in s.witnesses if key(y) > key(z)]
        for x, y in late[:8]:
            _violated(f, "lemma-5.3-kw", {"j": s.j, "prefix": x, "extension": y, "bound": z})
        if s.inconclusive_prefixes:
            f.undecided.append({"j": s.j, "inconclusive_prefixes": s.inconclusive_prefixes})
        f.witnesses.append({"j": s.j, "confirmed": s.size,
                            "largest": s.confirmed[-1] if s.confirmed else None, "bound": z})
    return f


@claim("ex-5.5-ue", "Example 5.5", nmax=3, prefix_len=10)
def _ex_5_5(b: dict) -> Findings:
    f = Findings()
    oracle = KW.oracle()
    for n in range(1, b["nmax"] + 1):
        y = kw_universal(n)
        res = engine.universal_extension_refute(oracle, y, b["prefix_len"])
        if res.refuted:
            _violated(f, "ex-5.5-ue", {"word": y, "refuted_by": res.witness})
        f.witnesses.append({"word": y, "prefixes_checked": res.checked})
    control = engine.universal_extension_refute(oracle, "11011", b["prefix_len"])
    if not control.refuted:
        _violated(f, "ex-5.5-ue", {"control": "11011", "unexpectedly": "unrefuted"})
    f.details = {"control_11011_refuted_by": control.witness}
    return f


# -- appendix identities ------------------------------------------------------------


def _subset_witness(j: int, lhs, rhs) -> dict:
    return {"j": j, "lhs": lengths_as_words(lhs), "rhs": lengths_as_words(rhs),
            "extra": lengths_as_words(set(lhs) - set(rhs))}


THREE = frozenset({3})
ONE = frozenset({1})


@claim("lemma-A.1", "Lemma A.1", jmax=60)
def _lemma_a1(b: dict) -> Findings:
    f = Findings()
    for j in range(1, b["jmax"] + 1):
        for m in (0, 1, 2):
            if m == 2 and j < 2:
                continue
            lhs, rhs = concat(bset(m, j), THREE), bset(m, j + 2)
            if lhs != rhs:
                _violated(f, "lemma-A.1", {"m": m, **_subset_witness(j, lhs, rhs)})
    return f


@claim("lemma-A.2", "Lemma A.2", jmax=60)
def _lemma_a2(b: dict) -> Findings:
    f = Findings()
    for j in range(1, b["jmax"] + 1):
        lhs = bset(0, j) | bset(1, j)
        if not lhs <= bset(2, j):
            _violated(f, "lemma-A.2", _subset_witness(j, lhs, bset(2, j)))
    return f


@claim("lemma-A.3", "Lemma A.3", on_violation=DISCREPANCY, jmax=60)
def _lemma_a3(b: dict) -> Findings:
    f = Findings()
    sub = {"A.4": PASS, "A.5": PASS, "A.6 literal (B_1)": PASS, "A.6 as used (B_0)": PASS}
    for j in range(1, b["jmax"] + 1):
        b1, b2 = bset(1, j), bset(2, j)
        if j % 2 == 0 and not concat(b1, ONE) <= b2:
            sub["A.4"] = FAIL
            f.failures.append({"part": "A.4", **_subset_witness(j, concat(b1, ONE), b2)})
        if j >= 2 and not quotient0(b1) <= b2:
            sub["A.5"] = FAIL
            f.failures.append({"part": "A.5", **_subset_witness(j, quotient0(b1), b2)})
        if not concat(bset(0, j), ONE) <= b2:
            sub["A.6 as used (B_0)"] = FAIL
            f.failures.append({"part": "A.6 B_0", **_subset_witness(j, concat(bset(0, j), ONE), b2)})
        if not concat(b1, ONE) <= b2:
            if sub["A.6 literal (B_1)"] == PASS:
                f.discrepancies.append({"part": "A.6 literal", **_subset_witness(j, concat(b1, ONE), b2)})
            sub["A.6 literal (B_1)"] = DISCREPANCY
    f.details = {"parts": sub}
    return f


@claim("obs-A.4", "Observation A.4", jmax=30, nmax=100)
def _obs_a4(b: dict) -> Findings:
    f = Findings()
    counts = {1: 0, 2: 0, 3: 0}
    for index in INDEX_SETS:
        for n in range(3, b["nmax"] + 1):
            _, d = delta_info(index, n)
            if d not in counts:
                _violated(f, "obs-A.4", {"I": index.describe(), "n": n, "delta": d})
                continue
            counts[d] += 1
            for j in range(1, b["jmax"] + 1):
                a = a_ext(index, n, j)
                if d == 1:
                    lhs, rhs = a + 1, a_ext(index, n - 1, j)
                elif d == 2:
                    lhs, rhs = a + 3, a_ext(index, n - 3, j + 2)
                else:
                    lhs, rhs = a + 2, a_ext(index, n - 2, j + 2)
                if lhs != rhs:
                    _violated(f, "obs-A.4", {"I": index.describe(), "n": n, "j": j, "delta": d,
                                             "lhs": "0" * lhs, "rhs": "0" * rhs})
    f.details = {"delta_case_counts": counts}
    return f


def _a_in_b(cid: str, ns, b: dict) -> Findings:
    f = Findings()
    for index in INDEX_SETS:
        for n in ns:
            for j in range(1, b["jmax"] + 1):
                a = a_ext(index, n, j)
                target = bset(n % 3, j)
                if a not in target:
                    _violated(f, cid, {"I": index.describe(), "n": n, "j": j,
                                       "extension": "0" * a, "B": lengths_as_words(target)})
    return f


@claim("lemma-A.5", "Lemma A.5", jmax=40)
def _lemma_a5(b: dict) -> Findings:
    return _a_in_b("lemma-A.5", [0], b)


@claim("lemma-A.6", "Lemma A.6", jmax=40)
def _lemma_a6(b: dict) -> Findings:
    return _a_in_b("lemma-A.6", [1], b)


@claim("lemma-A.7", "Lemma A.7", jmax=60)
def _lemma_a7(b: dict) -> Findings:
    f = Findings()
    for j in range(1, b["jmax"] + 1):
        lhs, rhs = bset(1, j + 1), concat(bset(2, j), ONE)
        if not lhs <= rhs:
            _violated(f, "lemma-A.7", _subset_witness(j, lhs, rhs))
    return f


@claim("lemma-A.8", "Lemma A.8", jmax=40)
def _lemma_a8(b: dict) -> Findings:
    return _a_in_b("lemma-A.8", [2], b)


@claim("eq-A.21", "Eq. (A.21)", jmax=40, nmax=120)
def _eq_a21(b: dict) -> Findings:
    return _a_in_b("eq-A.21", range(b["nmax"] + 1), b)


# -- runner -------------------------------------------------------------------------


def list_claims() -> list[tuple[str, str, dict]]:
    return [(c.id, c.anchor, dict(c.budgets)) for c in REGISTRY.values()]


def run_claim(cid: str, overrides: dict | None = None, scale: int = 1) -> ClaimResult:
    try:
        c = REGISTRY[cid]
    except KeyError:
        raise UnknownClaim(f"unknown claim id {cid!r}") from None
    if scale < 1:
        raise ValueError("scale must be >= 1")
    budgets = {k: v * scale for k, v in c.budgets.items()}
    for k, v in (overrides or {}).items():
        if k in budgets:
            budgets[k] = v
    started = time.perf_counter()
    findings = c.check(budgets)
    elapsed = time.perf_counter() - started
    witnesses = findings.failures + findings.discrepancies + findings.undecided
    if findings.status == PASS:
        witnesses = findings.witnesses
    return ClaimResult(c.id, c.anchor, findings.status, budgets, witnesses, findings.details, elapsed)


def run_all(scale: int = 1, ids=None, overrides: dict | None = None) -> tuple[list[ClaimResult], dict]:
    chosen = list(REGISTRY) if not ids else list(ids)
    for cid in chosen:
        if cid not in REGISTRY:
            raise UnknownClaim(f"unknown claim id {cid!r}")
    order = {cid: i for i, cid in enumerate(REGISTRY)}
    chosen.sort(key=order.__getitem__)
    results = [run_claim(cid, overrides, scale) for cid in chosen]
    summary = {s: sum(r.status == s for r in results) for s in STATUSES}
    return results, summary
