import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ordex import engine
from ordex.dfa import (
    Dfa,
    DfaFormatError,
    dfa_from_json,
    load_dfa,
    minimize,
    residual_count,
    residual_is_infinite,
    residual_state,
)
from ordex.harness import random_dfa
from ordex.lang import BINARY
from ordex.regex import regex_dfa
from oracles import residual_classes, words


def _dead(d: Dfa) -> int:
    return next(q for q in range(d.state_count) if q not in d.live)


def test_minimize_zero_star_one_star():
    m = minimize(regex_dfa("0*1*"))
    assert m.state_count == 3
    ref = residual_classes(m.accepts, "01", 4, 6)
    assert ref == 3


def test_residual_state_examples():
    d = minimize(regex_dfa("0*1*"))
    assert residual_state(d, "") == d.start
    q1 = residual_state(d, "1")
    for y in ["", "0", "1", "00", "01", "10", "11"]:
        assert (d.run(y, q1) in d.accepting) == (set(y) <= {"1"})
    assert residual_state(d, "10") == _dead(d)


def test_residual_count_examples():
    d = regex_dfa("0*1*")
    assert residual_count(d, d.start, 2, 100) == 3
    u = regex_dfa("(0|1)*")
    assert residual_count(u, u.start, 3, 5) == 5
    m = minimize(d)
    dead = _dead(m)
    assert all(residual_count(m, dead, n, 9) == 0 for n in range(6))


def test_residual_is_infinite_examples():
    d = minimize(regex_dfa("0*1*"))
    assert residual_is_infinite(d, d.start)
    assert not residual_is_infinite(d, _dead(d))
    s = regex_dfa("01")
    assert not residual_is_infinite(s, s.start)


def test_mn_index_examples():
    assert engine.mn_index(regex_dfa("0*1*")) == 3
    assert engine.mn_index(regex_dfa("(0|1)*11")) == 3
    assert engine.mn_index(regex_dfa("_")) == 2


def test_load_rejects_partial_table(tmp_path):
    data = {"alphabet": "01", "states": 2, "start": 0, "accepting": [1],
            "transitions": [[1, None], [1, 1]]}
    with pytest.raises(DfaFormatError):
        dfa_from_json(data)
    d, report = dfa_from_json(data, auto_complete=True)
    assert report.auto_completed and report.dead_state == 2 and report.filled == 1
    assert d.accepts("0") and not d.accepts("1")
    path = tmp_path / "d.json"
    path.write_text(json.dumps(d.to_json()))
    again, report = load_dfa(path)
    assert again == d and not report.auto_completed


@pytest.mark.parametrize("bad", [
    {"alphabet": "01", "states": 1, "start": 3, "accepting": [], "transitions": [[0, 0]]},
    {"alphabet": "01", "states": 1, "start": 0, "accepting": [], "transitions": [[0]]},
    {"alphabet": "01", "states": 1, "start": 0, "accepting": [], "transitions": [[0, 7]]},
    {"alphabet": "01", "start": 0, "accepting": [], "transitions": [[0, 0]]},
])
def test_malformed_files(bad):
    with pytest.raises(DfaFormatError):
        dfa_from_json(bad)


dfas = st.builds(lambda seed, n: random_dfa(random.Random(seed), n),
                 st.integers(0, 10**9), st.integers(1, 6))


@settings(max_examples=100, deadline=None)
@given(dfas)
def test_minimize_preserves_language(d):
    m = minimize(d)
    assert m.state_count <= d.state_count
    for w in words("01", 7):
        assert m.accepts(w) == d.accepts(w)
    assert minimize(m) == m


@settings(max_examples=60, deadline=None)
@given(dfas)
def test_minimal_size_matches_brute_force_classes(d):
    # with at most 6 states, words of length <= 5 reach and separate every class
    assert engine.mn_index(d) == residual_classes(d.accepts, "01", 5, 5)


@settings(max_examples=100, deadline=None)
@given(dfas, st.integers(0, 6), st.integers(1, 20))
def test_residual_count_vs_brute_force(d, length, cap):
    for q, x in d.access_words.items():
        true = sum(d.accepts(x + "".join(y)) for y in words("01", length) if len(y) == length)
        assert residual_count(d, q, length, cap) == min(true, cap)


@settings(max_examples=100, deadline=None)
@given(dfas)
def test_residual_is_infinite_vs_long_words(d):
    # an n-state residual is infinite iff it has a member of length in [n, 2n)
    n = d.state_count
    for q, x in d.access_words.items():
        long_member = any(d.accepts(x + y) for y in words("01", 2 * n - 1) if len(y) >= n)
        assert residual_is_infinite(d, q) == long_member


def test_transitions_must_be_total():
    with pytest.raises(ValueError):
        Dfa(BINARY, ((0,),), 0, frozenset())
