import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ordex.dfa import minimize
from ordex.lang import Alphabet
from ordex.regex import Concat, RegexSyntaxError, Star, Symbol, Union, parse_regex, regex_dfa
from oracles import py_regex, words


def test_parse_examples():
    assert parse_regex("(0|1)*") == Star(Union(Symbol("0"), Symbol("1")))
    assert parse_regex("0*1*") == Concat(Star(Symbol("0")), Star(Symbol("1")))


@pytest.mark.parametrize("text,offset", [("(", 0), ("0|(1", 2), ("01)", 2), ("*0", 0)])
def test_syntax_errors_report_offset(text, offset):
    with pytest.raises(RegexSyntaxError) as info:
        parse_regex(text)
    assert info.value.offset == offset


def test_symbol_outside_alphabet():
    with pytest.raises(RegexSyntaxError):
        parse_regex("012")


def test_special_atoms():
    assert minimize(regex_dfa("(0|1)*")).state_count == 1
    empty = minimize(regex_dfa("#"))
    assert empty.state_count == 1 and not empty.accepting
    eps = regex_dfa("_")
    assert eps.accepts("") and not eps.accepts("0")


def test_zero_star_one_star_membership():
    d = regex_dfa("0*1*")
    ref = py_regex("0*1*")
    for w in words("01", 6):
        assert d.accepts(w) == ref(w)
    assert not d.accepts("10")


def test_other_alphabet():
    d = regex_dfa("a(b|c)*", Alphabet("abc"))
    assert d.accepts("abcb") and not d.accepts("ba")


def _regexes():
    leaf = st.sampled_from(["0", "1", "_", "#"])
    return st.recursive(
        leaf,
        lambda inner: st.one_of(
            st.tuples(inner, inner).map(lambda p: f"({p[0]}|{p[1]})"),
            st.tuples(inner, inner).map(lambda p: p[0] + p[1]),
            inner.map(lambda r: f"({r})*"),
        ),
        max_leaves=8,
    )


@settings(max_examples=150, deadline=None)
@given(_regexes())
def test_compiled_dfa_matches_python_re(pattern):
    d = regex_dfa(pattern)
    ref = py_regex(pattern)
    for w in words("01", 6):
        assert d.accepts(w) == ref(w), (pattern, w)
