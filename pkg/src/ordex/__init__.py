"""Ordinal extensions of formal languages and nonregularity certificates."""

from ordex.dfa import Dfa, minimize
from ordex.engine import (
    certify_nonregular,
    jth_word_from_state,
    mn_index,
    ordinal_set_bounded,
    ordinal_set_exact,
    spectrum_bounded,
    spectrum_exact,
)
from ordex.lang import BINARY, UNARY, Alphabet, LanguageOracle
from ordex.regex import regex_dfa

__all__ = [
    "Alphabet", "BINARY", "UNARY", "LanguageOracle", "Dfa", "minimize", "regex_dfa",
    "jth_word_from_state", "mn_index", "ordinal_set_exact", "ordinal_set_bounded",
    "spectrum_exact", "spectrum_bounded", "certify_nonregular",
]
