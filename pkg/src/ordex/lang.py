"""Alphabets, words and the length-lexicographic order.

Words are plain ``str`` values whose characters are alphabet symbols; the
empty string is the empty word. The alphabet fixes the symbol order that the
length-lex order is built on.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterator

LESS, EQUAL, GREATER = -1, 0, 1


class AlphabetError(ValueError):
    """A word uses a symbol outside the alphabet it is checked against."""


@dataclass(frozen=True)
class Alphabet:
    symbols: str
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        if not self.symbols:
            raise ValueError("alphabet must be nonempty")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError(f"alphabet {self.symbols!r} has duplicate symbols")
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(self.symbols)})

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __contains__(self, symbol: object) -> bool:
        return symbol in self._index

    def index(self, symbol: str) -> int:
        try:
            return self._index[symbol]
        except KeyError:
            raise AlphabetError(f"symbol {symbol!r} not in alphabet {self.symbols!r}") from None

    def indices(self, word: str) -> tuple[int, ...]:
        return tuple(self.index(s) for s in word)

    def check(self, word: str) -> str:
        for s in word:
            if s not in self._index:
                raise AlphabetError(f"word {word!r} uses symbol {s!r} outside alphabet {self.symbols!r}")
        return word

    def key(self, word: str) -> tuple[int, tuple[int, ...]]:
        """Sort key realizing length-lex order."""
        return len(word), self.indices(word)

    def words_of_length(self, length: int) -> Iterator[str]:
        for combo in itertools.product(self.symbols, repeat=length):
            yield "".join(combo)

    def words(self, max_length: int | None = None) -> Iterator[str]:
        """All words in length-lex order, up to ``max_length`` if given."""
        for length in itertools.count():
            if max_length is not None and length > max_length:
                return
            yield from self.words_of_length(length)

    def rank(self, word: str) -> int:
        """1-based position of ``word`` in length-lex order (the empty word is 1)."""
        k = len(self.symbols)
        n = len(word)
        if k == 1:
            self.check(word)
            return n + 1
        shorter = (k**n - 1) // (k - 1)
        value = 0
        for i in self.indices(word):
            value = value * k + i
        return shorter + value + 1

    def unrank(self, i: int) -> str:
        """Inverse of :meth:`rank`."""
        if i < 1:
            raise ValueError(f"ordinals are 1-based, got {i}")
        k = len(self.symbols)
        if k == 1:
            return self.symbols * (i - 1)
        i -= 1
        n = 0
        while i >= k**n:
            i -= k**n
            n += 1
        digits = []
        for _ in range(n):
            i, d = divmod(i, k)
            digits.append(self.symbols[d])
        return "".join(reversed(digits))


BINARY = Alphabet("01")
UNARY = Alphabet("0")


def compare_lenlex(u: str, v: str, alphabet: Alphabet = BINARY) -> int:
    """Return LESS, EQUAL or GREATER comparing ``u`` with ``v``."""
    ku, kv = alphabet.key(u), alphabet.key(v)
    if ku < kv:
        return LESS
    return EQUAL if ku == kv else GREATER


def lenlex_sorted(words, alphabet: Alphabet = BINARY) -> list[str]:
    return sorted(words, key=alphabet.key)


@dataclass(frozen=True)
class LanguageOracle:
    """Membership predicate for a decidable language.

    ``viable`` is an optional exact-or-optimistic prefix test: it may return
    False only when no member of the language starts with the given word.
    Engines use it to prune enumeration; it never changes their answers.
    Both callables must be pure.
    """

    alphabet: Alphabet
    name: str
    membership: Callable[[str], bool]
    viable: Callable[[str], bool] | None = None

    def __contains__(self, word: str) -> bool:
        return self.membership(word)


def empty_language(alphabet: Alphabet = BINARY) -> LanguageOracle:
    return LanguageOracle(alphabet, "empty", lambda w: False, lambda w: False)
