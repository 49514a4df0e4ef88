"""Ordinal extensions: j-th extensions, the sets A^(j), and their spectra.

Two routes are provided. For a :class:`~ordex.dfa.Dfa` everything is exact,
since the extensions of ``x`` depend only on the state ``x`` reaches. For an
arbitrary :class:`~ordex.lang.LanguageOracle` the engine searches extensions
in length-lex order under explicit budgets; a located j-th extension is a
proof, while a search that runs out of budget says nothing about emptiness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from ordex.dfa import Dfa, count_table, extend_count_table, minimize
from ordex.lang import LanguageOracle


@dataclass(frozen=True)
class Confirmed:
    word: str


@dataclass(frozen=True)
class Inconclusive:
    found: int


BoundedExtensionResult = Confirmed | Inconclusive


@dataclass(frozen=True)
class SpectrumRow:
    j: int
    size: int
    exact: bool
    inconclusive_prefixes: int = 0
    witnesses: tuple[tuple[str, str], ...] | None = None


def _check_j(j: int) -> None:
    if j < 1:
        raise ValueError(f"ordinals are 1-based, got j={j}")


# -- exact route -------------------------------------------------------------


def jth_word_from_state(dfa: Dfa, q: int, j: int) -> str | None:
    """The j-th word (length-lex) of the right language of ``q``, or None."""
    _check_j(j)
    n = dfa.state_count
    table = count_table(dfa, 0, j)
    if q not in dfa.infinite:
        for _ in range(n - 1):
            extend_count_table(dfa, table, j)
        if sum(row[q] for row in table) < j:
            return None
    length = 0
    seen = table[0][q]
    while seen < j:
        length += 1
        if length > n * (j + 1):
            raise AssertionError(f"length scan for state {q}, j={j} overran {n * (j + 1)}")
        if length >= len(table):
            extend_count_table(dfa, table, j)
        seen += table[length][q]
    remaining = j - (seen - table[length][q])
    word = []
    p = q
    for depth in range(length):
        rest = length - depth - 1
        for symbol, r in zip(dfa.alphabet.symbols, dfa.transitions[p]):
            c = table[rest][r]
            if remaining <= c:
                word.append(symbol)
                p = r
                break
            remaining -= c
        else:
            raise AssertionError("count table inconsistent during descent")
    return "".join(word)


def ordinal_witnesses_exact(dfa: Dfa, j: int) -> dict[str, str]:
    """Map each element of A^(j) to the length-lex least prefix producing it."""
    _check_j(j)
    key = dfa.alphabet.key
    result: dict[str, str] = {}
    for q, access in dfa.access_words.items():
        w = jth_word_from_state(dfa, q, j)
        if w is None:
            continue
        if w not in result or key(access) < key(result[w]):
            result[w] = access
    return result


def ordinal_set_exact(dfa: Dfa, j: int) -> frozenset[str]:
    return frozenset(ordinal_witnesses_exact(dfa, j))


def mn_index(dfa: Dfa) -> int:
    """Myhill-Nerode index: the state count of the minimal complete DFA."""
    return minimize(dfa).state_count


def spectrum_exact(dfa: Dfa, jmax: int, witnesses: bool = False) -> list[SpectrumRow]:
    _check_j(jmax)
    key = dfa.alphabet.key
    rows = []
    for j in range(1, jmax + 1):
        found = ordinal_witnesses_exact(dfa, j)
        wit = None
        if witnesses:
            wit = tuple(sorted(((x, w) for w, x in found.items()), key=lambda p: key(p[1])))
        rows.append(SpectrumRow(j, len(found), True, 0, wit))
    return rows


# -- bounded route -----------------------------------------------------------


def iter_extensions(oracle: LanguageOracle, x: str, ext_len: int) -> Iterator[str]:
    """Yield every y with |y| <= ext_len and x·y in the language, length-lex.

    With a ``viable`` predicate the search skips subtrees that no member can
    pass through; the output is the same as plain enumeration.
    """
    alphabet = oracle.alphabet
    member = oracle.membership
    viable = oracle.viable
    if viable is None:
        for y in alphabet.words(ext_len):
            if member(x + y):
                yield y
        return
    if not viable(x):
        return
    symbols = alphabet.symbols[::-1]
    cache: dict[str, bool] = {}

    def ok(y: str) -> bool:
        v = cache.get(y)
        if v is None:
            v = cache[y] = viable(x + y)
        return v

    for length in range(ext_len + 1):
        stack = [""]
        while stack:
            y = stack.pop()
            if len(y) == length:
                if member(x + y):
                    yield y
                continue
            for a in symbols:
                if ok(y + a):
                    stack.append(y + a)


def first_extensions(oracle: LanguageOracle, x: str, count: int, ext_len: int) -> list[str]:
    """Up to ``count`` leading extensions of ``x`` (fewer if the budget runs out)."""
    out = []
    if count < 1:
        return out
    for y in iter_extensions(oracle, x, ext_len):
        out.append(y)
        if len(out) == count:
            break
    return out


def jth_extension_bounded(oracle: LanguageOracle, x: str, j: int, ext_len: int) -> BoundedExtensionResult:
    _check_j(j)
    oracle.alphabet.check(x)
    found = first_extensions(oracle, x, j, ext_len)
    if len(found) == j:
        return Confirmed(found[-1])
    return Inconclusive(len(found))


def prefixes_lenlex(oracle: LanguageOracle, prefix_len: int) -> tuple[list[str], int]:
    """Viable prefixes of length <= prefix_len in length-lex order.

    Also returns how many prefixes were skipped as non-viable; those have no
    extensions at all, but are reported as undecided rather than empty.
    """
    symbols = oracle.alphabet.symbols
    k = len(symbols)
    viable = oracle.viable

    def subtree(depth_left: int) -> int:
        return depth_left + 1 if k == 1 else (k ** (depth_left + 1) - 1) // (k - 1)

    out: list[str] = []
    pruned = 0
    level = [""]
    for depth in range(prefix_len + 1):
        nxt = []
        for x in level:
            if viable is not None and not viable(x):
                pruned += subtree(prefix_len - depth)
                continue
            out.append(x)
            if depth < prefix_len:
                nxt.extend(x + a for a in symbols)
        level = nxt
    return out, pruned


@dataclass(frozen=True)
class BoundedOrdinalSet:
    j: int
    confirmed: tuple[str, ...]
    inconclusive_prefixes: int
    witnesses: tuple[tuple[str, str], ...]

    @property
    def size(self) -> int:
        return len(self.confirmed)


def _collect(oracle: LanguageOracle, prefixes: Iterable[str], jmax: int, ext_len: int,
             pruned: int) -> list[BoundedOrdinalSet]:
    key = oracle.alphabet.key
    best: list[dict[str, str]] = [{} for _ in range(jmax)]
    undecided = [pruned] * jmax
    for x in prefixes:
        exts = first_extensions(oracle, x, jmax, ext_len)
        for i, y in enumerate(exts):
            seen = best[i]
            if y not in seen or key(x) < key(seen[y]):
                seen[y] = x
        for i in range(len(exts), jmax):
            undecided[i] += 1
    out = []
    for i in range(jmax):
        pairs = sorted(((x, y) for y, x in best[i].items()), key=lambda p: key(p[1]))
        out.append(BoundedOrdinalSet(i + 1, tuple(y for _, y in pairs), undecided[i], tuple(pairs)))
    return out


def ordinal_set_bounded(oracle: LanguageOracle, j: int, prefix_len: int, ext_len: int,
                        prefixes: Sequence[str] | None = None) -> BoundedOrdinalSet:
    """Confirmed elements of A^(j) over prefixes of length <= prefix_len.

    Pass ``prefixes`` to restrict to an explicit prefix set B instead, which
    yields the confirmed part of A_B^(j).
    """
    _check_j(j)
    return ordinal_sets_bounded(oracle, j, prefix_len, ext_len, prefixes)[j - 1]


def ordinal_sets_bounded(oracle: LanguageOracle, jmax: int, prefix_len: int, ext_len: int,
                         prefixes: Sequence[str] | None = None) -> list[BoundedOrdinalSet]:
    """Bounded A^(1), ..., A^(jmax) from a single pass over the prefixes."""
    _check_j(jmax)
    if prefixes is None:
        xs, pruned = prefixes_lenlex(oracle, prefix_len)
    else:
        xs = [oracle.alphabet.check(x) for x in prefixes]
        pruned = 0
    return _collect(oracle, xs, jmax, ext_len, pruned)


def spectrum_bounded(oracle: LanguageOracle, jmax: int, prefix_len: int, ext_len: int,
                     witnesses: bool = False,
                     prefixes: Sequence[str] | None = None) -> list[SpectrumRow]:
    _check_j(jmax)
    return [
        SpectrumRow(s.j, s.size, False, s.inconclusive_prefixes, s.witnesses if witnesses else None)
        for s in ordinal_sets_bounded(oracle, jmax, prefix_len, ext_len, prefixes)
    ]


# -- certificates and universal extensions -----------------------------------


@dataclass(frozen=True)
class Certificate:
    """j-th extensions of several prefixes that are pairwise distinct.

    k valid entries force at least k Myhill-Nerode classes, so every DFA for
    the language needs at least k states.
    """

    j: int
    entries: tuple[tuple[str, str], ...]
    ext_search_bound: int
    language: str = ""

    @property
    def classes(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class CertificationFailure:
    k: int
    best_j: int
    best_count: int
    jmax: int


def certify_nonregular(oracle: LanguageOracle, k: int, jmax: int, prefix_len: int,
                       ext_len: int) -> Certificate | CertificationFailure:
    if k < 2:
        raise ValueError("a certificate needs k >= 2")
    _check_j(jmax)
    xs, _ = prefixes_lenlex(oracle, prefix_len)
    best_j, best_count = 1, 0
    for j in range(1, jmax + 1):
        entries: list[tuple[str, str]] = []
        seen = set()
        for x in xs:
            found = first_extensions(oracle, x, j, ext_len)
            if len(found) < j or found[-1] in seen:
                continue
            seen.add(found[-1])
            entries.append((x, found[-1]))
            if len(entries) == k:
                return Certificate(j, tuple(entries), ext_len, oracle.name)
        if len(entries) > best_count:
            best_j, best_count = j, len(entries)
    return CertificationFailure(k, best_j, best_count, jmax)


@dataclass(frozen=True)
class UERefutation:
    refuted: bool
    witness: str | None
    checked: int


def universal_extension_refute(oracle: LanguageOracle, y: str, prefix_len: int) -> UERefutation:
    """Least x (length-lex, |x| <= prefix_len) with x·y outside the language.

    Surviving the scan is not a proof that y is a universal extension.
    """
    oracle.alphabet.check(y)
    checked = 0
    for x in oracle.alphabet.words(prefix_len):
        checked += 1
        if not oracle.membership(x + y):
            return UERefutation(True, x, checked)
    return UERefutation(False, None, checked)
