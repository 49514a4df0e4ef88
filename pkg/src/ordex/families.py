"""Executable versions of the concrete languages and set recursions.

Unary sets of words ``{0^n : n in S}`` are represented by their length sets
(``frozenset[int]``); concatenation of unary sets is elementwise addition.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator
from urllib.parse import parse_qsl

from ordex.lang import BINARY, UNARY, Alphabet, LanguageOracle

LengthSet = frozenset  # frozenset[int]

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def pseudo_member(n: int, seed: int) -> bool:
    v = (n * 2654435761 + seed) % (1 << 32)
    return bin(v).count("1") % 2 == 1


@dataclass(frozen=True)
class IndexSet:
    """A set of naturals: evens, odds, primes, an explicit list, or pseudorandom.

    ``limit`` optionally truncates the set to elements <= limit.
    """

    kind: str
    values: tuple[int, ...] = ()
    seed: int = 0
    limit: int | None = None

    KINDS = ("evens", "odds", "primes", "list", "pseudo")

    def __post_init__(self) -> None:
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown index set kind {self.kind!r}; expected one of {self.KINDS}")
        if self.kind == "list":
            object.__setattr__(self, "values", tuple(sorted(set(self.values))))
            if any(v < 0 for v in self.values):
                raise ValueError("index sets hold naturals")

    def __contains__(self, n: int) -> bool:
        if n < 0 or (self.limit is not None and n > self.limit):
            return False
        if self.kind == "evens":
            return n % 2 == 0
        if self.kind == "odds":
            return n % 2 == 1
        if self.kind == "primes":
            return is_prime(n)
        if self.kind == "list":
            return n in self._members
        return pseudo_member(n, self.seed)

    @property
    def _members(self) -> frozenset[int]:
        return _list_members(self.values)

    @property
    def maximum(self) -> int | None:
        """Largest element, or None when the set is infinite."""
        if self.kind == "list":
            top = [v for v in self.values if self.limit is None or v <= self.limit]
            return top[-1] if top else -1
        if self.limit is not None:
            return next((n for n in range(self.limit, -1, -1) if n in self), -1)
        return None

    def elements(self, bound: int) -> Iterator[int]:
        for n in range(bound + 1):
            if n in self:
                yield n

    def successor(self, n: int, search: int = 1 << 16) -> int | None:
        """Least element greater than n, or None if none exists (or none within ``search``)."""
        top = self.maximum
        stop = n + search if top is None else top
        for m in range(n + 1, stop + 1):
            if m in self:
                return m
        return None

    def describe(self) -> str:
        if self.kind == "list":
            text = "I=list&values=" + ",".join(map(str, self.values))
        elif self.kind == "pseudo":
            text = f"I=pseudo&seed={self.seed}"
        else:
            text = f"I={self.kind}"
        if self.limit is not None:
            text += f"&max={self.limit}"
        return text


@lru_cache(maxsize=64)
def _list_members(values: tuple[int, ...]) -> frozenset[int]:
    return frozenset(values)


EVENS = IndexSet("evens")
PRIMES = IndexSet("primes")


def gaps(index: IndexSet, bound: int | None = None) -> set[int]:
    """{succ(n) - n : n in I, succ(n) <= bound}, succ being the next element of I."""
    if bound is None:
        top = index.maximum
        if top is None:
            raise ValueError("an unbounded gap computation needs a bound")
        bound = top
    members = list(index.elements(bound))
    return {b - a for a, b in zip(members, members[1:])}


# -- the padded unary construction ------------------------------------------


def iprime_membership(index: IndexSet, n: int) -> bool:
    """Membership in {3i} ∪ {3i+1 : i in I} ∪ {3i+2 : i not in I}."""
    i, r = divmod(n, 3)
    if r == 0:
        return True
    return (i in index) == (r == 1)


def delta_info(index: IndexSet, n: int) -> tuple[frozenset[int], int]:
    if n < 3:
        raise ValueError(f"delta window needs n >= 3, got {n}")
    window = frozenset(k for k in range(n - 3, n) if iprime_membership(index, k))
    return window, len(window)


def a_ext(index: IndexSet, n: int, j: int) -> int:
    """Length of the j-th extension of 0^n in the padded unary language."""
    if j < 1:
        raise ValueError("ordinals are 1-based")
    limit = n + 3 * j + 3
    count = 0
    k = n
    while True:
        if iprime_membership(index, k):
            count += 1
            if count == j:
                return k - n
        k += 1
        # every multiple of 3 is a member, so gaps never exceed 3
        assert k <= limit, f"scan for a_ext(n={n}, j={j}) passed {limit}"


def padded_oracle(index: IndexSet) -> LanguageOracle:
    return LanguageOracle(
        UNARY,
        f"family:c41?{index.describe()}",
        lambda w: iprime_membership(index, len(w)),
    )


def concat(a: frozenset[int], b: frozenset[int]) -> frozenset[int]:
    return frozenset(x + y for x in a for y in b)


def quotient0(a: frozenset[int]) -> frozenset[int]:
    """B/0 = {y : y0 in B}."""
    return frozenset(x - 1 for x in a if x >= 1)


@lru_cache(maxsize=None)
def bset(m: int, j: int) -> frozenset[int]:
    """Lengths of the words in the three-way recursive family B_m^j."""
    if m not in (0, 1, 2):
        raise ValueError(f"m must be 0, 1 or 2, got {m}")
    if j < 1:
        raise ValueError("j must be positive")
    if m == 0:
        if j == 1:
            return frozenset({0})
        if j % 2 == 0:
            return concat(bset(0, j - 1), frozenset({1, 2}))
        return concat(bset(0, j - 2), frozenset({3}))
    if m == 1:
        if j == 1:
            return frozenset({0, 1})
        if j == 2:
            return frozenset({2})
        if j % 2 == 0:
            return concat(bset(1, j - 2), frozenset({3}))
        return concat(bset(1, j - 1), frozenset({1, 2}))
    if j == 1:
        return frozenset({0, 1})
    if j == 2:
        return frozenset({1, 2, 3})
    if j % 2 == 0:
        return concat(bset(2, j - 1), frozenset({2}))
    return concat(bset(2, j - 1), frozenset({1}))


def bcal(j: int) -> frozenset[int]:
    return bset(2, j)


# -- triangular construction -----------------------------------------------


def triangular(j: int) -> int:
    if j < 0:
        raise ValueError("triangular numbers are indexed by naturals")
    return j * (j + 1) // 2


def triangular_inverse(n: int) -> int:
    """The unique j with t(j-1) < n <= t(j)."""
    if n < 1:
        raise ValueError(f"triangular_inverse needs n >= 1, got {n}")
    j = (math.isqrt(8 * n + 1) - 1) // 2
    if triangular(j) < n:
        j += 1
    return j


def x_word(n: int) -> str:
    return "0" * n + "1"


def y_word(m: int, k: int) -> str:
    return x_word(m) + x_word(k)


@lru_cache(maxsize=4096)
def c51_head_members(n: int) -> tuple[str, ...]:
    """Every member that starts with 0^n 1, in length-lex order.

    Because {0^n 1} is a prefix set these are exactly the members extending
    0^n 1; there are t^{-1}(n) of them.
    """
    t_inv = triangular_inverse(n)
    head = x_word(n)
    words = [head + y_word(m, 1) for m in range(1, t_inv)]
    words.append(head + y_word(t_inv, n - triangular(t_inv - 1)))
    return tuple(words)


_C51_SHAPE = re.compile(r"(0+)1(0+)1(0+)1")


def c51_membership(w: str) -> bool:
    match = _C51_SHAPE.fullmatch(w)
    if not match:
        return False
    n, m, k = (len(g) for g in match.groups())
    t_inv = triangular_inverse(n)
    in_b = m == t_inv and k == n - triangular(t_inv - 1)
    in_c = k == 1 and m < t_inv
    return in_b or in_c


def _c51_head(x: str) -> int | None:
    """n such that x starts with 0^n 1 (n >= 1), else None."""
    n = x.find("1")
    return n if n >= 1 else None


def c51_viable(x: str) -> bool:
    n = x.find("1")
    if n == -1:
        return True
    if n == 0:
        return False
    return any(w.startswith(x) for w in c51_head_members(n))


def c51_predicted_extensions(n: int) -> list[str]:
    t_inv = triangular_inverse(n)
    out = [y_word(m, 1) for m in range(1, t_inv)]
    out.append(y_word(t_inv, n - triangular(t_inv - 1)))
    return out


ZERO_STAR, IN_A, IN_X, IN_Y, IN_Z = "ZeroStar", "InA", "InX", "InY", "InZ"


def c51_classify(x: str) -> str:
    """Place x in the first of 0*, A, X, Y, Z (in that priority) containing it.

    Membership in Y is decided exactly: a member extending a word that starts
    with 0^n 1 has length at most 2n + t^{-1}(n) + 4, and those members are
    enumerated in full by :func:`c51_head_members`.
    """
    BINARY.check(x)
    if "1" not in x:
        return ZERO_STAR
    if c51_membership(x):
        return IN_A
    n = _c51_head(x)
    if n is not None and x == x_word(n):
        return IN_X
    if n is not None:
        bound = 2 * n + triangular_inverse(n) + 4
        for w in c51_head_members(n):
            assert len(w) <= bound
            if len(x) < len(w) and w.startswith(x):
                return IN_Y
    return IN_Z


def c51_D(j: int) -> frozenset[str]:
    """Nonempty proper prefixes of x_r x_s for 1 <= r, s <= j."""
    if j < 1:
        raise ValueError("j must be positive")
    out = set()
    for r in range(1, j + 1):
        for s in range(1, j + 1):
            w = y_word(r, s)
            out.update(w[:i] for i in range(1, len(w)))
    return frozenset(out)


# -- Kamae-Weiss ---------------------------------------------------------------


def kw_membership(w: str) -> bool:
    """w = u 11 0^n 1 0^n for some word u and n >= 1."""
    body = w.rstrip("0")
    n = len(w) - len(body)
    if n == 0 or not body.endswith("1"):
        return False
    body = body[:-1]
    rest = body.rstrip("0")
    return len(body) - len(rest) == n and rest.endswith("11")


def kw_universal(n: int) -> str:
    if n < 1:
        raise ValueError("n must be positive")
    return "11010" * n


# -- the remaining example languages --------------------------------------------


_ZEROS_ONES = re.compile(r"(0*)(1*)")


def eq_count_membership(w: str) -> bool:
    m = _ZEROS_ONES.fullmatch(w)
    return bool(m) and len(m.group(1)) == len(m.group(2))


def eq_count_viable(x: str) -> bool:
    m = _ZEROS_ONES.fullmatch(x)
    return bool(m) and len(m.group(2)) <= len(m.group(1))


def palindrome_membership(w: str) -> bool:
    return w == w[::-1]


def xxry_membership(w: str) -> bool:
    """w = x x^R y with x, y nonempty."""
    for i in range(1, (len(w) - 1) // 2 + 1):
        head = w[: 2 * i]
        if head == head[::-1]:
            return True
    return False


def coprime_membership(w: str) -> bool:
    m = _ZEROS_ONES.fullmatch(w)
    if not m:
        return False
    a, b = len(m.group(1)), len(m.group(2))
    return a >= 1 and b >= 1 and math.gcd(a, b) == 1


def coprime_viable(x: str) -> bool:
    # gcd(m, m*k + 1) = 1, so any 0^m 1^n with m >= 1 still extends
    m = _ZEROS_ONES.fullmatch(x)
    return bool(m) and (x == "" or x[0] == "0")


def zeros_oracle(index: IndexSet) -> LanguageOracle:
    top = index.maximum

    def viable(x: str) -> bool:
        return top is None or len(x) <= top

    return LanguageOracle(
        UNARY, f"family:zeros?{index.describe()}", lambda w: len(w) in index, viable
    )


# -- family identifiers -------------------------------------------------------


FAMILY_DOCS = {
    "eq-count": "{0^n 1^n : n >= 0} over {0,1}",
    "palindrome": "binary palindromes",
    "zeros": "{0^n : n in I} over {0}; parameters I=..., optional max=N",
    "xxry": "{x x^R y : x, y nonempty} over {0,1}",
    "coprime": "{0^m 1^n : m, n >= 1, gcd(m, n) = 1} over {0,1}",
    "c41": "{0^n : n in I'} over {0}, I' = 3N ∪ (3I+1) ∪ (3(N\\I)+2); parameter I=...",
    "c51": "triangular construction 0^n 1 0^m 1 0^k 1 over {0,1}",
    "kamae-weiss": "{u 11 0^n 1 0^n : n >= 1} over {0,1}",
}

INDEX_DOCS = (
    "I=evens | I=odds | I=primes | I=pseudo&seed=S | I=list&values=a,b,c ; "
    "append &max=N to truncate"
)


@dataclass(frozen=True)
class Family:
    name: str
    index: IndexSet | None = None

    def __post_init__(self) -> None:
        if self.name not in FAMILY_DOCS:
            raise ValueError(f"unknown family {self.name!r}")
        if self.name in ("zeros", "c41") and self.index is None:
            raise ValueError(f"family {self.name!r} needs an index set")

    @property
    def alphabet(self) -> Alphabet:
        return UNARY if self.name in ("zeros", "c41") else BINARY

    def spec(self) -> str:
        if self.index is None:
            return f"family:{self.name}"
        return f"family:{self.name}?{self.index.describe()}"

    def oracle(self) -> LanguageOracle:
        name = self.spec()
        if self.name == "eq-count":
            return LanguageOracle(BINARY, name, eq_count_membership, eq_count_viable)
        if self.name == "palindrome":
            return LanguageOracle(BINARY, name, palindrome_membership)
        if self.name == "zeros":
            return zeros_oracle(self.index)
        if self.name == "xxry":
            return LanguageOracle(BINARY, name, xxry_membership)
        if self.name == "coprime":
            return LanguageOracle(BINARY, name, coprime_membership, coprime_viable)
        if self.name == "c41":
            return padded_oracle(self.index)
        if self.name == "c51":
            return LanguageOracle(BINARY, name, c51_membership, c51_viable)
        return LanguageOracle(BINARY, name, kw_membership)


def family_membership(family: Family, w: str) -> bool:
    oracle = family.oracle()
    oracle.alphabet.check(w)
    return oracle.membership(w)


def parse_index_set(params: dict[str, str], default: str = "primes") -> IndexSet:
    kind = params.get("I", default)
    limit = int(params["max"]) if "max" in params else None
    if kind == "list":
        raw = params.get("values", "")
        values = tuple(int(v) for v in raw.split(",") if v.strip())
        return IndexSet("list", values, limit=limit)
    if kind == "pseudo":
        return IndexSet("pseudo", seed=int(params.get("seed", "0")), limit=limit)
    return IndexSet(kind, limit=limit)


def parse_family(text: str) -> Family:
    """Parse ``name[?k=v&...]`` (without the ``family:`` scheme)."""
    name, _, query = text.partition("?")
    params = dict(parse_qsl(query, keep_blank_values=True))
    if name not in FAMILY_DOCS:
        raise ValueError(f"unknown family {name!r}; known: {', '.join(FAMILY_DOCS)}")
    index = parse_index_set(params) if name in ("zeros", "c41") else None
    unknown = set(params) - ({"I", "values", "seed", "max"} if index else set())
    if unknown:
        raise ValueError(f"unexpected parameters for family {name!r}: {sorted(unknown)}")
    return Family(name, index)
