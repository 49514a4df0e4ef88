"""Regular expressions: parsing and compilation to complete DFAs.

Grammar::

    expr   := term ('|' term)*
    term   := factor+
    factor := atom '*'*
    atom   := symbol | '_' | '#' | '(' expr ')'

``_`` denotes the empty word and ``#`` the empty language.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Union as _U

from ordex.dfa import Dfa
from ordex.lang import BINARY, Alphabet

RESERVED = "|*()_#"


class RegexSyntaxError(ValueError):
    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


@dataclass(frozen=True)
class EmptyLang:
    pass


@dataclass(frozen=True)
class Epsilon:
    pass


@dataclass(frozen=True)
class Symbol:
    symbol: str


@dataclass(frozen=True)
class Union:
    left: "RegexAst"
    right: "RegexAst"


@dataclass(frozen=True)
class Concat:
    left: "RegexAst"
    right: "RegexAst"


@dataclass(frozen=True)
class Star:
    child: "RegexAst"


RegexAst = _U[EmptyLang, Epsilon, Symbol, Union, Concat, Star]


class _Parser:
    def __init__(self, text: str, alphabet: Alphabet) -> None:
        self.text = text
        self.alphabet = alphabet
        self.pos = 0

    def peek(self) -> str | None:
        return self.text[self.pos] if self.pos < len(self.text) else None

    def parse(self) -> RegexAst:
        ast = self.expr()
        if self.pos < len(self.text):
            raise RegexSyntaxError(f"unexpected {self.text[self.pos]!r}", self.pos)
        return ast

    def expr(self) -> RegexAst:
        node = self.term()
        while self.peek() == "|":
            self.pos += 1
            node = Union(node, self.term())
        return node

    def term(self) -> RegexAst:
        c = self.peek()
        if c is None or c in "|)*":
            what = "end of input" if c is None else repr(c)
            raise RegexSyntaxError(f"expected an atom, found {what}", self.pos)
        node = self.factor()
        while (c := self.peek()) is not None and c not in "|)":
            node = Concat(node, self.factor())
        return node

    def factor(self) -> RegexAst:
        node = self.atom()
        while self.peek() == "*":
            self.pos += 1
            node = Star(node)
        return node

    def atom(self) -> RegexAst:
        c = self.peek()
        start = self.pos
        if c == "(":
            self.pos += 1
            if self.peek() is None:
                raise RegexSyntaxError("unbalanced '('", start)
            node = self.expr()
            if self.peek() != ")":
                raise RegexSyntaxError("unbalanced '('", start)
            self.pos += 1
            return node
        if c == "*":
            raise RegexSyntaxError("'*' with nothing to repeat", start)
        if c is None or c in "|)":
            what = "end of input" if c is None else repr(c)
            raise RegexSyntaxError(f"expected an atom, found {what}", start)
        self.pos += 1
        if c == "_":
            return Epsilon()
        if c == "#":
            return EmptyLang()
        if c not in self.alphabet:
            raise RegexSyntaxError(
                f"symbol {c!r} not in alphabet {self.alphabet.symbols!r}", start
            )
        return Symbol(c)


def parse_regex(text: str, alphabet: Alphabet = BINARY) -> RegexAst:
    return _Parser(text, alphabet).parse()


class _Nfa:
    """Thompson NFA; edges labelled with a symbol index or None for epsilon."""

    def __init__(self) -> None:
        self.edges: list[list[tuple[int | None, int]]] = []

    def new(self) -> int:
        self.edges.append([])
        return len(self.edges) - 1

    def build(self, ast: RegexAst, alphabet: Alphabet) -> tuple[int, int]:
        s, f = self.new(), self.new()
        if isinstance(ast, EmptyLang):
            pass
        elif isinstance(ast, Epsilon):
            self.edges[s].append((None, f))
        elif isinstance(ast, Symbol):
            self.edges[s].append((alphabet.index(ast.symbol), f))
        elif isinstance(ast, Union):
            for child in (ast.left, ast.right):
                cs, cf = self.build(child, alphabet)
                self.edges[s].append((None, cs))
                self.edges[cf].append((None, f))
        elif isinstance(ast, Concat):
            ls, lf = self.build(ast.left, alphabet)
            rs, rf = self.build(ast.right, alphabet)
            self.edges[s].append((None, ls))
            self.edges[lf].append((None, rs))
            self.edges[rf].append((None, f))
        elif isinstance(ast, Star):
            cs, cf = self.build(ast.child, alphabet)
            self.edges[s] += [(None, cs), (None, f)]
            self.edges[cf] += [(None, cs), (None, f)]
        else:
            raise TypeError(f"not a regex node: {ast!r}")
        return s, f

    def closure(self, states) -> frozenset[int]:
        seen = set(states)
        stack = list(states)
        while stack:
            q = stack.pop()
            for label, r in self.edges[q]:
                if label is None and r not in seen:
                    seen.add(r)
                    stack.append(r)
        return frozenset(seen)


def compile_regex(ast: RegexAst, alphabet: Alphabet = BINARY) -> Dfa:
    """Thompson construction followed by the subset construction.

    The empty subset becomes an explicit dead state, so the result is total.
    """
    nfa = _Nfa()
    start, final = nfa.build(ast, alphabet)
    k = len(alphabet)
    first = nfa.closure([start])
    ids = {first: 0}
    queue = deque([first])
    rows: list[list[int]] = []
    while queue:
        subset = queue.popleft()
        row = []
        for a in range(k):
            moved = [r for q in subset for label, r in nfa.edges[q] if label == a]
            target = nfa.closure(moved)
            if target not in ids:
                ids[target] = len(ids)
                queue.append(target)
            row.append(ids[target])
        rows.append(row)
    accepting = frozenset(i for subset, i in ids.items() if final in subset)
    return Dfa(alphabet, tuple(tuple(r) for r in rows), 0, accepting)


def regex_dfa(text: str, alphabet: Alphabet = BINARY) -> Dfa:
    return compile_regex(parse_regex(text, alphabet), alphabet)
