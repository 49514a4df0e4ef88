"""Complete deterministic automata and residual (right-language) analytics."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

from ordex.lang import Alphabet, LanguageOracle


class DfaFormatError(ValueError):
    pass


@dataclass(frozen=True)
class Dfa:
    alphabet: Alphabet
    transitions: tuple[tuple[int, ...], ...]
    start: int
    accepting: frozenset[int]

    def __post_init__(self) -> None:
        n = len(self.transitions)
        if n == 0:
            raise ValueError("a DFA needs at least one state")
        if not 0 <= self.start < n:
            raise ValueError(f"start state {self.start} out of range [0, {n})")
        for q in self.accepting:
            if not 0 <= q < n:
                raise ValueError(f"accepting state {q} out of range [0, {n})")
        k = len(self.alphabet)
        for q, row in enumerate(self.transitions):
            if len(row) != k:
                raise ValueError(f"state {q} has {len(row)} transitions, expected {k}")
            for r in row:
                if not 0 <= r < n:
                    raise ValueError(f"transition from state {q} to {r} out of range")

    @property
    def state_count(self) -> int:
        return len(self.transitions)

    def step(self, q: int, symbol: str) -> int:
        return self.transitions[q][self.alphabet.index(symbol)]

    def run(self, word: str, q: int | None = None) -> int:
        if q is None:
            q = self.start
        table = self.transitions
        index = self.alphabet.index
        for s in word:
            q = table[q][index(s)]
        return q

    def accepts(self, word: str) -> bool:
        return self.run(word) in self.accepting

    @cached_property
    def reachable(self) -> tuple[int, ...]:
        """Reachable states in BFS order (symbols tried in alphabet order)."""
        return tuple(self.access_words)

    @cached_property
    def access_words(self) -> dict[int, str]:
        """Length-lex least word reaching each reachable state."""
        words = {self.start: ""}
        queue = deque([self.start])
        while queue:
            q = queue.popleft()
            for a, r in zip(self.alphabet.symbols, self.transitions[q]):
                if r not in words:
                    words[r] = words[q] + a
                    queue.append(r)
        return words

    @cached_property
    def live(self) -> frozenset[int]:
        """States from which some accepting state is reachable."""
        preds: list[set[int]] = [set() for _ in range(self.state_count)]
        for q, row in enumerate(self.transitions):
            for r in row:
                preds[r].add(q)
        seen = set(self.accepting)
        stack = list(self.accepting)
        while stack:
            r = stack.pop()
            for q in preds[r]:
                if q not in seen:
                    seen.add(q)
                    stack.append(q)
        return frozenset(seen)

    @cached_property
    def infinite(self) -> frozenset[int]:
        """States whose right language is infinite."""
        live = self.live
        succ = [[r for r in row if r in live] for row in self.transitions]
        on_cycle = set()
        for c in live:
            seen = set()
            stack = list(succ[c])
            while stack:
                q = stack.pop()
                if q == c:
                    on_cycle.add(c)
                    break
                if q not in seen:
                    seen.add(q)
                    stack.extend(succ[q])
        preds: list[set[int]] = [set() for _ in range(self.state_count)]
        for q, row in enumerate(self.transitions):
            for r in row:
                preds[r].add(q)
        result = set(on_cycle)
        stack = list(on_cycle)
        while stack:
            r = stack.pop()
            for q in preds[r]:
                if q not in result:
                    result.add(q)
                    stack.append(q)
        return frozenset(result)

    def oracle(self, name: str = "dfa") -> LanguageOracle:
        live = self.live
        return LanguageOracle(
            self.alphabet, name, self.accepts, lambda w: self.run(w) in live
        )

    def to_json(self) -> dict:
        return {
            "alphabet": self.alphabet.symbols,
            "states": self.state_count,
            "start": self.start,
            "accepting": sorted(self.accepting),
            "transitions": [list(row) for row in self.transitions],
        }


def residual_state(dfa: Dfa, x: str) -> int:
    return dfa.run(x)


def count_table(dfa: Dfa, max_length: int, cap: int) -> list[list[int]]:
    """table[l][q] = min(cap, number of words of length l accepted from q)."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    n = dfa.state_count
    row = [1 if q in dfa.accepting else 0 for q in range(n)]
    table = [[min(c, cap) for c in row]]
    for _ in range(max_length):
        extend_count_table(dfa, table, cap)
    return table


def extend_count_table(dfa: Dfa, table: list[list[int]], cap: int) -> list[int]:
    """Append the row for the next length to ``table`` and return it."""
    prev = table[-1]
    row = []
    for q in range(dfa.state_count):
        c = 0
        for r in dfa.transitions[q]:
            c += prev[r]
        row.append(c if c < cap else cap)
    table.append(row)
    return row


def residual_count(dfa: Dfa, q: int, length: int, cap: int) -> int:
    return count_table(dfa, length, cap)[length][q]


def residual_is_infinite(dfa: Dfa, q: int) -> bool:
    return q in dfa.infinite


def minimize(dfa: Dfa) -> Dfa:
    """Minimal complete DFA, states numbered in BFS order from the start."""
    reachable = dfa.reachable
    k = len(dfa.alphabet)
    block = {q: (1 if q in dfa.accepting else 0) for q in reachable}
    n_blocks = len(set(block.values()))
    # Moore refinement: split by (own block, successor blocks) until stable.
    while True:
        signatures: dict[tuple, int] = {}
        new_block = {}
        for q in reachable:
            sig = (block[q],) + tuple(block[dfa.transitions[q][a]] for a in range(k))
            new_block[q] = signatures.setdefault(sig, len(signatures))
        if len(signatures) == n_blocks:
            break
        block, n_blocks = new_block, len(signatures)

    order = {block[dfa.start]: 0}
    queue = deque([dfa.start])
    rep = {block[dfa.start]: dfa.start}
    while queue:
        q = queue.popleft()
        for a in range(k):
            b = block[dfa.transitions[q][a]]
            if b not in order:
                order[b] = len(order)
                rep[b] = dfa.transitions[q][a]
                queue.append(dfa.transitions[q][a])
    rows: list[tuple[int, ...]] = [()] * len(order)
    accepting = set()
    for b, idx in order.items():
        q = rep[b]
        rows[idx] = tuple(order[block[dfa.transitions[q][a]]] for a in range(k))
        if q in dfa.accepting:
            accepting.add(idx)
    return Dfa(dfa.alphabet, tuple(rows), 0, frozenset(accepting))


@dataclass
class DfaLoadReport:
    auto_completed: bool = False
    dead_state: int | None = None
    filled: int = 0


def dfa_from_json(data: dict, auto_complete: bool = False) -> tuple[Dfa, DfaLoadReport]:
    report = DfaLoadReport()
    try:
        alphabet = Alphabet(str(data["alphabet"]))
        n = int(data["states"])
        start = int(data["start"])
        accepting = frozenset(int(q) for q in data["accepting"])
        raw = data["transitions"]
    except (KeyError, TypeError, ValueError) as exc:
        raise DfaFormatError(f"malformed DFA description: {exc}") from exc
    if not isinstance(raw, list) or len(raw) > n:
        raise DfaFormatError("'transitions' must be a list with one row per state")
    k = len(alphabet)
    dead = n
    rows = []
    for q in range(n):
        row = raw[q] if q < len(raw) else []
        if not isinstance(row, list) or len(row) > k:
            raise DfaFormatError(f"transition row {q} must be a list of at most {k} entries")
        full = []
        for a in range(k):
            target = row[a] if a < len(row) else None
            if target is None:
                if not auto_complete:
                    raise DfaFormatError(
                        f"partial transition table: state {q} has no move on {alphabet.symbols[a]!r}"
                        " (use --auto-complete)"
                    )
                report.filled += 1
                target = dead
            full.append(int(target))
        rows.append(tuple(full))
    if report.filled:
        report.auto_completed = True
        report.dead_state = dead
        rows.append((dead,) * k)
    try:
        return Dfa(alphabet, tuple(rows), start, accepting), report
    except ValueError as exc:
        raise DfaFormatError(str(exc)) from exc


def load_dfa(path: str | Path, auto_complete: bool = False) -> tuple[Dfa, DfaLoadReport]:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise DfaFormatError(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise DfaFormatError(f"{path}: top-level value must be an object")
    return dfa_from_json(data, auto_complete)
