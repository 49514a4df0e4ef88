"""Certificate files and an independent checker.

The checker deliberately avoids the engine: it re-enumerates every candidate
extension by brute force, so a bug in the producer cannot vouch for itself.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from pathlib import Path

from ordex.engine import Certificate
from ordex.lang import LanguageOracle


class CertificateFormatError(ValueError):
    """The certificate is structurally malformed (not merely wrong)."""


def certificate_to_json(cert: Certificate) -> dict:
    return {
        "language": cert.language,
        "j": cert.j,
        "ext_search_bound": cert.ext_search_bound,
        "entries": [{"prefix": x, "extension": w} for x, w in cert.entries],
    }


def certificate_from_json(data: object) -> Certificate:
    if not isinstance(data, dict):
        raise CertificateFormatError("certificate must be a JSON object")
    try:
        j = data["j"]
        bound = data["ext_search_bound"]
        raw = data["entries"]
    except KeyError as exc:
        raise CertificateFormatError(f"missing field {exc}") from None
    if not isinstance(j, int) or isinstance(j, bool) or j < 1:
        raise CertificateFormatError(f"'j' must be a positive integer, got {j!r}")
    if not isinstance(bound, int) or isinstance(bound, bool) or bound < 0:
        raise CertificateFormatError(f"'ext_search_bound' must be a natural number, got {bound!r}")
    if not isinstance(raw, list):
        raise CertificateFormatError("'entries' must be a list")
    entries = []
    for i, e in enumerate(raw):
        if not isinstance(e, dict) or not isinstance(e.get("prefix"), str) \
                or not isinstance(e.get("extension"), str):
            raise CertificateFormatError(f"entry {i} needs string 'prefix' and 'extension'")
        entries.append((e["prefix"], e["extension"]))
    return Certificate(j, tuple(entries), bound, str(data.get("language", "")))


def save_certificate(cert: Certificate, path: str | Path) -> None:
    Path(path).write_text(json.dumps(certificate_to_json(cert), indent=2) + "\n", encoding="utf-8")


def load_certificate(path: str | Path) -> Certificate:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise CertificateFormatError(f"{path}: invalid JSON: {exc}") from exc
    return certificate_from_json(data)


@dataclass
class CertificateCheck:
    ok: bool
    problems: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def _rank_among_extensions(oracle: LanguageOracle, x: str, w: str) -> int | None:
    """1-based position of w among the extensions of x, or None if w is not one."""
    if not oracle.membership(x + w):
        return None
    symbols = oracle.alphabet.symbols
    earlier = 0
    for length in range(len(w) + 1):
        for combo in itertools.product(symbols, repeat=length):
            y = "".join(combo)
            if y == w:
                return earlier + 1
            if oracle.membership(x + y):
                earlier += 1
    raise AssertionError("unreachable: w is enumerated at its own length")


def verify_certificate(oracle: LanguageOracle, cert: Certificate) -> CertificateCheck:
    if not isinstance(cert.j, int) or cert.j < 1:
        raise CertificateFormatError(f"bad j {cert.j!r}")
    if not cert.entries:
        raise CertificateFormatError("certificate has no entries")
    symbols = set(oracle.alphabet.symbols)
    for i, (x, w) in enumerate(cert.entries):
        stray = (set(x) | set(w)) - symbols
        if stray:
            raise CertificateFormatError(
                f"entry {i} uses symbols {sorted(stray)} outside alphabet {oracle.alphabet.symbols!r}"
            )
    problems = []
    extensions = [w for _, w in cert.entries]
    if len(set(extensions)) != len(extensions):
        dupes = sorted({w for w in extensions if extensions.count(w) > 1})
        problems.append(f"extensions not pairwise distinct: {dupes}")
    for i, (x, w) in enumerate(cert.entries):
        if len(w) > cert.ext_search_bound:
            problems.append(
                f"entry {i} ({x!r}, {w!r}): extension longer than ext_search_bound {cert.ext_search_bound}"
            )
            continue
        pos = _rank_among_extensions(oracle, x, w)
        if pos is None:
            problems.append(f"entry {i} ({x!r}, {w!r}): x·w is not in the language")
        elif pos != cert.j:
            problems.append(f"entry {i} ({x!r}, {w!r}): extension is number {pos}, not {cert.j}")
    return CertificateCheck(not problems, problems)
