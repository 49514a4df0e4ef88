"""``ordex`` command line.

Exit codes: 0 success, 1 negative mathematical outcome (no certificate, an
invalid certificate, an inconclusive search, a FAIL in ``verify``), 2 usage or
input errors.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import re
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from ordex import engine, harness
from ordex.certificate import (
    CertificateFormatError,
    certificate_to_json,
    load_certificate,
    save_certificate,
    verify_certificate,
)
from ordex.dfa import Dfa, DfaFormatError, load_dfa, minimize
from ordex.families import FAMILY_DOCS, INDEX_DOCS, parse_family
from ordex.lang import Alphabet, AlphabetError, LanguageOracle
from ordex.regex import RegexSyntaxError, regex_dfa

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class ResolvedLanguage:
    spec: str
    oracle: LanguageOracle
    dfa: Dfa | None = None


def resolve_spec(text: str, alphabet: str = "01", auto_complete: bool = False) -> ResolvedLanguage:
    scheme, sep, payload = text.partition(":")
    if not sep:
        raise UsageError(f"language spec {text!r} must look like regex:..., dfa:... or family:...")
    if scheme == "regex":
        try:
            dfa = minimize(regex_dfa(payload, Alphabet(alphabet)))
        except RegexSyntaxError as exc:
            raise UsageError(f"regex syntax error: {exc}") from None
        except ValueError as exc:
            raise UsageError(f"bad alphabet: {exc}") from None
        return ResolvedLanguage(text, dfa.oracle(text), dfa)
    if scheme == "dfa":
        try:
            dfa, report = load_dfa(payload, auto_complete)
        except OSError as exc:
            raise UsageError(f"cannot read DFA file: {exc}") from None
        except DfaFormatError as exc:
            raise UsageError(f"malformed DFA file: {exc}") from None
        if report.auto_completed:
            print(f"note: added dead state {report.dead_state} for {report.filled} missing moves",
                  file=sys.stderr)
        return ResolvedLanguage(text, dfa.oracle(text), dfa)
    if scheme == "family":
        try:
            family = parse_family(payload)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        return ResolvedLanguage(text, family.oracle())
    raise UsageError(f"unknown language scheme {scheme!r} (expected regex, dfa or family)")


_POWER = re.compile(r"(.)\^(\d+)")


def expand_word(text: str, alphabet: Alphabet) -> str:
    """Expand ``c^N`` shorthand and check the symbols."""
    word = _POWER.sub(lambda m: m.group(1) * int(m.group(2)), text)
    try:
        return alphabet.check(word)
    except AlphabetError as exc:
        raise UsageError(str(exc)) from None


def _write_json(target: str, payload) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    if target == "-":
        _stdout.write(text)
    else:
        Path(target).write_text(text, encoding="utf-8")


def spectrum_csv(rows: list[engine.SpectrumRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["j", "size", "exact", "inconclusive_prefixes"])
    for r in rows:
        writer.writerow([r.j, r.size, "true" if r.exact else "false", r.inconclusive_prefixes])
    return buf.getvalue()


def spectrum_svg(rows: list[engine.SpectrumRow], title: str = "") -> str:
    """Static bar chart; lower-bound bars are hatched."""
    width, height, margin = 640, 360, 48
    plot_w, plot_h = width - 2 * margin, height - 2 * margin
    top = max([r.size for r in rows] + [1])
    bar = plot_w / max(len(rows), 1)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<defs><pattern id="hatch" width="6" height="6" patternUnits="userSpaceOnUse" '
        'patternTransform="rotate(45)"><rect width="6" height="6" fill="#fff"/>'
        '<line x1="0" y1="0" x2="0" y2="6" stroke="#4a6fa5" stroke-width="3"/></pattern></defs>',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#fff"/>',
        f'<text x="{width / 2:.1f}" y="24" text-anchor="middle" font-family="sans-serif" '
        f'font-size="14">{_xml(title)}</text>',
        f'<line x1="{margin}" y1="{margin + plot_h}" x2="{margin + plot_w}" y2="{margin + plot_h}" '
        'stroke="#000"/>',
        f'<line x1="{margin}" y1="{margin}" x2="{margin}" y2="{margin + plot_h}" stroke="#000"/>',
        f'<text x="{margin - 6}" y="{margin + 4}" text-anchor="end" font-family="sans-serif" '
        f'font-size="11">{top}</text>',
        f'<text x="{margin - 6}" y="{margin + plot_h + 4}" text-anchor="end" '
        'font-family="sans-serif" font-size="11">0</text>',
    ]
    for i, r in enumerate(rows):
        h = plot_h * r.size / top
        x = margin + i * bar + bar * 0.1
        y = margin + plot_h - h
        fill = "#4a6fa5" if r.exact else "url(#hatch)"
        parts.append(
            f'<rect x="{x:.2f}" y="{y:.2f}" width="{bar * 0.8:.2f}" height="{h:.2f}" '
            f'fill="{fill}" stroke="#4a6fa5"><title>j={r.j} size={r.size}</title></rect>'
        )
        parts.append(
            f'<text x="{x + bar * 0.4:.2f}" y="{margin + plot_h + 16}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="11">{r.j}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _xml(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def _row_json(r: engine.SpectrumRow) -> dict:
    out = {"j": r.j, "size": r.size, "exact": r.exact, "inconclusive_prefixes": r.inconclusive_prefixes}
    if r.witnesses is not None:
        out["witnesses"] = [{"prefix": x, "extension": w} for x, w in r.witnesses]
    return out


# -- subcommands ---------------------------------------------------------------


def _lang(args) -> ResolvedLanguage:
    return resolve_spec(args.lang, args.alphabet, args.auto_complete)


def cmd_spectrum(args) -> int:
    lang = _lang(args)
    if lang.dfa is not None:
        rows = engine.spectrum_exact(lang.dfa, args.jmax, witnesses=args.witnesses)
    else:
        rows = engine.spectrum_bounded(lang.oracle, args.jmax, args.prefix_len, args.ext_len,
                                       witnesses=args.witnesses)
    text = spectrum_csv(rows)
    sys.stdout.write(text)
    if args.witnesses:
        for r in rows:
            for x, w in r.witnesses:
                print(f"# j={r.j} prefix={x!r} extension={w!r}")
    if args.csv:
        Path(args.csv).write_text(text, encoding="utf-8")
    if args.svg:
        Path(args.svg).write_text(spectrum_svg(rows, lang.spec), encoding="utf-8")
    if args.json:
        _write_json(args.json, {"language": lang.spec, "rows": [_row_json(r) for r in rows]})
    return EXIT_OK


def cmd_jth(args) -> int:
    lang = _lang(args)
    x = expand_word(args.prefix, lang.oracle.alphabet)
    if args.j < 1:
        raise UsageError("--j must be >= 1")
    if lang.dfa is not None:
        w = engine.jth_word_from_state(lang.dfa, lang.dfa.run(x), args.j)
        payload = {"language": lang.spec, "prefix": x, "j": args.j, "exact": True,
                   "extension": w, "exists": w is not None}
        print(repr(w) if w is not None else f"no {args.j}-th extension exists")
        code = EXIT_OK if w is not None else EXIT_NEGATIVE
    else:
        res = engine.jth_extension_bounded(lang.oracle, x, args.j, args.ext_len)
        if isinstance(res, engine.Confirmed):
            print(res.word)
            payload = {"language": lang.spec, "prefix": x, "j": args.j, "exact": False,
                       "extension": res.word, "confirmed": True}
            code = EXIT_OK
        else:
            print(f"inconclusive: found {res.found} extension(s) of length <= {args.ext_len}")
            payload = {"language": lang.spec, "prefix": x, "j": args.j, "exact": False,
                       "extension": None, "confirmed": False, "found": res.found}
            code = EXIT_NEGATIVE
    if args.json:
        _write_json(args.json, payload)
    return code


def cmd_certify(args) -> int:
    lang = _lang(args)
    out = engine.certify_nonregular(lang.oracle, args.classes, args.jmax, args.prefix_len, args.ext_len)
    if isinstance(out, engine.Certificate):
        cert = engine.Certificate(out.j, out.entries, out.ext_search_bound, lang.spec)
        save_certificate(cert, args.out)
        print(f"certificate: j={cert.j}, {cert.classes} classes -> {args.out}")
        payload = {"certified": True, **certificate_to_json(cert)}
        code = EXIT_OK
    else:
        print(f"no certificate with {out.k} classes for j <= {out.jmax}; "
              f"best was {out.best_count} at j={out.best_j}")
        payload = {"certified": False, "language": lang.spec, "k": out.k,
                   "best_j": out.best_j, "best_count": out.best_count, "jmax": out.jmax}
        code = EXIT_NEGATIVE
    if args.json:
        _write_json(args.json, payload)
    return code


def cmd_check_cert(args) -> int:
    lang = _lang(args)
    try:
        cert = load_certificate(args.cert)
        check = verify_certificate(lang.oracle, cert)
    except OSError as exc:
        raise UsageError(f"cannot read certificate: {exc}") from None
    except CertificateFormatError as exc:
        raise UsageError(f"malformed certificate: {exc}") from None
    if check.ok:
        print(f"valid: every DFA for this language has at least {cert.classes} states")
    else:
        print("invalid certificate:")
        for p in check.problems:
            print(f"  {p}")
    if args.json:
        _write_json(args.json, {"valid": check.ok, "classes": cert.classes, "problems": check.problems})
    return EXIT_OK if check.ok else EXIT_NEGATIVE


def cmd_ue_refute(args) -> int:
    lang = _lang(args)
    y = expand_word(args.word, lang.oracle.alphabet)
    res = engine.universal_extension_refute(lang.oracle, y, args.prefix_len)
    if res.refuted:
        print(f"refuted: {res.witness!r} followed by the word is not in the language")
    else:
        print(f"unrefuted over {res.checked} prefixes of length <= {args.prefix_len}")
    if args.json:
        _write_json(args.json, {"word": y, "refuted": res.refuted, "witness": res.witness,
                                "prefixes_checked": res.checked})
    return EXIT_OK


def _budgets(items: list[str]) -> dict[str, int]:
    out = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep or not value.strip().isdigit():
            raise UsageError(f"--budget expects KEY=INTEGER, got {item!r}")
        out[key.strip()] = int(value)
    return out


def cmd_verify(args) -> int:
    if args.scale < 1:
        raise UsageError("--scale must be >= 1")
    try:
        started = time.perf_counter()
        results, summary = harness.run_all(args.scale, args.claims, _budgets(args.budget))
        total = time.perf_counter() - started
    except harness.UnknownClaim as exc:
        raise UsageError(exc.args[0]) from None
    for r in results:
        print(f"{r.status:<12} {r.id:<24} {r.anchor:<36} {r.wall_time:7.2f}s")
        if r.status in (harness.FAIL, harness.DISCREPANCY):
            for w in r.witnesses[:3]:
                print(f"    witness: {json.dumps(w)}")
    print("summary: " + ", ".join(f"{k}={v}" for k, v in summary.items()) + f"  ({total:.1f}s)")
    if args.json:
        _write_json(args.json, {
            "summary": summary,
            "results": [r.to_json() for r in results],
            "wall_time": round(total, 4),
        })
    bad = summary[harness.FAIL]
    if args.strict:
        bad += summary[harness.DISCREPANCY] + summary[harness.INCONCLUSIVE]
    return EXIT_NEGATIVE if bad else EXIT_OK


def cmd_families(args) -> int:
    if args.json:
        _write_json(args.json, {"families": FAMILY_DOCS, "index_sets": INDEX_DOCS})
        return EXIT_OK
    for name, doc in FAMILY_DOCS.items():
        print(f"family:{name:<12} {doc}")
    print(f"index sets: {INDEX_DOCS}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ordex", description="Ordinal extension toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    lang = argparse.ArgumentParser(add_help=False)
    lang.add_argument("--lang", required=True, help="regex:PATTERN | dfa:PATH | family:NAME[?k=v&...]")
    lang.add_argument("--alphabet", default="01", help="alphabet for regex specs (default 01)")
    lang.add_argument("--auto-complete", action="store_true",
                      help="complete partial DFA tables with a dead state")
    lang.add_argument("--json", metavar="PATH", help="also write structured output ('-' for stdout)")

    p = sub.add_parser("spectrum", parents=[lang], help="ordinal extension spectrum")
    p.add_argument("--jmax", type=int, required=True)
    p.add_argument("--prefix-len", type=int, default=8)
    p.add_argument("--ext-len", type=int, default=12)
    p.add_argument("--witnesses", action="store_true")
    p.add_argument("--csv", metavar="PATH")
    p.add_argument("--svg", metavar="PATH")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("jth", parents=[lang], help="j-th extension of a prefix")
    p.add_argument("--prefix", required=True, help="prefix word ('' for the empty word, 0^N shorthand)")
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--ext-len", type=int, default=16)
    p.set_defaults(func=cmd_jth)

    p = sub.add_parser("certify", parents=[lang], help="search for a nonregularity certificate")
    p.add_argument("--classes", type=int, required=True)
    p.add_argument("--jmax", type=int, default=3)
    p.add_argument("--prefix-len", type=int, default=8)
    p.add_argument("--ext-len", type=int, default=12)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("check-cert", parents=[lang], help="independently verify a certificate")
    p.add_argument("--cert", required=True)
    p.set_defaults(func=cmd_check_cert)

    p = sub.add_parser("ue-refute", parents=[lang], help="try to refute a universal extension")
    p.add_argument("--word", required=True)
    p.add_argument("--prefix-len", type=int, default=10)
    p.set_defaults(func=cmd_ue_refute)

    p = sub.add_parser("verify", help="run the claim registry")
    p.add_argument("claims", nargs="*", metavar="CLAIM-ID")
    p.add_argument("--scale", type=int, default=1)
    p.add_argument("--json", metavar="PATH")
    p.add_argument("--budget", action="append", default=[], metavar="KEY=N",
                   help="override a budget (e.g. jmax=10) in every claim that has it")
    p.add_argument("--strict", action="store_true",
                   help="also fail on DISCREPANCY or INCONCLUSIVE")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("families", help="list language families")
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=cmd_families)
    return parser


_stdout = sys.stdout


def main(argv: list[str] | None = None) -> int:
    global _stdout
    args = build_parser().parse_args(argv)
    _stdout = sys.stdout
    try:
        if getattr(args, "json", None) == "-":
            # keep stdout pure JSON; the text report goes to stderr
            with contextlib.redirect_stdout(sys.stderr):
                return args.func(args)
        return args.func(args)
    except UsageError as exc:
        print(f"ordex: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
