"""Command-line surface: classify, witness, certify, braid-eval,
kernel-project and selftest.

Exit codes: 0 success, 1 verification failure or property-false result,
2 usage or precondition error, 3 unsupported family.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .braid import BraidElt, gmap, lsigma, parse_braid
from .classifier import HomClass, HomDescriptor, decide, normalize
from .certificate import check_certificate
from .kleinpi import parse_klein
from .kernel import project
from .suites import SUITES, run_suite
from .witness import SearchBounds, UnsupportedFamilyError, build_witness, search_witness
from .words import WordParseError, parse_word

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3


class _CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE) -> None:
        super().__init__(message)
        self.code = code


def _class_from_args(args) -> HomClass:
    if args.img10 is not None or args.img01 is not None:
        if args.img10 is None or args.img01 is None:
            raise _CliError("--img10 and --img01 must be given together")
        h = HomDescriptor(parse_klein(args.img10), parse_klein(args.img01))
        return normalize(h)
    if args.type is None:
        raise _CliError("give either --img10/--img01 or --type with parameters")
    kw = dict(s1=args.s1, s2=args.s2)
    if args.type == 4:
        return HomClass(4, r1=args.r1, r2=args.r2, **kw)
    return HomClass(args.type, i=args.i, **kw)


def _add_class_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--img10", help="image of (1,0), e.g. '(0,3)'")
    p.add_argument("--img01", help="image of (0,1), e.g. '(0,4)'")
    p.add_argument("--type", type=int, choices=(1, 2, 3, 4))
    p.add_argument("--i", type=int, default=0, choices=(0, 1))
    p.add_argument("--s1", type=int, default=0)
    p.add_argument("--s2", type=int, default=0)
    p.add_argument("--r1", type=int, default=0)
    p.add_argument("--r2", type=int, default=0)
    p.add_argument("--json", action="store_true", help="machine-readable output")


def _class_json(cls: HomClass) -> dict:
    out = {"type": cls.kind, "s1": cls.s1, "s2": cls.s2}
    if cls.kind == 4:
        out.update(r1=cls.r1, r2=cls.r2)
    else:
        out.update(i=cls.i)
    return out


def _cmd_classify(args) -> int:
    cls = _class_from_args(args)
    verdict = decide(cls)
    if args.json:
        print(
            json.dumps(
                {
                    "class": _class_json(cls),
                    "bu": verdict.bu,
                    "branch": verdict.branch,
                    "reduced": _class_json(verdict.reduced),
                }
            )
        )
    else:
        print(f"class: {cls.describe()}")
        print(f"borsuk-ulam: {'yes' if verdict.bu else 'no'}   branch: {verdict.branch}")
        print(f"reduced: {verdict.reduced.describe()}")
    return EXIT_OK


def _witness_json(report) -> dict:
    return {
        "a": str(report.a),
        "b": str(report.b),
        "source": report.source,
        "checks": {
            "relation": report.checks.relation,
            "first_image": report.checks.first_image,
            "second_image": report.checks.second_image,
        },
        "class": _class_json(report.cls),
    }


def _cmd_witness(args) -> int:
    cls = _class_from_args(args)
    verdict = decide(cls)
    if verdict.bu:
        raise _CliError(
            f"{cls.describe()} has the Borsuk-Ulam property; no witness exists"
        )
    if args.search:
        result = search_witness(cls, SearchBounds(args.bounds, args.coords))
        if not result.found:
            print(
                f"not found: examined {result.examined} candidate pairs at "
                f"bounds (word length <= {result.bounds.word_len}, "
                f"|coords| <= {result.bounds.coord})"
            )
            return EXIT_FAIL
        report = result.report
    else:
        report = build_witness(cls)
    if args.json:
        print(json.dumps(_witness_json(report)))
    else:
        print(f"class: {cls.describe()}   source: {report.source}")
        print(f"a = {report.a}")
        print(f"b = {report.b}")
        print("checks: relation ok, first image ok, second image ok")
    return EXIT_OK


def _cmd_certify(args) -> int:
    cls = _class_from_args(args)
    verdict = decide(cls)
    if not verdict.bu:
        raise _CliError(
            f"{cls.describe()} fails the Borsuk-Ulam property; "
            "request a witness instead"
        )
    report = check_certificate(cls, window=args.window, mn=args.mn)
    if args.json:
        print(
            json.dumps(
                {
                    "class": _class_json(cls),
                    "family": report.family,
                    "windows": {"coords": report.windows[0], "mn": report.windows[1]},
                    "linear_killed": report.linear_killed,
                    "constant_nonzero_for_all": report.constant_nonzero_for_all,
                    "failures": [list(f) for f in report.witnesses_of_failure],
                }
            )
        )
    else:
        print(f"class: {cls.describe()}   family: {report.family}")
        print(
            f"windows: |k|,|l| <= {report.windows[0]}; |m|,|n| <= {report.windows[1]}"
        )
        print(
            f"linear part killed: {report.linear_killed}   "
            f"constant nonzero: {report.constant_nonzero_for_all}"
        )
        for f in report.witnesses_of_failure[:10]:
            print(f"  failure at (m,n,part,k,l) = {f}")
    return EXIT_OK if report.success else EXIT_FAIL


_LITERAL = re.compile(r"\(\s*[^();]*;\s*-?\d+\s*,\s*-?\d+\s*\)")
_IDENT = re.compile(r"[a-z]+")


def _tokenize_expr(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        m = _LITERAL.match(text, pos)
        if m:
            tokens.append(("literal", m.group(0), pos))
            pos = m.end()
            continue
        m = _IDENT.match(text, pos)
        if m:
            tokens.append(("ident", m.group(0), pos))
            pos = m.end()
            continue
        if ch in "(),":
            tokens.append((ch, ch, pos))
            pos += 1
            continue
        raise _CliError(f"braid-eval: unexpected character {ch!r} at position {pos}")
    return tokens


class _ExprParser:
    """expr := atom+ (product); atom := literal | ident args | '(' expr ')'."""

    def __init__(self, tokens: list[tuple[str, str, int]]) -> None:
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self):
        tok = self.peek()
        if tok is None:
            raise _CliError("braid-eval: unexpected end of expression")
        self.pos += 1
        return tok

    def parse_expr(self, stop=(")", ",")) -> BraidElt:
        out = None
        while True:
            tok = self.peek()
            if tok is None or tok[0] in stop:
                break
            atom = self.parse_atom()
            out = atom if out is None else out * atom
        if out is None:
            raise _CliError("braid-eval: empty expression")
        return out

    def parse_atom(self) -> BraidElt:
        kind, text, pos = self.next()
        if kind == "literal":
            try:
                return parse_braid(text)
            except (ValueError, WordParseError) as exc:
                raise _CliError(f"braid-eval: {exc} (at position {pos})")
        if kind == "(":
            inner = self.parse_expr()
            if self.next()[0] != ")":
                raise _CliError(f"braid-eval: expected ')' (opened at position {pos})")
            return inner
        if kind == "ident":
            args = []
            tok = self.peek()
            if tok is not None and tok[0] == "(":
                self.next()
                args.append(self.parse_expr())
                while self.peek() is not None and self.peek()[0] == ",":
                    self.next()
                    args.append(self.parse_expr())
                if self.next()[0] != ")":
                    raise _CliError("braid-eval: expected ')' after arguments")
            else:
                args.append(self.parse_atom())
            if text == "inv":
                if len(args) != 1:
                    raise _CliError("braid-eval: inv takes one argument")
                return args[0].inv()
            if text == "lsigma":
                if len(args) != 1:
                    raise _CliError("braid-eval: lsigma takes one argument")
                return lsigma(args[0])
            if text == "mul":
                if len(args) != 2:
                    raise _CliError("braid-eval: mul takes two arguments")
                return args[0] * args[1]
            raise _CliError(f"braid-eval: unknown operator {text!r} at position {pos}")
        raise _CliError(f"braid-eval: unexpected token {text!r} at position {pos}")


def _cmd_braid_eval(args) -> int:
    tokens = _tokenize_expr(args.expression)
    parser = _ExprParser(tokens)
    result = parser.parse_expr(stop=())
    print(result)
    return EXIT_OK


def _cmd_kernel_project(args) -> int:
    try:
        w = parse_word(args.word)
    except WordParseError as exc:
        raise _CliError(f"kernel-project: {exc}")
    g = gmap(w)
    if g.m or g.n:
        raise _CliError(f"kernel-project: word is not in ker gmap (image {g})")
    print(project(w))
    return EXIT_OK


def _cmd_selftest(args) -> int:
    try:
        checks = run_suite(args.suite, seed=args.seed)
    except KeyError as exc:
        raise _CliError(str(exc.args[0]))
    bad = 0
    for check in checks:
        status = "pass" if check.ok else "FAIL"
        line = f"[{status}] {args.suite}: {check.name}"
        if not check.ok:
            bad += 1
            line += f"  ({check.detail})"
        print(line)
    if bad:
        print(f"{bad} check(s) failed")
        return EXIT_FAIL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kleinbraid",
        description="Borsuk-Ulam classification over the Klein bottle: "
        "exact braid arithmetic, witnesses and certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="normalise a homomorphism and decide the property")
    _add_class_args(p)
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("witness", help="construct (or search) a verified witness pair")
    _add_class_args(p)
    p.add_argument("--search", action="store_true", help="bounded search instead of construction")
    p.add_argument("--bounds", type=int, default=4, help="max word letters for --search")
    p.add_argument("--coords", type=int, default=2, help="max twist coordinate for --search")
    p.set_defaults(fn=_cmd_witness)

    p = sub.add_parser("certify", help="run the bounded certificate for a class with the property")
    _add_class_args(p)
    p.add_argument("--window", type=int, default=6, help="coordinate window |k|,|l|")
    p.add_argument("--mn", type=int, default=4, help="parameter window |m|,|n|")
    p.set_defaults(fn=_cmd_certify)

    p = sub.add_parser("braid-eval", help="evaluate a braid expression to normal form")
    p.add_argument("expression", help="product of (word;m,n) literals and mul|inv|lsigma")
    p.set_defaults(fn=_cmd_braid_eval)

    p = sub.add_parser("kernel-project", help="project a kernel word to basis coordinates")
    p.add_argument("word", help="a word in ker gmap, e.g. 'B' or 'v B v^-1 B^-1'")
    p.set_defaults(fn=_cmd_kernel_project)

    p = sub.add_parser("selftest", help="run a named invariant suite")
    p.add_argument("--suite", required=True, help=f"one of: {', '.join(sorted(SUITES))}")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=_cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except UnsupportedFamilyError as exc:
        print(f"unsupported family: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (ValueError, WordParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
