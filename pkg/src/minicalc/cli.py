"""Command-line front end.

Exit codes: 0 verified, 1 warning, 2 parse error, 64 usage error,
66 unreadable file.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .api import DEFAULT_THEORY_NAME, Analysis, analyze, json_dumps, report_to_json
from .fixtures import FIXTURES, get_fixture
from .semantics import BudgetExceeded, Countermodel, is_valid_upto
from .syntax import line_col

EX_OK = 0
EX_WARNING = 1
EX_PARSE_ERROR = 2
EX_USAGE = 64
EX_NOINPUT = 66

_VERDICT_EXIT = {"verified": EX_OK, "warning": EX_WARNING, "parse-error": EX_PARSE_ERROR}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EX_USAGE)


def _read_file(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as error:
        print(f"minicalc: cannot read {path}: {error.strerror}", file=sys.stderr)
        raise SystemExit(EX_NOINPUT) from None


def _print_diagnostics(path: str, analysis: Analysis) -> None:
    kind = "error" if analysis.report.verdict == "parse-error" else "warning"
    for diag in analysis.report.diagnostics:
        line, col = line_col(analysis.source, diag.span.start)
        print(f"{path}:{line}:{col}: {kind}: {diag.message}")


def _cmd_check(args) -> int:
    source = _read_file(args.file)
    analysis = analyze(source)
    if args.json:
        print(json_dumps(report_to_json(analysis)))
    else:
        print(f"{args.file}: {analysis.report.verdict}")
        _print_diagnostics(args.file, analysis)
    return _VERDICT_EXIT[analysis.report.verdict]


def _cmd_fmt(args) -> int:
    source = _read_file(args.file)
    analysis = analyze(source)
    report = analysis.report
    if report.verdict == "parse-error":
        _print_diagnostics(args.file, analysis)
        return EX_PARSE_ERROR
    assert report.promoted_layout is not None
    if args.write:
        with open(args.file, "w", encoding="utf-8") as handle:
            handle.write(report.promoted_layout)
    else:
        print(report.promoted_layout, end="")
    return EX_OK


def _cmd_export(args) -> int:
    source = _read_file(args.file)
    analysis = analyze(source, theory_name=args.theory)
    report = analysis.report
    if report.verdict != "verified":
        print(f"{args.file}: {report.verdict}; only verified proofs can be exported",
              file=sys.stderr)
        _print_diagnostics(args.file, analysis)
        return _VERDICT_EXIT[report.verdict]
    assert report.isabelle_theory is not None
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(report.isabelle_theory)
    else:
        print(report.isabelle_theory, end="")
    return EX_OK


def _cmd_validate(args) -> int:
    source = _read_file(args.file)
    analysis = analyze(source)
    if analysis.document is None:
        _print_diagnostics(args.file, analysis)
        return EX_PARSE_ERROR
    try:
        result = is_valid_upto((analysis.document.goal,), args.max_domain)
    except (BudgetExceeded, ValueError) as error:
        print(f"minicalc: {error}", file=sys.stderr)
        return EX_PARSE_ERROR
    if result is True:
        print(f"valid up to {args.max_domain}")
        return EX_OK
    assert isinstance(result, Countermodel)
    print(f"countermodel: {result.describe()}")
    return EX_WARNING


def _cmd_examples(args) -> int:
    if args.name:
        try:
            print(get_fixture(args.name).source, end="")
        except KeyError:
            print(f"minicalc: unknown example {args.name!r}", file=sys.stderr)
            return EX_USAGE
        return EX_OK
    width = max(len(f.name) for f in FIXTURES)
    for f in FIXTURES:
        print(f"{f.name:<{width}}  {f.title}  ({f.description})")
    return EX_OK


def _cmd_serve(args) -> int:
    from .server import serve

    serve(args.host, args.port, static_dir=args.static)
    return EX_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="minicalc", description=__doc__)
    parser.add_argument("--version", action="version", version=f"minicalc {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="check a proof file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true", help="print the full JSON report")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("fmt", help="print the promoted layout")
    p.add_argument("file")
    p.add_argument("--write", action="store_true", help="rewrite the file in place")
    p.set_defaults(func=_cmd_fmt)

    p = sub.add_parser("export", help="export a verified proof as an Isabelle theory")
    p.add_argument("file")
    p.add_argument("--theory", default=DEFAULT_THEORY_NAME, help="theory name")
    p.add_argument("-o", "--output", help="write to this file instead of stdout")
    p.set_defaults(func=_cmd_export)

    p = sub.add_parser("validate", help="run the finite-model oracle on the goal")
    p.add_argument("file")
    p.add_argument("--max-domain", type=int, default=2)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("examples", help="list the bundled example proofs")
    p.add_argument("name", nargs="?", help="print this example's source instead")
    p.set_defaults(func=_cmd_examples)

    p = sub.add_parser("serve", help="run the local JSON check service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=7878)
    p.add_argument("--static", help="also serve this directory (the editor UI)")
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
