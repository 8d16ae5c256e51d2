"""Command-line interface: evaluate expressions, move across bases, verify.

Exit codes: 0 on success, 1 when a verification suite fails, 2 on usage,
parse or evaluation errors.
"""

from __future__ import annotations

import argparse
import sys

from . import localization as loc
from .expr import (
    EvalError,
    ParseError,
    evaluate,
    format_value,
    parse,
    preferred_display,
    value_to_json,
)
from .line_elements import is_line_element
from .localization import LocClass
from .verify import SUITES, run_verify
from .virtual_ring import KClass


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="virtualk",
        description="Exact virtual K-theory of the weighted projective line P(1,n).",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--n", type=int, required=True, help="weight, n >= 2")
        sp.add_argument("--json", action="store_true", help="structured output")
        sp.add_argument(
            "--basis",
            choices=("auto", "sector", "loc", "u"),
            default="auto",
            help="display basis (no implicit gamma conversions)",
        )

    sp = sub.add_parser("eval", help="evaluate an expression")
    sp.add_argument("expression")
    common(sp)

    sp = sub.add_parser("mul", help="product of two expressions in their shared basis")
    sp.add_argument("lhs")
    sp.add_argument("rhs")
    common(sp)

    sp = sub.add_parser("adams", help="apply the k-th Adams operation")
    sp.add_argument("k", type=int)
    sp.add_argument("expression")
    common(sp)

    sp = sub.add_parser("localize", help="gamma of a sector-basis expression")
    sp.add_argument("expression")
    common(sp)

    sp = sub.add_parser("delocalize", help="gamma^(-1) of a localized expression")
    sp.add_argument("expression")
    common(sp)

    sp = sub.add_parser("line", help="test a localized class for line-element membership")
    sp.add_argument("expression")
    sp.add_argument("--k-max", type=int, default=None)
    common(sp)

    sp = sub.add_parser("verify", help="run verification suites")
    sp.add_argument("--n-min", type=int, default=2)
    sp.add_argument("--n-max", type=int, default=5)
    sp.add_argument("--suite", action="append", default=None,
                    help="suite name or 'all' (repeatable); default all")
    sp.add_argument("--k-max", type=int, default=None, help="default 2n per weight")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--verbose", action="store_true")
    sp.add_argument("--out", default=None, help="write the report to a file")
    return p


def _emit(args, basis: str, value, display_hint: str) -> None:
    display = args.basis
    if display == "auto":
        display = display_hint
    if basis == "scalar":
        display = "scalar"
    elif basis == "sector":
        if display in ("loc", "u"):
            raise EvalError("sector-basis value; use localize/gamma for a localized view")
        display = "sector"
    else:
        if display == "sector":
            raise EvalError("localized value; use delocalize/gammainv for the sector view")
        if display == "auto":
            display = "loc"
    if args.json:
        print(value_to_json(args.n, basis, value, display=display))
    else:
        print(format_value(basis, value, display=display))


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            suites = tuple(args.suite) if args.suite else ("all",)
            report = run_verify(args.n_min, args.n_max, suites, args.k_max)
            text = report.to_json() if args.json else report.text_summary(args.verbose)
            print(text)
            if args.out:
                with open(args.out, "w", encoding="utf-8") as fh:
                    fh.write(text + "\n")
            return 0 if report.ok else 1

        if args.n < 2:
            print("error: --n must be at least 2", file=sys.stderr)
            return 2

        if args.command == "eval":
            e = parse(args.expression, args.n)
            basis, value = evaluate(e, args.n)
            _emit(args, basis, value, preferred_display(e))
            return 0
        if args.command == "mul":
            e = parse("(%s)*(%s)" % (args.lhs, args.rhs), args.n)
            basis, value = evaluate(e, args.n)
            _emit(args, basis, value, preferred_display(e))
            return 0
        if args.command == "adams":
            e = parse("psi[%d](%s)" % (args.k, args.expression), args.n)
            basis, value = evaluate(e, args.n)
            _emit(args, basis, value, preferred_display(e))
            return 0
        if args.command == "localize":
            e = parse("gamma(%s)" % args.expression, args.n)
            basis, value = evaluate(e, args.n)
            _emit(args, basis, value, "loc")
            return 0
        if args.command == "delocalize":
            e = parse("gammainv(%s)" % args.expression, args.n)
            basis, value = evaluate(e, args.n)
            _emit(args, basis, value, "sector")
            return 0
        if args.command == "line":
            e = parse(args.expression, args.n)
            basis, value = evaluate(e, args.n)
            if not isinstance(value, LocClass):
                raise EvalError("line membership applies to localized classes")
            cert = is_line_element(loc.to_u_basis(value), args.k_max)
            if args.json:
                import json

                doc = {"is_line_element": cert.ok, "reason": cert.reason}
                if cert.params:
                    doc["f"] = list(cert.params.f)
                    doc["beta"] = [[str(x) for x in b.coeffs] for b in cert.params.beta]
                print(json.dumps(doc, sort_keys=True))
            elif cert.ok:
                print("line element: f=(%s); beta=(%s)" % (
                    ",".join(str(v) for v in cert.params.f),
                    ",".join(str(b) for b in cert.params.beta),
                ))
            else:
                print("not a line element: %s" % cert.reason)
            return 0
    except (ParseError, EvalError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    parser.error("unknown command")
    return 2


if __name__ == "__main__":
    sys.exit(main())
