"""Command line: ``k3ns {orders|classify|verify|smooth|report}``.

Exit codes: 0 all checks pass, 1 a mathematical check failed,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import os
import sys

from .engine import CASES, arithmetic_suites, classify
from .modular import admissible_orders
from .plane import DEFAULT_PRIMES, CurveParseError, parse_curve, singular_points_fp
from .report import build_report, render_case_text, render_json, render_text

PRIMES_ENV = "K3NS_PRIMES"


class UsageError(Exception):
    pass


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % q for q in range(2, int(p ** 0.5) + 1))


def primes_from_env(environ=os.environ) -> tuple[int, ...]:
    raw = environ.get(PRIMES_ENV)
    if raw is None or not raw.strip():
        return DEFAULT_PRIMES
    try:
        primes = tuple(int(t) for t in raw.split(",") if t.strip())
    except ValueError:
        raise UsageError(f"{PRIMES_ENV} must be comma-separated primes, got {raw!r}") from None
    bad = [p for p in primes if not _is_prime(p) or p in (2, 3)]
    if not primes or bad:
        raise UsageError(f"{PRIMES_ENV}: need primes > 3 (they must not divide 6), got {raw!r}")
    return primes


def _emit(text: str, path: str | None):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_orders(args) -> int:
    for o in admissible_orders(args.phi_max):
        print(f"m={o.m} phi={o.phi}")
    return 0


def cmd_classify(args) -> int:
    if args.m not in CASES:
        raise UsageError(f"unsupported m = {args.m}; supported: {', '.join(map(str, CASES))}")
    case = classify(args.m, primes_from_env())
    _emit(render_json(case) if args.json else render_case_text(case), args.output)
    return 0 if case.passed and case.matches_expected() else 1


def cmd_verify(args) -> int:
    checks = arithmetic_suites()
    for c in checks:
        print(f"{'ok  ' if c.passed else 'FAIL'} {c.name}: {c.detail}")
    return 0 if all(c.passed for c in checks) else 1


def cmd_smooth(args) -> int:
    if not _is_prime(args.prime):
        raise UsageError(f"{args.prime} is not prime")
    try:
        with open(args.curve) as fh:
            curve = parse_curve(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {args.curve}: {exc.strerror}") from None
    except CurveParseError as exc:
        raise UsageError(f"{args.curve}: {exc}") from None
    try:
        sing = singular_points_fp(curve, args.prime)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    npts = args.prime ** 2 + args.prime + 1
    if sing:
        x, y, z = sing[0]
        print(f"singular at ({x}:{y}:{z}) over F_{args.prime} "
              f"({len(sing)} singular points of {npts})")
        return 1
    print(f"smooth: no singular point among the {npts} points of P2(F_{args.prime})")
    return 0


def cmd_report(args) -> int:
    doc = build_report(primes_from_env())
    text = render_json(doc) if args.format == "json" else render_text(doc)
    _emit(text, args.output)
    return 0 if doc.overall_pass else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="k3ns", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("orders", help="orders m with phi(m) <= phi-max")
    p.add_argument("--phi-max", type=_positive_int, default=21)
    p.set_defaults(func=cmd_orders)

    p = sub.add_parser("classify", help="run the case engine for one order")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="arithmetic tables: weights, congruence triples, Hurwitz")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("smooth", help="certify a plane curve smooth over F_p")
    p.add_argument("--curve", required=True, help="file of 'i j k : num/den' lines")
    p.add_argument("--prime", type=int, default=DEFAULT_PRIMES[0])
    p.set_defaults(func=cmd_smooth)

    p = sub.add_parser("report", help="full classification report")
    p.add_argument("--all", action="store_true", help="all seven orders (the default)")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"k3ns: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
