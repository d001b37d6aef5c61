"""Command-line front end.

    tornheim-lab eval "T(1,1,1; 0,0) - 2*zetaR(3)"
    tornheim-lab verify theorem1 --a 2 --b 3 --s 2 --x 0.3 --y 0.7
    tornheim-lab suite theorem1 --json report.json
    tornheim-lab characters --modulus 12

Exit status: 0 when everything passes, 2 on a failed check or violated
precondition, 1 on usage or internal errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .dirichlet import characters_mod, parse_character_ref
from .dsl import as_value, evaluate, parse_expression
from .errors import DomainError, ExpressionSyntaxError, NonConvergent, TornheimError
from .series import Accel, SummationConfig, ValueWithError
from .verifier import (DEFAULT_GRIDS, DEFAULT_TOL, ORIENTATIONS, GridSpec, format_number, reports_to_csv,
                       reports_to_json, run_suite, sig10, skipped_report, verify_limit_report, verify_prop1, verify_prop2,
                       verify_recursion, verify_stuffle, verify_theorem1)

EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 1, 2
ACCEL_CHOICES = {"none": Accel.NONE, "aitken": Accel.AITKEN, "levin": Accel.LEVIN_U, "epsilon": Accel.EPSILON}


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _global_flags(p: argparse.ArgumentParser, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--max-diagonal", type=int, default=d(None), metavar="N", help="largest summation cutoff")
    p.add_argument("--accel", choices=sorted(ACCEL_CHOICES), default=d(None), help="sequence transformation")
    p.add_argument("--tol", type=float, default=d(None), help="verification tolerance")
    p.add_argument("--json", default=d(None), metavar="PATH", help="write a JSON report")
    p.add_argument("--csv", default=d(None), metavar="PATH", help="write a CSV report")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="tornheim-lab", description="Evaluate and cross-check twisted double zeta values.")
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    ev = sub.add_parser("eval", parents=[common], help="evaluate an expression")
    ev.add_argument("expression")

    ver = sub.add_parser("verify", help="check one identity at one parameter point")
    vsub = ver.add_subparsers(dest="identity", required=True, parser_class=_ArgumentParser)

    def leaf(name, *flags, **extra):
        p = vsub.add_parser(name, parents=[common])
        for flag in flags:
            p.add_argument(f"--{flag}", required=True, metavar="EXPR")
        for flag, kw in extra.items():
            p.add_argument(f"--{flag}", **kw)
        return p

    leaf("theorem1", "a", "b", "s", "x", "y")
    leaf("prop1", "a", "b", "x", "y",
         orientation=dict(choices=ORIENTATIONS + ("all",), default="as_printed"))
    leaf("prop2", "a", "b", "phi", "chi", "psi")
    leaf("stuffle", "s1", "s2", "X", "Y")
    leaf("recursion", "a", "b", "s", "x", "y")
    leaf("limit", "a", "b", "s", "y", deltas=dict(required=True, metavar="D1,D2,..."))

    su = sub.add_parser("suite", parents=[common], help="run a parameter grid")
    su.add_argument("name", nargs="?", choices=sorted(DEFAULT_GRIDS), help="built-in grid")
    su.add_argument("--grid", metavar="PATH", help="JSON grid file with identity, params and points")
    su.add_argument("--workers", type=int, default=1)
    su.add_argument("--quiet", action="store_true", help="print only the summary")

    ch = sub.add_parser("characters", parents=[common], help="list the characters of a modulus")
    ch.add_argument("--modulus", type=int, required=True)
    return parser


# -- flag values ------------------------------------------------------------------------


def _exact(text: str):
    """Evaluate a flag through the expression language; the result must be exact."""
    try:
        v = evaluate(parse_expression(text))
    except ExpressionSyntaxError as exc:
        raise UsageError(f"cannot parse {text!r}: {exc}") from None
    if isinstance(v, Fraction):
        return v
    if isinstance(v, ValueWithError) and v.abs_err == 0:
        z = v.value
        return z.real if z.imag == 0 else z
    raise UsageError(f"{text!r} is not an exact number")


def _int(text):
    v = _exact(text)
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    raise UsageError(f"{text!r} is not an integer")


def _exponent(text):
    v = _exact(text)
    if isinstance(v, Fraction):
        return int(v) if v.denominator == 1 else float(v)
    return v


def _twist(text):
    v = _exact(text)
    if isinstance(v, complex):
        raise UsageError(f"twist {text!r} must be real")
    return v


def _config(args) -> SummationConfig:
    kw = {}
    if args.max_diagonal is not None:
        kw["max_diagonal"] = args.max_diagonal
    if args.accel is not None:
        kw["accel"] = ACCEL_CHOICES[args.accel]
    try:
        return SummationConfig(**kw)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# -- commands ---------------------------------------------------------------------------


def _value_dict(v: ValueWithError) -> dict:
    return {"re": sig10(v.value.real), "im": sig10(v.value.imag), "abs_err": sig10(v.abs_err)}


def cmd_eval(args, cfg) -> int:
    try:
        ast = parse_expression(args.expression)
    except ExpressionSyntaxError as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        raw = evaluate(ast, cfg)
        value = as_value(raw)
    except (DomainError, NonConvergent, ArithmeticError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        if args.json:
            _write(args.json, json.dumps({"expression": args.expression, "error": f"{type(exc).__name__}: {exc}"},
                                         indent=2) + "\n")
        return EXIT_FAIL
    exact = isinstance(raw, Fraction)
    suffix = " (exact)" if exact else f" +/- {format_number(value.abs_err)} ({value.terms} terms)"
    shown = f"{raw.numerator}/{raw.denominator}" if exact and raw.denominator != 1 else format_number(value.value)
    print(f"{shown}{suffix}")
    if args.json:
        out = {"expression": args.expression, "value": _value_dict(value), "terms_used": value.terms}
        _write(args.json, json.dumps(out, indent=2) + "\n")
    return EXIT_OK


def _verify_call(args, cfg):
    ident, tol = args.identity, args.tol
    if ident == "theorem1":
        p = dict(a=_int(args.a), b=_int(args.b), s=_exponent(args.s), x=_twist(args.x), y=_twist(args.y))
        return p, lambda: [verify_theorem1(**p, cfg=cfg, tol=tol)]
    if ident == "prop1":
        p = dict(a=_int(args.a), b=_int(args.b), x=_twist(args.x), y=_twist(args.y))
        orients = ORIENTATIONS if args.orientation == "all" else (args.orientation,)
        return p, lambda: [verify_prop1(**p, cfg=cfg, orientation=o, tol=tol) for o in orients]
    if ident == "prop2":
        try:
            chars = {k: parse_character_ref(getattr(args, k)) for k in ("phi", "chi", "psi")}
        except DomainError as exc:
            raise UsageError(str(exc)) from None
        p = dict(a=_int(args.a), b=_int(args.b), **chars)
        return p, lambda: [verify_prop2(**p, cfg=cfg, tol=tol)]
    if ident == "stuffle":
        p = dict(s1=_exponent(args.s1), s2=_exponent(args.s2), X=_twist(args.X), Y=_twist(args.Y))
        return p, lambda: [verify_stuffle(**p, cfg=cfg, tol=tol)]
    if ident == "recursion":
        p = dict(a=_int(args.a), b=_int(args.b), s=_exponent(args.s), x=_twist(args.x), y=_twist(args.y))
        return p, lambda: [verify_recursion(**p, cfg=cfg, tol=tol)]
    deltas = [float(_twist(d)) for d in args.deltas.split(",") if d.strip()]
    p = dict(a=_int(args.a), b=_int(args.b), s=_exponent(args.s), y=_twist(args.y))
    return p, lambda: [verify_limit_report(**p, deltas=deltas, cfg=cfg)]


def cmd_verify(args, cfg) -> int:
    params, run = _verify_call(args, cfg)
    try:
        reports = run()
    except (TornheimError, ArithmeticError) as exc:
        name = {"limit": "limit_xy"}.get(args.identity, args.identity)
        tol = DEFAULT_TOL.get(name, 0.0) if args.tol is None else args.tol
        if args.identity == "prop1" and args.orientation != "all":
            name = f"prop1_{args.orientation}"
        reports = [skipped_report(name, params, f"{type(exc).__name__}: {exc}", tol)]
    for r in reports:
        print(r.line())
        if r.detail:
            for d, m in zip(r.detail["deltas"], r.detail["magnitudes"]):
                print(f"  delta={format_number(d)} |product|={format_number(m)}")
    _emit(args, reports)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_suite(args, cfg) -> int:
    if (args.name is None) == (args.grid is None):
        raise UsageError("give exactly one of a built-in grid name or --grid PATH")
    if args.grid:
        try:
            with open(args.grid, encoding="utf-8") as fh:
                grid = GridSpec.from_dict(json.load(fh))
        except (OSError, ValueError, KeyError) as exc:
            raise UsageError(f"cannot read grid {args.grid!r}: {exc}") from None
    else:
        base = DEFAULT_GRIDS[args.name]
        grid = GridSpec(base.identity, dict(base.params), list(base.points), base.tol, dict(base.options))
    if args.tol is not None:
        grid.tol = args.tol
    try:
        result = run_suite(grid, cfg, workers=max(1, args.workers))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not args.quiet:
        for r in result.reports:
            print(r.line())
    print("summary: " + json.dumps(result.summary, sort_keys=True))
    _emit(args, result.reports)
    return EXIT_OK if result.all_pass else EXIT_FAIL


def cmd_characters(args, cfg) -> int:
    try:
        chars = characters_mod(args.modulus)
    except DomainError as exc:
        raise UsageError(str(exc)) from None
    k = args.modulus
    rows = []
    print(f"modulus {k}: {len(chars)} characters")
    for c in chars:
        table = {n: ("0" if c.phase(n) is None else str(c.phase(n))) for n in range(k)}
        units = " ".join(f"{n}:{table[n]}" for n in range(k) if c.phase(n) is not None)
        print(f"  {c.ref:>7s}  parity {c.parity:+d}  conductor {c.conductor:>3d}  "
              f"{'primitive' if c.is_primitive else 'imprimitive':11s}  order {c.order:>3d}  phases {units}")
        rows.append({"ref": c.ref, "modulus": k, "index": c.index, "parity": c.parity, "conductor": c.conductor,
                     "primitive": c.is_primitive, "order": c.order,
                     "values": [{"re": sig10(z.real), "im": sig10(z.imag)} for z in c.values]})
    if args.json:
        _write(args.json, json.dumps(rows, indent=2) + "\n")
    return EXIT_OK


def _write(path, text):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _emit(args, reports):
    if args.json:
        _write(args.json, reports_to_json(reports))
    if args.csv:
        _write(args.csv, reports_to_csv(reports))


COMMANDS = {"eval": cmd_eval, "verify": cmd_verify, "suite": cmd_suite, "characters": cmd_characters}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config(args)
        return COMMANDS[args.command](args, cfg)
    except UsageError as exc:
        print(f"tornheim-lab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit:
        raise
    except Exception as exc:  # internal error
        print(f"tornheim-lab: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
