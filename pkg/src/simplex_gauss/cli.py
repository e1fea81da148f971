"""Command line interface: ``simplex-gauss <command> ...``.

Every command prints one JSON envelope on stdout
``{schema_version, command, payload, timing}``; diagnostics go to stderr.
Exit codes: 0 success, 1 verification failure or mismatch, 2 input error.
"""

import argparse
import ast
import json
import os
import sys
import time
from fractions import Fraction

from .analysis import gamma_rates, lyapunov_estimate
from .cf1d import cf_expand
from .exactnum import NumberField, NumberFieldError, decimal_string
from .gaussnd.orbit import approx_simplexes, is_nested, orbit
from .gaussnd.system import Symbol, in_base_simplex, monkemeyer_matrices
from .projective import ProjPoint, det, matrix_to_json, simplex_contains
from .verify import SUITES, run_suite, unit_root_interval

SCHEMA_VERSION = "1.0"
DEFAULT_DIGITS = 6
# options whose values may start with '-'
_VALUE_OPTIONS = ("--minpoly", "--root-interval", "--quad")


class InputError(Exception):
    """Bad user input; maps to exit code 2."""


# ---------------------------------------------------------------------------
# coordinate grammar: rational arithmetic in integers and the generator `a`

_BINOPS = {
    ast.Add: lambda x, y: x + y,
    ast.Sub: lambda x, y: x - y,
    ast.Mult: lambda x, y: x * y,
    ast.Div: lambda x, y: x / y,
}


def parse_expression(text, field=None):
    """Parse e.g. ``1-3*a``, ``a^2``, ``3/5 + 1/5*a^2`` or ``a/(1+a)``.

    Returns a Fraction, or a field element when ``a`` occurs.
    """
    text = text.strip()
    if not text:
        raise InputError("empty coordinate expression")
    # '^' becomes '**'; keep a map back to the caller's positions
    src, where = [], []
    for i, ch in enumerate(text):
        src.extend("**" if ch == "^" else ch)
        where.extend([i + 1] * (2 if ch == "^" else 1))
    src = "".join(src)
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as e:
        off = min(max((e.offset or 1) - 1, 0), len(where) - 1)
        raise InputError(f"syntax error at position {where[off]} in {text!r}") from None

    def bad(node, what):
        pos = where[min(node.col_offset, len(where) - 1)]
        return InputError(f"{what} at position {pos} in {text!r}")

    def ev(node):
        if isinstance(node, ast.Constant) and type(node.value) is int:
            return Fraction(node.value)
        if isinstance(node, ast.Name) and node.id == "a":
            if field is None:
                raise InputError(f"{text!r} uses 'a' but no --minpoly/--root-interval was given")
            return field.gen
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp) and isinstance(node.op, ast.Pow):
            base, exp = ev(node.left), ev(node.right)
            if not isinstance(exp, Fraction) or exp.denominator != 1:
                raise bad(node.right, "exponent must be an integer")
            if abs(exp) > 4096:
                raise bad(node.right, "exponent too large")
            if exp < 0 and base == 0:
                raise bad(node, "zero to a negative power")
            return base ** int(exp)
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            left, right = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Div) and right == 0:
                raise bad(node.right, "division by zero")
            return _BINOPS[type(node.op)](left, right)
        raise bad(node, "unsupported term")

    value = ev(tree.body)
    if field is not None and isinstance(value, Fraction):
        return field.const(value)
    return value


def _int_list(text, what):
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise InputError(f"{what} must be comma-separated integers, got {text!r}") from None


def _interval(text):
    parts = text.split(",")
    if len(parts) != 2:
        raise InputError(f"--root-interval needs 'lo,hi', got {text!r}")
    try:
        return Fraction(parts[0].strip()), Fraction(parts[1].strip())
    except (ValueError, ZeroDivisionError):
        raise InputError(f"bad rational in --root-interval {text!r}") from None


def build_field(args):
    if getattr(args, "minpoly", None) is None:
        if getattr(args, "root_interval", None):
            raise InputError("--root-interval needs --minpoly")
        return None
    minpoly = _int_list(args.minpoly, "--minpoly")
    try:
        interval = _interval(args.root_interval) if args.root_interval else unit_root_interval(minpoly)
        return NumberField(minpoly, interval)
    except (NumberFieldError, ValueError) as e:
        raise InputError(str(e)) from None


def build_point(args, field):
    exprs = args.coords
    dim = args.dim
    vals = [parse_expression(e, field) for e in exprs]
    if len(vals) == dim:
        vals.append(field.const(1) if field is not None else Fraction(1))
    elif len(vals) != dim + 1:
        raise InputError(f"dimension {dim} needs {dim} affine or {dim + 1} homogeneous coordinates")
    if field is not None:
        vals = [v if not isinstance(v, Fraction) else field.const(v) for v in vals]
    try:
        p = ProjPoint(tuple(vals))
    except ValueError as e:
        raise InputError(str(e)) from None
    if not in_base_simplex(p):
        raise InputError("point is outside the base simplex w >= x1 >= ... >= xn >= 0")
    return p


def _digits(args):
    if getattr(args, "digits", None) is not None:
        return args.digits
    env = os.environ.get("SIMPLEX_GAUSS_DIGITS")
    if env:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"SIMPLEX_GAUSS_DIGITS must be an integer, got {env!r}") from None
    return DEFAULT_DIGITS


def _state_record(step, state, digits):
    rec = {"step": step, "coords": state.to_json()}
    w = state.coords[-1]
    rec["decimal"] = [decimal_string(c / w, digits) for c in state.coords[:-1]]
    return rec


# ---------------------------------------------------------------------------
# commands; each returns (payload, exit_code)


def cmd_cf(args):
    field = build_field(args)
    x = parse_expression(args.x, field)
    try:
        cf = cf_expand(x, args.max_terms)
    except ValueError as e:
        raise InputError(str(e)) from None
    return cf.to_json(), 0


def _parse_itinerary(text):
    try:
        return [Symbol.parse(s) for s in text.replace(" ", "").split(",") if s]
    except (ValueError, IndexError):
        raise InputError(f"bad itinerary {text!r}; use e.g. 'A3,B1'") from None


def _run_orbit(args):
    field = build_field(args)
    p = build_point(args, field)
    sys_ = monkemeyer_matrices(args.dim)
    return p, orbit(sys_, p, args.max_steps)


def _itinerary_mismatch(args, it):
    if not getattr(args, "expect_itinerary", None):
        return None
    want = [str(s) for s in _parse_itinerary(args.expect_itinerary)]
    got = it.labels()[: len(want)]
    if got != want:
        return {"expected": want, "got": got}
    return None


def cmd_orbit(args):
    p, res = _run_orbit(args)
    digits = _digits(args)
    records = []
    for i, state in enumerate(res.states):
        rec = _state_record(i, state, digits)
        if i < len(res.symbols):
            rec["symbol"] = str(res.symbols[i])
            rec["boundary"] = res.boundary[i]
        records.append(rec)
    it = res.itinerary
    payload = {"dim": args.dim, "records": records, "itinerary": it.to_json()}
    if p.field is not None:
        payload["field"] = p.field.to_json()
    mismatch = _itinerary_mismatch(args, it)
    if mismatch:
        payload["itinerary_mismatch"] = mismatch
    if args.format == "csv":
        lines = ["step,symbol," + ",".join(f"x{i + 1}" for i in range(args.dim))
                 + "," + ",".join(f"exact{i + 1}" for i in range(args.dim + 1))]
        for rec in records:
            lines.append(",".join([str(rec["step"]), rec.get("symbol", "")] + rec["decimal"]
                                  + [f'"{c}"' for c in rec["coords"]]))
        payload = {"csv": "\n".join(lines) + "\n", "itinerary": it.to_json()}
        if mismatch:
            payload["itinerary_mismatch"] = mismatch
    return payload, 1 if mismatch else 0


def cmd_itinerary(args):
    _, res = _run_orbit(args)
    payload = res.itinerary.to_json()
    payload["labels"] = res.itinerary.labels()
    mismatch = _itinerary_mismatch(args, res.itinerary)
    if mismatch:
        payload["itinerary_mismatch"] = mismatch
    return payload, 1 if mismatch else 0


def cmd_approx(args):
    sys_ = monkemeyer_matrices(args.dim)
    p = None
    if args.itinerary:
        prefix = _parse_itinerary(args.itinerary)
        bad = [s for s in prefix if s.family_index >= args.dim]
        if bad:
            raise InputError(f"symbol {bad[0]} does not exist in dimension {args.dim}")
    else:
        if not args.coords:
            raise InputError("give a point or --itinerary")
        p, res = _run_orbit(args)
        prefix = res.symbols[: args.steps]
    if not prefix:
        raise InputError("empty itinerary prefix")
    sims = approx_simplexes(sys_, prefix)
    out = []
    for i, S in enumerate(sims):
        rec = {"n": i + 1, "symbol": str(prefix[i]), "matrix": matrix_to_json(S), "det": det(S)}
        if i:
            rec["nested"] = is_nested(sims[i - 1], S)
        if p is not None:
            rec["contains_point"] = simplex_contains(S, p)
        out.append(rec)
    return {"dim": args.dim, "simplexes": out}, 0


def cmd_gamma(args):
    if args.steps < 1:
        raise InputError("--steps must be at least 1")
    field = build_field(args)
    args.dim = 2
    p = build_point(args, field)
    if p.field is None:
        raise InputError("rational point: the approximating simplexes terminate")
    try:
        table = gamma_rates(monkemeyer_matrices(2), p, args.steps, start=args.start)
    except ValueError as e:
        raise InputError(str(e)) from None
    text = table.to_csv(args.csv_digits)
    payload = {"rows": len(table.rows), "summary": table.summary(), "precision": table.precision}
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        payload["csv_file"] = args.out
    else:
        payload["csv"] = text
    return payload, 0


def cmd_lyapunov(args):
    field = build_field(args)
    x = parse_expression(args.x, field)
    try:
        est = lyapunov_estimate(x, args.N, method=args.method, window=args.window)
    except ValueError as e:
        raise InputError(str(e)) from None
    return est.to_json(), 0


def cmd_verify(args):
    params = {"seed": args.seed}
    for name in ("dim", "samples", "n", "max_den", "scan_bound", "max_len", "steps"):
        v = getattr(args, name)
        if v is not None:
            params[name] = v
    if args.quad:
        params["quad"] = _int_list(args.quad, "--quad")
        if args.root_interval:
            params["root_interval"] = _interval(args.root_interval)
    try:
        report = run_suite(args.suite, **params)
    except (ValueError, NumberFieldError) as e:
        raise InputError(str(e)) from None
    return report.to_json(), 0 if report.passed else 1


# ---------------------------------------------------------------------------


def _add_field(p):
    p.add_argument("--minpoly", help="ascending integer coefficients, e.g. '-1,3,3,1'")
    p.add_argument("--root-interval", help="isolating interval 'lo,hi' (rationals)")


def _add_point(p, dim=True):
    if dim:
        p.add_argument("--dim", type=int, default=2, choices=range(1, 9), metavar="N")
    _add_field(p)
    p.add_argument("coords", nargs="*", help="affine or homogeneous coordinates")


def build_parser():
    parser = argparse.ArgumentParser(prog="simplex-gauss", description=__doc__.splitlines()[0])
    parser.add_argument("--payload-only", action="store_true",
                        help="print the payload without the envelope")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cf", help="continued fraction expansion")
    _add_field(p)
    p.add_argument("x")
    p.add_argument("--max-terms", type=int, default=64)
    p.set_defaults(func=cmd_cf)

    for name, func in (("orbit", cmd_orbit), ("itinerary", cmd_itinerary)):
        p = sub.add_parser(name, help=f"{name} of the first-return map")
        _add_point(p)
        p.add_argument("--max-steps", type=int, default=100)
        p.add_argument("--expect-itinerary")
        if name == "orbit":
            p.add_argument("--format", choices=("json", "csv"), default="json")
            p.add_argument("--digits", type=int)
        p.set_defaults(func=func)

    p = sub.add_parser("approx", help="approximating simplexes")
    _add_point(p)
    p.add_argument("--itinerary")
    p.add_argument("--steps", type=int, default=10)
    p.add_argument("--max-steps", type=int, default=100)
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("gamma", help="approximation-rate table of a 2-dimensional point")
    _add_point(p, dim=False)
    p.add_argument("--steps", type=int, default=50)
    p.add_argument("--start", type=int, default=1)
    p.add_argument("--out")
    p.add_argument("--csv-digits", type=int, default=20)
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("lyapunov", help="finite-N Lyapunov estimate")
    _add_field(p)
    p.add_argument("x")
    p.add_argument("--N", type=int, default=100)
    p.add_argument("--method", choices=("denominator", "derivative"), default="denominator")
    p.add_argument("--window", type=int, default=10)
    p.set_defaults(func=cmd_lyapunov)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--dim", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int)
    p.add_argument("--max-den", type=int)
    p.add_argument("--scan-bound", type=int)
    p.add_argument("--max-len", type=int)
    p.add_argument("--steps", type=int)
    p.add_argument("--quad", help="minimal polynomial of a quadratic irrational")
    p.add_argument("--root-interval")
    p.set_defaults(func=cmd_verify)
    return parser


def _merge_value_options(argv):
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_OPTIONS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None):
    argv = _merge_value_options(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    if args.command == "verify" and args.suite not in SUITES:
        print(f"error: unknown suite {args.suite!r}; choose from {', '.join(SUITES)}",
              file=sys.stderr)
        return 2
    t0 = time.perf_counter()
    try:
        payload, code = args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    elapsed = time.perf_counter() - t0
    if args.payload_only:
        out = payload
    else:
        echo = {k: v for k, v in vars(args).items() if k not in ("func", "payload_only")}
        out = {
            "schema_version": SCHEMA_VERSION,
            "command": echo,
            "payload": payload,
            "timing": {"seconds": round(elapsed, 6)},
        }
    json.dump(out, sys.stdout, separators=(",", ":"))
    sys.stdout.write("\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
