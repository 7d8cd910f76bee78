"""Command-line front end: ``stickel <subcommand> ...``.

Exit codes: 0 success, 2 precondition violation (JSON error object on
stdout), 64 usage error or unknown subcommand, 65 malformed number.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from . import bounds, fermat, stickel, tower
from .charsum import TupleA, gauss_sum, jacobi_sum
from .config import Config, load_config
from .curves import check_conditions, curve_invariants, preset
from .curves.poly import FpPoly, RatFun
from .curves.weierstrass import WeierstrassCurve
from .errors import PreconditionError
from .ff import make_field
from .serialize import dumps, to_jsonable

EXIT_OK, EXIT_PRECONDITION, EXIT_USAGE, EXIT_DATA = 0, 2, 64, 65


class UsageError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        code = EXIT_DATA if ("invalid" in message and "value" in message
                             and "invalid choice" not in message) else EXIT_USAGE
        raise UsageError(message, code)


def _int(text: str) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer value: {text!r}") from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer list value: {text!r}") from None


def _poly_list(text: str) -> list[list[int]]:
    """Comma-separated polynomials, each as space- or colon-separated coefficients (low first)."""
    try:
        return [[int(c) for c in part.replace(":", " ").split()] or [0] for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid polynomial list value: {text!r}") from None


# -- handlers ------------------------------------------------------------------

def _field(args, cfg: Config):
    return make_field(args.p, args.f, table_bound=cfg.fieldTableBound)


def cmd_jacobi(args, cfg):
    return jacobi_sum(_field(args, cfg), TupleA(args.d, tuple(args.a)))


def cmd_gauss(args, cfg):
    ctx = _field(args, cfg)
    g = gauss_sum(ctx, args.a, args.d, exact=args.exact, exact_bound=cfg.exactGaussBound)
    return g if args.exact else {"re": repr(g.real), "im": repr(g.imag)}


def cmd_valuation(args, cfg):
    ctx = _field(args, cfg)
    r = stickel.compare_valuation(ctx, TupleA(args.d, tuple(args.a)), slack=cfg.padicPrecisionSlack)
    return {"q": r.q, "tuple": list(r.tuple.comps), "formula": r.formula, "oracle": r.oracle,
            "precision": r.precision, "agrees": r.agrees}


def cmd_supersingular(args, cfg):
    v = stickel.is_supersingular(args.p, TupleA(args.d, tuple(args.a)))
    return {"p": v.p, "f": v.f, "tuple": list(v.tuple.comps), "supersingular": v.verdict,
            "degenerate": v.degenerate, "per_s": {str(s): x for s, x in v.per_s.items()}}


def cmd_tower_rank(args, cfg):
    return tower.tower_rank(args.p, args.d, workers=cfg.threadCount)


def cmd_verify_nonisol(args, cfg):
    return {"p": args.p, "dmax": args.dmax,
            "results": tower.verify_nonisol(args.p, args.dmax, workers=cfg.threadCount)}


def cmd_fermat_zeta(args, cfg):
    return fermat.zeta_numerator(_field(args, cfg), args.d).to_json(max_k=args.k)


def cmd_fermat_prank(args, cfg):
    return fermat.p_rank(args.p, args.d)


def _curve_from_args(args) -> WeierstrassCurve:
    if args.preset:
        pr = preset(args.preset)
        if pr.p != args.p:
            raise PreconditionError(f"preset {args.preset} is defined over F_{pr.p}, not F_{args.p}")
        return pr.curve
    if args.coeffs is None or len(args.coeffs) != 5:
        raise PreconditionError("need --preset or five --coeffs a1,a2,a3,a4,a6")
    return WeierstrassCurve.from_coeffs(args.p, [FpPoly(args.p, c) for c in args.coeffs])


def cmd_curve(args, cfg):
    E = _curve_from_args(args)
    if args.action == "invariants":
        return {"p": E.p, **curve_invariants(E)}
    if args.action == "check":
        return check_conditions(E)
    if args.point is None or args.n is None:
        raise PreconditionError("curve order needs --point X,Y and --n N")
    if len(args.point) != 2:
        raise PreconditionError("--point takes two polynomials X,Y")
    target = E.frobenius_twist() if args.twist else E
    x, y = (RatFun(FpPoly(E.p, c)) for c in args.point)
    return {"p": E.p, "twist": args.twist, "n": args.n,
            "exact_order": target.point_order(target.point(x, y), args.n)}


def cmd_bounds(args, cfg):
    kind = args.kind
    if kind == "estimate":
        rows = bounds.basic_estimate_scan(range(max(args.dmin, 2), args.dmax + 1), args.n)
        return {"kind": kind, "n": args.n, "rows": rows,
                "polya_vinogradov_constant": bounds.polya_vinogradov_fit(rows)}
    if kind == "delta":
        return {"kind": kind, "n": args.n, "min": bounds.delta_scan(args.dmax, args.n)}
    if kind == "two-di":
        return {"kind": kind, **bounds.two_large_di_check(args.dmax, samples=args.samples, seed=args.seed)}
    if args.p is None:
        raise PreconditionError("lowdeg scan needs --p")
    d_list = args.d or range(max(args.dmin, 3), args.dmax + 1)
    return {"kind": kind, "p": args.p, "n": args.n,
            "rows": bounds.low_degree_valuation_scan(args.p, d_list, args.n)}


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="stickel", description="Jacobi sums, Stickelberger valuations, towers.")
    parser.add_argument("--config", help="flat key=value config file")
    parser.add_argument("--format", choices=("json", "csv"), help="output format override")
    parser.add_argument("--threads", type=_int, help="worker processes override")
    parser.add_argument("--no-timing", action="store_true", help="omit the timing field")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)

    def add(name, fn, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(handler=fn)
        return sp

    def field_args(sp, tuple_arg=True):
        sp.add_argument("--p", type=_int, required=True)
        sp.add_argument("--f", type=_int, default=1)
        sp.add_argument("--d", type=_int, required=True)
        if tuple_arg:
            sp.add_argument("--a", type=_int_list, required=True, help="comma-separated tuple")

    field_args(add("jacobi", cmd_jacobi, "exact Jacobi sum J_q(a)"))
    sp = add("gauss", cmd_gauss, "Gauss sum G_q(a)")
    field_args(sp, tuple_arg=False)
    sp.add_argument("--a", type=_int, required=True)
    sp.add_argument("--exact", action="store_true")
    field_args(add("valuation", cmd_valuation, "formula vs p-adic valuation of J_q(a)"))
    sp = add("supersingular", cmd_supersingular, "supersingularity of a w=2 tuple")
    sp.add_argument("--p", type=_int, required=True)
    sp.add_argument("--d", type=_int, required=True)
    sp.add_argument("--a", type=_int_list, required=True)
    sp = add("tower-rank", cmd_tower_rank, "rank of the tower curve over F_p(t^(1/d))")
    sp.add_argument("--p", type=_int, required=True)
    sp.add_argument("--d", type=_int, required=True)
    sp = add("verify-nonisol", cmd_verify_nonisol, "tower ranks over all S-products d <= dmax")
    sp.add_argument("--p", type=_int, required=True)
    sp.add_argument("--dmax", type=_int, required=True)
    sp = add("fermat-zeta", cmd_fermat_zeta, "zeta numerator data of the Fermat curve")
    field_args(sp, tuple_arg=False)
    sp.add_argument("--k", type=_int, default=1, help="report counts over F_{q^k} for k <= K")
    sp = add("fermat-prank", cmd_fermat_prank, "p-rank of the Fermat curve")
    sp.add_argument("--p", type=_int, required=True)
    sp.add_argument("--d", type=_int, required=True)

    sp = add("curve", cmd_curve, "Weierstrass curves over F_p(t)")
    sp.add_argument("action", choices=("invariants", "check", "order"))
    sp.add_argument("--p", type=_int, required=True)
    sp.add_argument("--preset")
    sp.add_argument("--coeffs", type=_poly_list, help="a1,a2,a3,a4,a6; each 'c0 c1 ...' low first")
    sp.add_argument("--point", type=_poly_list, help="X,Y as polynomials in t")
    sp.add_argument("--n", type=_int)
    sp.add_argument("--no-twist", dest="twist", action="store_false",
                    help="use E itself instead of its Frobenius twist")

    sp = add("bounds", cmd_bounds, "valuation bound scans")
    sp.add_argument("action", choices=("scan",))
    sp.add_argument("--kind", choices=("estimate", "delta", "two-di", "lowdeg"), required=True)
    sp.add_argument("--dmin", type=_int, default=2)
    sp.add_argument("--dmax", type=_int, default=100)
    sp.add_argument("--n", type=_int, default=2)
    sp.add_argument("--p", type=_int)
    sp.add_argument("--d", type=_int_list, help="explicit d list (lowdeg)")
    sp.add_argument("--samples", type=_int, default=4)
    sp.add_argument("--seed", type=_int, default=0)
    return parser


# -- output --------------------------------------------------------------------

def _csv(result) -> str:
    data = to_jsonable(result)
    rows = data.get("rows") if isinstance(data, dict) else None
    if rows is None:
        rows = [data.get("min", data)] if isinstance(data, dict) else data
    flat = [_flatten(r) for r in rows]
    cols = sorted({k for r in flat for k in r})
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
    writer.writeheader()
    writer.writerows(flat)
    return buf.getvalue()


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        out = {}
        for k, v in obj.items():
            out.update(_flatten(v, f"{prefix}{k}."))
        return out
    if isinstance(obj, list):
        return {prefix[:-1]: " ".join(json.dumps(x) if isinstance(x, (dict, list)) else str(x) for x in obj)}
    return {prefix[:-1]: obj}


def main(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(argv)
        if not getattr(args, "handler", None):
            raise UsageError("missing subcommand", EXIT_USAGE)
    except UsageError as exc:
        print(json.dumps({"error": "usage", "message": str(exc)}), file=sys.stderr)
        return exc.code
    try:
        cfg = load_config(args.config)
        if args.threads:
            cfg = Config(**{**cfg.__dict__, "threadCount": args.threads})
        if args.format:
            cfg = Config(**{**cfg.__dict__, "outputFormat": args.format})
        start = time.perf_counter()
        result = args.handler(args, cfg)
        elapsed = time.perf_counter() - start
    except (PreconditionError, ZeroDivisionError) as exc:
        print(dumps({"error": "precondition", "type": type(exc).__name__, "message": str(exc)}),
              file=stdout)
        return EXIT_PRECONDITION
    except OSError as exc:
        print(dumps({"error": "io", "message": str(exc)}), file=stdout)
        return EXIT_PRECONDITION
    if cfg.outputFormat == "csv":
        stdout.write(_csv(result))
        return EXIT_OK
    payload = to_jsonable(result)
    if not args.no_timing and isinstance(payload, dict) and "m" not in payload:
        payload["timing_s"] = round(elapsed, 6)
    print(json.dumps(payload, sort_keys=True, separators=(",", ":")), file=stdout)
    return EXIT_OK


def main_entry() -> None:
    sys.exit(main())
