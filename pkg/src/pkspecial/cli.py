"""Command-line surface: point evaluation, identity audits, table emission.

Exit codes: 0 success (for ``audit``: all corrected forms pass), 1 usage or
row-limit error, 2 domain/pole error, 3 report I/O error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .audit import format_summary, report_to_dict, run_suite, write_report
from .betapsi import (
    BETA_FORMS,
    PSI_SERIES_FORMS,
    BetaArgs,
    beta_closed,
    beta_integral,
    polygamma,
    psi,
    psi_series,
)
from .core import DomainError, PkParams, PoleError, pole_check
from .gamma import (
    gamma_closed,
    gamma_euler_product,
    gamma_integral,
    gamma_limit,
    gamma_weierstrass_recip,
)
from .hyper import (
    DivergentInput,
    HyperParams,
    LowerPoleError,
    MaxTermsExceeded,
    UnsupportedShape,
    confluent_integral,
    hyper_series,
)
from .identities import AuditGrid
from .pochhammer import (
    PochSpec,
    poch_direct,
    poch_gamma_ratio,
    poch_generalized,
    poch_reduce,
    poch_symmetric,
)
from .quadrature import NoConvergence

__all__ = ["main", "build_parser"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_IO = 3

FUNCTIONS = ("gamma", "beta", "psi", "poch", "hyper", "polygamma")

GAMMA_METHODS = ("closed", "limit", "integral", "euler-product", "weierstrass")
POCH_METHODS = ("direct", "symmetric", "reduce", "gamma-ratio", "generalized")


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; the contract here wants 1."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


class CliDomainError(Exception):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pkspecial", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    ev = sub.add_parser("eval", help="evaluate one function at one point")
    ev.add_argument("function", choices=FUNCTIONS)
    _add_point_flags(ev)
    ev.add_argument("--method", default=None, help="evaluation route (per function)")
    ev.add_argument("--form", default=None, help="integral/series form where applicable")
    ev.add_argument("--format", default="text", choices=("text", "json"))
    ev.add_argument("--tol", type=float, default=1e-14, help="series stopping tolerance")

    au = sub.add_parser("audit", help="run an identity suite over a grid")
    au.add_argument("suite", choices=("pochhammer", "gamma", "beta", "psi", "hyper", "all"))
    au.add_argument("--grid", default="default", choices=("default", "small"))
    au.add_argument("--out", default=None, help="write the JSON report here")
    au.add_argument("--format", default="text", choices=("text", "json"))
    au.add_argument(
        "--tol",
        default=None,
        help="per-identity tolerance overrides, e.g. '2.30=1e-9,3.8=1e-6'",
    )

    tb = sub.add_parser("table", help="sweep one variable and emit rows")
    tb.add_argument("function", choices=FUNCTIONS)
    _add_point_flags(tb, sweep=True)
    tb.add_argument("--method", default=None)
    tb.add_argument("--form", default=None)
    tb.add_argument("--format", default="csv", choices=("csv", "json"))
    tb.add_argument("--out", default=None)
    tb.add_argument("--tol", type=float, default=1e-14)
    return parser


def _add_point_flags(p: argparse.ArgumentParser, sweep: bool = False) -> None:
    sweep_note = "; 'a:b:step' sweeps it" if sweep else ""
    p.add_argument("--p", type=float, default=1.0, help="first deformation scale")
    p.add_argument("--k", type=float, default=1.0, help="second deformation scale")
    p.add_argument("--x", default=None, help=f"argument{sweep_note}")
    p.add_argument("--y", default=None, help=f"second argument (beta){sweep_note}")
    p.add_argument("--n", type=int, default=None, help="factor count (poch)")
    p.add_argument("--r", type=int, default=None, help="derivative order (polygamma)")
    p.add_argument("--q", type=int, default=None, help="block count (poch generalized)")
    p.add_argument(
        "--a",
        action="append",
        default=None,
        help="upper triple 'a,p,k' (hyper); repeatable",
    )
    p.add_argument(
        "--b",
        action="append",
        default=None,
        help="lower triple 'b,t,s' (hyper); repeatable",
    )


def _parse_float(label: str, raw) -> float:
    try:
        v = float(raw)
    except (TypeError, ValueError):
        raise CliDomainError(f"{label} must be a finite real, got {raw!r}")
    if not math.isfinite(v):
        raise CliDomainError(f"{label} must be finite, got {raw!r}")
    return v


def _parse_triples(raws, label: str):
    out = []
    for raw in raws or ():
        parts = raw.split(",")
        if len(parts) != 3:
            raise CliDomainError(f"{label} expects 'v,scale,scale', got {raw!r}")
        out.append(tuple(_parse_float(label, s) for s in parts))
    return tuple(out)


def _require(args, name: str) -> float:
    raw = getattr(args, name)
    if raw is None:
        raise CliDomainError(f"--{name} is required for this function")
    return _parse_float(name, raw)


def _eval_point(args, x: float) -> dict:
    """Evaluate args.function at x; returns {value, abs_err, method, ...}."""
    fn = args.function
    params = PkParams(args.p, args.k)
    method = args.method
    if fn == "gamma":
        method = method or "closed"
        if method not in GAMMA_METHODS:
            raise CliDomainError(f"gamma methods are {GAMMA_METHODS}")
        rep = pole_check(params, x)
        if rep.is_pole:
            raise CliDomainError(f"pole at index {rep.pole_index}")
        if method == "closed":
            g = gamma_closed(params, x)
        elif method == "limit":
            g = gamma_limit(params, x, 100_000)
        elif method == "integral":
            g = gamma_integral(params, x)
        elif method == "euler-product":
            g = gamma_euler_product(params, x)
        else:
            recip = gamma_weierstrass_recip(params, x)
            g = type(recip)(
                ln_value=-recip.ln_value,
                sign=recip.sign,
                abs_err_ln=recip.abs_err_ln,
                method=recip.method,
            )
        value = g.value
        return {
            "value": value if math.isfinite(value) else None,
            "abs_err": abs(value) * g.abs_err_ln if math.isfinite(value) else None,
            "ln_value": g.ln_value,
            "sign": g.sign,
            "method": g.method.value,
        }
    if fn == "beta":
        y = _require(args, "y")
        bargs = BetaArgs(x, y, params)
        if args.form:
            if args.form not in BETA_FORMS:
                raise CliDomainError(f"beta forms are {BETA_FORMS}")
            ev = beta_integral(bargs, args.form)
        elif method in (None, "closed"):
            ev = beta_closed(bargs)
        else:
            raise CliDomainError("beta methods: closed, or pass --form for an integral route")
        return {"value": ev.value, "abs_err": ev.abs_err, "method": ev.method.value}
    if fn == "psi":
        if args.form:
            if args.form not in PSI_SERIES_FORMS:
                raise CliDomainError(f"psi series forms are {PSI_SERIES_FORMS}")
            pe = psi_series(params, x, args.form)
            return {"value": pe.value, "abs_err": pe.abs_err, "method": "series"}
        rep = pole_check(params, x)
        if rep.is_pole:
            raise CliDomainError(f"pole at index {rep.pole_index}")
        pe = psi(params, x)
        return {"value": pe.value, "abs_err": pe.abs_err, "method": "closed"}
    if fn == "polygamma":
        r = args.r if args.r is not None else 2
        pe = polygamma(params, x, r)
        return {"value": pe.value, "abs_err": pe.abs_err, "method": "series"}
    if fn == "poch":
        if args.n is None:
            raise CliDomainError("--n is required for poch")
        spec = PochSpec(x, args.n, params)
        method = method or "direct"
        if method == "generalized":
            value = poch_generalized(spec, args.q if args.q is not None else 1)
        else:
            routes = {
                "direct": poch_direct,
                "symmetric": poch_symmetric,
                "reduce": poch_reduce,
                "gamma-ratio": poch_gamma_ratio,
            }
            if method not in routes:
                raise CliDomainError(f"poch methods are {POCH_METHODS}")
            value = routes[method](spec)
        return {"value": value, "abs_err": abs(value) * 1e-15 * (spec.n + 1), "method": method}
    if fn == "hyper":
        hp = HyperParams(
            upper=_parse_triples(args.a, "--a"), lower=_parse_triples(args.b, "--b")
        )
        if method in (None, "series"):
            ev = hyper_series(hp, x, tol=args.tol)
        elif method == "integral":
            ev = confluent_integral(hp, x)
        else:
            raise CliDomainError("hyper methods are ('series', 'integral')")
        return {"value": ev.value, "abs_err": ev.abs_err, "method": ev.method.value}
    raise CliDomainError(f"unknown function {fn!r}")


def _cmd_eval(args) -> int:
    try:
        x = _require(args, "x")
        result = _eval_point(args, x)
    except (CliDomainError, PoleError, DomainError, DivergentInput, LowerPoleError,
            UnsupportedShape, NoConvergence, MaxTermsExceeded) as exc:
        reason = getattr(exc, "reason", str(exc))
        if args.format == "json":
            print(json.dumps({"error": "domain", "reason": reason}))
        else:
            print(f"error: {reason}", file=sys.stderr)
        return EXIT_DOMAIN
    inputs = {"function": args.function, "p": args.p, "k": args.k, "x": x}
    for extra in ("y", "n", "r"):
        v = getattr(args, extra)
        if v is not None:
            inputs[extra] = float(v) if extra == "y" else v
    if args.format == "json":
        print(json.dumps({**result, "inputs": inputs}, sort_keys=True))
    else:
        if result["value"] is None:
            print(f"value   = overflow; ln|value| = {result['ln_value']:.17g}, sign {result['sign']:+d}")
        else:
            print(f"value   = {result['value']:.17g}")
        if result.get("abs_err") is not None:
            print(f"abs_err = {result['abs_err']:.3g}")
        print(f"method  = {result['method']}")
    return EXIT_OK


def _parse_tol_overrides(raw: str | None) -> dict[str, float]:
    if not raw:
        return {}
    out = {}
    for chunk in raw.split(","):
        if "=" not in chunk:
            raise CliDomainError(f"tolerance override needs 'id=value', got {chunk!r}")
        key, val = chunk.split("=", 1)
        out[key.strip()] = _parse_float("tol", val)
    return out


def _cmd_audit(args) -> int:
    try:
        overrides = _parse_tol_overrides(args.tol)
    except CliDomainError as exc:
        print(f"error: {exc.reason}", file=sys.stderr)
        return EXIT_USAGE
    grid = AuditGrid.default() if args.grid == "default" else AuditGrid.small()
    report = run_suite(args.suite, grid, overrides)
    if args.out:
        try:
            write_report(report, args.out)
        except OSError as exc:
            print(f"error: cannot write report: {exc}", file=sys.stderr)
            return EXIT_IO
    if args.format == "json":
        print(json.dumps(report_to_dict(report)["summary"], sort_keys=True, indent=2))
    else:
        print(format_summary(report))
    return EXIT_OK if report.all_corrected_pass else EXIT_DOMAIN


MAX_ROWS = 1_000_000


def _parse_sweep(raw: str) -> list[float]:
    parts = raw.split(":")
    if len(parts) != 3:
        raise CliDomainError(f"sweep expects 'start:stop:step', got {raw!r}")
    a, b, step = (_parse_float("sweep", s) for s in parts)
    if step <= 0:
        raise CliDomainError("sweep step must be positive")
    if b < a:
        raise CliDomainError("sweep range is empty")
    count = int(math.floor((b - a) / step + 1e-9)) + 1
    if count > MAX_ROWS:
        raise CliDomainError(f"sweep would produce {count} rows (limit {MAX_ROWS})")
    return [a + i * step for i in range(count)]


def _cmd_table(args) -> int:
    sweep_var = None
    for name in ("x", "y"):
        raw = getattr(args, name)
        if raw is not None and isinstance(raw, str) and ":" in raw:
            sweep_var = name
            break
    try:
        if sweep_var is None:
            raise CliDomainError("one of --x/--y must be a sweep 'start:stop:step'")
        values = _parse_sweep(getattr(args, sweep_var))
    except CliDomainError as exc:
        print(f"error: {exc.reason}", file=sys.stderr)
        return EXIT_USAGE
    rows = []
    for v in values:
        try:
            if sweep_var == "x":
                result = _eval_point(args, v)
            else:
                args.y = v
                result = _eval_point(args, _require(args, "x"))
        except (CliDomainError, PoleError, DomainError, DivergentInput, LowerPoleError,
                UnsupportedShape, NoConvergence, MaxTermsExceeded) as exc:
            reason = getattr(exc, "reason", str(exc))
            print(f"error at {sweep_var}={v}: {reason}", file=sys.stderr)
            return EXIT_DOMAIN
        value = result["value"] if result["value"] is not None else math.inf * result.get("sign", 1)
        rows.append((v, value, result.get("abs_err") or 0.0))
    try:
        out = sys.stdout if not args.out else open(args.out, "w", encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot open output: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        if args.format == "csv":
            print("x,value,abs_err", file=out)
            for v, val, err in rows:
                print(f"{v:.17g},{val:.17g},{err:.17g}", file=out)
        else:
            payload = [{"x": v, "value": val, "abs_err": err} for v, val, err in rows]
            print(json.dumps(payload), file=out)
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "eval":
        return _cmd_eval(args)
    if args.command == "audit":
        return _cmd_audit(args)
    return _cmd_table(args)


if __name__ == "__main__":
    sys.exit(main())
