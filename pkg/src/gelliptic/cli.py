"""Command-line interface: ``gelliptic {eval,qm,table,grid,verify}``.

Exit codes: 0 success, 1 a verification check failed, 2 domain error or
malformed input, 3 an iteration failed to converge.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys

from . import export, mfunc, modulus, quadmod, scmap, specfun
from .errors import DomainError, NoConvergence
from .hyp2f1 import HypParams, f21
from .suites import SUITES

EXIT_OK, EXIT_CHECK, EXIT_DOMAIN, EXIT_NOCONV = 0, 1, 2, 3

_REAL = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_COMPLEX_RE = re.compile(rf"^(?P<re>[+-]?{_REAL})?(?:(?P<sign>[+-])?(?P<im>{_REAL})?(?P<i>i))?$")

COMPLEX_HELP = ("complex literal such as 1+2i, -0.5-1.25i, 3, 2i, i or -i "
                "(no whitespace; the imaginary unit is written i)")


def parse_complex(text: str) -> complex:
    """Parse ``[-]x[.y][(+|-)[u[.v]]i]``; a bare ``i`` means 1i."""
    m = _COMPLEX_RE.match(text or "")
    if not m or not text:
        raise ValueError(f"malformed complex literal {text!r}")
    re_part, sign, im, unit = m.group("re", "sign", "im", "i")
    if unit is None:
        return complex(float(re_part), 0.0)
    if re_part is not None and sign is None:
        # "2i": the real-looking prefix is the imaginary coefficient
        if im is not None:
            raise ValueError(f"malformed complex literal {text!r}")
        sgn = -1.0 if re_part.startswith("-") else 1.0
        mag = re_part.lstrip("+-")
        return complex(0.0, sgn * float(mag))
    coef = float(im) if im is not None else 1.0
    if sign == "-":
        coef = -coef
    return complex(float(re_part) if re_part is not None else 0.0, coef)


def _num(x) -> str:
    return f"{x:.15g}"


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise DomainError(f"--fn {args.fn} requires " + ", ".join("--" + n for n in missing))


def _eval(args) -> dict:
    fn = args.fn
    out = {"value": None, "method": fn, "terms_used": None, "error_estimate": None}
    if fn in ("F", "K", "E"):
        if fn == "F":
            _need(args, "a", "b", "c", "x")
            res = f21(HypParams(args.a, args.b, args.c), args.x)
            scale = 1.0
        else:
            _need(args, "a", "b", "c", "r")
            if not 0 <= args.r <= 1:
                raise DomainError("r must lie in [0, 1]")
            from .elliptic import E_abc, EllipticParams, K_abc
            p = EllipticParams(args.a, args.b, args.c)
            # validates the parameters and raises InfinityAtOne where appropriate
            (K_abc if fn == "K" else E_abc)(p, args.r)
            a = args.a if fn == "K" else args.a - 1
            res = f21(HypParams(a, args.b, args.c), args.r * args.r)
            scale = 0.5 * specfun.beta(args.a, args.b)
        out.update(value=scale * res.value, method=res.method, terms_used=res.terms_used,
                   error_estimate=res.error_estimate)
    elif fn == "mu":
        _need(args, "a", "b", "c", "r")
        out["value"] = modulus.mu(args.a, args.b, args.c, args.r)
    elif fn == "muinv":
        _need(args, "a", "b", "c", "y")
        rep = modulus.mu_inv(args.a, args.b, args.c, args.y)
        out.update(value=rep.r, method="brentq", terms_used=rep.iterations, error_estimate=rep.residual)
    elif fn == "phi":
        _need(args, "a", "b", "c", "K", "r")
        out["value"] = modulus.phi_K(args.a, args.b, args.c, args.K, args.r)
    elif fn == "M":
        _need(args, "a", "b", "c", "x")
        ev = mfunc.m_eval(args.a, args.b, args.c, args.x)
        out.update(value=ev.value, method="contiguous",
                   error_estimate=abs(ev.value - ev.positive) / max(abs(ev.value), 1e-300))
    return out


def cmd_eval(args) -> int:
    out = _eval(args)
    if args.format == "json":
        print(json.dumps({k: export.json_number(v) for k, v in out.items()}))
    else:
        print(_num(out["value"]))
        for k in ("method", "terms_used", "error_estimate"):
            if out[k] is not None:
                print(f"{k} {out[k] if isinstance(out[k], (str, int)) else _num(out[k])}")
    return EXIT_OK


def cmd_qm(args) -> int:
    A, B = parse_complex(args.A), parse_complex(args.B)
    res = quadmod.qm(A, B)
    fields = {k: getattr(res, k) for k in ("modulus", "r", "a", "b", "c", "residual", "iterations")}
    if args.format == "json":
        print(json.dumps({k: export.json_number(v) for k, v in fields.items()}))
    else:
        for k, v in fields.items():
            print(f"{k} {v if isinstance(v, int) else _num(v)}")
        if not res.strict_hypotheses:
            print("note: angles outside the closed-form hypotheses; result from the general formula",
                  file=sys.stderr)
    return EXIT_OK


def cmd_table(args) -> int:
    tab = quadmod.qm_table(args.m, args.n)
    six = lambda v: f"{quadmod.truncate6(float(v)):.6f}"
    if args.format == "csv":
        sys.stdout.write(export.table_to_csv(tab, six))
    elif args.format == "json":
        rows = [[float(six(v)) for v in row] for row in tab]
        print(json.dumps({"m_max": args.m, "n_max": args.n, "values": rows}))
    else:
        for row in tab:
            print(" ".join(six(v) for v in row))
    return EXIT_OK


def cmd_grid(args) -> int:
    p = scmap.SCParams(args.a, args.b, args.c, args.r)
    grid = scmap.grid_image(p, args.n_lines, args.samples)
    text = export.grid_to_svg(grid) if args.format == "svg" else export.grid_to_csv(grid)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    ok = True
    total = failed = 0
    for name in names:
        for rep in SUITES[name](args.seed):
            total += len(rep.checks)
            failed += len(rep.failures)
            ok = ok and rep.passed
            if args.verbose or not rep.passed:
                print(rep)
            else:
                print(rep.title + f": {len(rep.checks)}/{len(rep.checks)} passed")
    print(f"{total - failed}/{total} checks passed")
    return EXIT_OK if ok else EXIT_CHECK


def _real(text: str) -> float:
    v = float(text)
    if not math.isfinite(v):
        raise argparse.ArgumentTypeError(f"expected a finite number, got {text!r}")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gelliptic",
                                 description="Generalized elliptic integrals and quadrilateral moduli.")
    sub = ap.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", help="evaluate F, K, E, mu, mu^-1, phi_K or M")
    e.add_argument("--fn", required=True, choices=["F", "K", "E", "mu", "muinv", "phi", "M"])
    for name in ("a", "b", "c", "x", "r", "y", "K"):
        e.add_argument(f"--{name}", type=_real)
    e.add_argument("--format", choices=["text", "json"], default="text")
    e.set_defaults(run=cmd_eval)

    q = sub.add_parser("qm", help="conformal modulus of the quadrilateral (0, 1, A, B)",
                       epilog="A and B: " + COMPLEX_HELP)
    q.add_argument("--A", required=True, help=COMPLEX_HELP)
    q.add_argument("--B", required=True, help=COMPLEX_HELP)
    q.add_argument("--format", choices=["text", "json"], default="text")
    q.set_defaults(run=cmd_qm)

    t = sub.add_parser("table", help="QM(m+in, i) for m <= M, n <= N, truncated to six decimals",
                       epilog="CSV columns: m, n, modulus")
    t.add_argument("--m", type=int, default=5)
    t.add_argument("--n", type=int, default=5)
    t.add_argument("--format", choices=["text", "csv", "json"], default="text")
    t.set_defaults(run=cmd_table)

    g = sub.add_parser("grid", help="image of a rectangular grid under the Schwarz-Christoffel map",
                       epilog="CSV columns: line_id, point_index, re, im")
    g.add_argument("--a", type=_real, default=0.2)
    g.add_argument("--b", type=_real, default=0.3)
    g.add_argument("--c", type=_real, default=1.0)
    g.add_argument("--r", type=_real, default=0.7)
    g.add_argument("--n-lines", type=int, default=8)
    g.add_argument("--samples", type=int, default=40)
    g.add_argument("--out", help="output file (default stdout)")
    g.add_argument("--format", choices=["svg", "csv"], default="svg")
    g.set_defaults(run=cmd_grid)

    v = sub.add_parser("verify", help="run verification suites; exit 1 if any check fails")
    v.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--verbose", action="store_true", help="print every check")
    v.set_defaults(run=cmd_verify)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_DOMAIN
    try:
        return args.run(args)
    except NoConvergence as exc:
        print(f"gelliptic: no convergence: {exc}", file=sys.stderr)
        return EXIT_NOCONV
    except (DomainError, ValueError, ZeroDivisionError, OverflowError, OSError) as exc:
        print(f"gelliptic: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
