"""Command-line front end: ``wdk solve``, ``wdk validate`` and ``wdk radii``.

Exit codes: 0 certified, 1 converged without certificate (or a failed
validation), 2 degenerate or out of iterations, 3 bad input.
"""
from __future__ import annotations

import argparse
import json
import logging
import math
import sys
from pathlib import Path
from typing import Optional, Sequence

from .core_math import PExponent, p_norm
from .errors import NotCertifiableError, WDKError
from .gauge import GaugeParams, radius_local1, radius_local2, radius_semi
from .local_theory import check_local1, check_local2, check_local3
from .polynomial import Polynomial, from_roots
from .solver import SolveOptions, SolveReport, solve

log = logging.getLogger(__name__)

EXIT_CERTIFIED = 0
EXIT_UNCERTIFIED = 1
EXIT_FAILED = 2
EXIT_INPUT = 3

_STATUS_EXIT = {
    "certified_converged": EXIT_CERTIFIED,
    "converged_uncertified": EXIT_UNCERTIFIED,
    "max_iter_reached": EXIT_FAILED,
    "degenerate": EXIT_FAILED,
}


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage, which would collide with "degenerate"
    def error(self, message):
        raise InputError(message)


def parse_complex(token: str) -> complex:
    """``"1.5"``, ``"-2i"``, ``"1+2i"`` or ``"1-2j"``."""
    t = token.strip().lower().replace(" ", "").replace("i", "j")
    if not t:
        raise InputError("empty number")
    try:
        z = complex(t)
    except ValueError:
        raise InputError(f"cannot parse number {token!r}") from None
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise InputError(f"non-finite number {token!r}")
    return z


def parse_vector(text: str) -> tuple:
    return tuple(parse_complex(tok) for tok in text.split(","))


def load_coefficients(path: str) -> tuple:
    """Read ``{"coefficients": [[re, im], ...]}``; bare reals are accepted too."""
    try:
        data = json.loads(Path(path).read_text())
        raw = data["coefficients"]
        out = []
        for c in raw:
            if isinstance(c, (list, tuple)):
                re, im = c
                out.append(complex(float(re), float(im)))
            else:
                out.append(complex(float(c)))
        return tuple(out)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise InputError(f"cannot read coefficients from {path}: {exc}") from None


def _parse_p(text: str) -> PExponent:
    try:
        return PExponent.parse(text)
    except WDKError as exc:
        raise InputError(str(exc)) from None


def _num(x: float):
    # JSON has no inf/nan
    return float(x) if math.isfinite(x) else None


def _pair(z: complex) -> list:
    return [_num(z.real), _num(z.imag)]


def report_to_dict(report: SolveReport, include_trace: bool = False) -> dict:
    cert = report.certificate
    out = {
        "status": report.status,
        "degree": report.degree,
        "p": report.p.label(),
        "iterations": report.iterations,
        "certified_at": report.certified_at,
        "roots": [_pair(z) for z in report.roots],
    }
    if cert is not None:
        out["certificate"] = {
            "e0": _num(cert.e0),
            "lambda": _num(cert.lam),
            "theta": _num(cert.theta),
            "rho": [_num(r) for r in cert.rho],
            "passed": cert.passed,
            "quadratic": cert.quadratic,
            "index": cert.index,
        }
    if report.disks is not None:
        out["disks"] = [{"center": _pair(d.center), "radius": _num(d.radius)} for d in report.disks]
    if include_trace:
        tr = report.trace
        out["trace"] = {
            "offset": tr.offset,
            "iterates": [[_pair(z) for z in x] for x in tr.iterates],
            "corrections": [[_pair(z) for z in w] for w in tr.corrections],
            "e_values": [_num(e) for e in tr.e_values],
        }
        out["bounds"] = [{"kind": b.kind, "k": b.k, "values": [_num(v) for v in b.values]}
                         for b in tr.bound_history]
    return out


def emit_json(report: SolveReport, include_trace: bool = False) -> bytes:
    return (json.dumps(report_to_dict(report, include_trace), indent=2) + "\n").encode()


def _fmt(x: float) -> str:
    return "%.17g" % x


def _fmt_c(z: complex) -> str:
    return f"{_fmt(z.real)} {'+' if z.imag >= 0 else '-'} {_fmt(abs(z.imag))}i"


def print_report(report: SolveReport, out=None) -> None:
    out = out or sys.stdout
    print(f"status: {report.status}", file=out)
    print(f"degree: {report.degree}  p: {report.p.label()}  iterations: {report.iterations}", file=out)
    cert = report.certificate
    if cert is not None:
        where = f" (at iterate {cert.index})" if cert.index else ""
        print(f"certificate{where}: E={_fmt(cert.e0)} lambda={_fmt(cert.lam)} theta={_fmt(cert.theta)} "
              f"passed={cert.passed} quadratic={cert.quadratic}", file=out)
        print(f"rho: ||rho||_p={_fmt(p_norm(cert.rho, cert.p))}", file=out)
    print("roots:", file=out)
    for z in report.roots:
        print(f"  {_fmt_c(z)}", file=out)
    if report.disks is not None:
        print("disks:", file=out)
        for d in report.disks:
            print(f"  |z - ({_fmt_c(d.center)})| <= {_fmt(d.radius)}", file=out)


def _cmd_solve(args) -> int:
    if (args.coeffs is None) == (args.input is None):
        raise InputError("give exactly one of --coeffs or --input")
    coeffs = parse_vector(args.coeffs) if args.coeffs is not None else load_coefficients(args.input)
    f = Polynomial(coeffs).require_degree(2)
    x0 = parse_vector(args.x0) if args.x0 else None
    if x0 is not None and len(x0) != f.degree:
        raise InputError(f"--x0 needs {f.degree} values, got {len(x0)}")
    opts = SolveOptions(p=_parse_p(args.p), tol=args.tol, max_iter=args.max_iter, mode=args.mode,
                        require_certificate=args.require_certificate)
    try:
        report = solve(f, x0, opts)
    except NotCertifiableError as exc:
        print(f"not certifiable: {exc}", file=sys.stderr)
        return EXIT_UNCERTIFIED
    print_report(report)
    if args.json:
        blob = emit_json(report, include_trace=args.trace)
        if args.json == "-":
            sys.stdout.write(blob.decode())
        else:
            Path(args.json).write_bytes(blob)
    return _STATUS_EXIT[report.status]


def _cmd_validate(args) -> int:
    roots = parse_vector(args.roots)
    x0 = parse_vector(args.x0)
    if len(roots) != len(x0):
        raise InputError("--roots and --x0 must have the same length")
    if len(roots) < 2:
        raise InputError("need at least two roots")
    f = from_roots(roots)
    p = _parse_p(args.p)
    if args.theorem == "local1":
        rep = check_local1(f, roots, x0, p, steps=args.steps)
    elif args.theorem == "local1_h":
        if args.h is None:
            raise InputError("local1_h needs --h")
        rep = check_local1(f, roots, x0, p, h=args.h, steps=args.steps)
    elif args.theorem == "local2":
        rep = check_local2(f, roots, x0, p, steps=args.steps)
    else:
        rep = check_local3(f, roots, x0, p, c_tag=args.c, sigma=args.sigma, steps=args.steps)
    print(f"theorem: {rep.theorem}")
    print(f"condition: {_fmt(rep.condition_value)}  threshold: {_fmt(rep.threshold)}  satisfied: {rep.satisfied}")
    theta = "" if rep.theta is None else f"  theta: {_fmt(rep.theta)}"
    print(f"lambda: {_fmt(rep.lam)}{theta}  quadratic: {rep.quadratic}")
    print(f"estimates hold: {sum(rep.per_step_ok)}/{len(rep.per_step_ok)} steps")
    for name, flag in rep.flags.items():
        print(f"{name}: {flag}")
    return EXIT_CERTIFIED if rep.all_ok else EXIT_UNCERTIFIED


def _cmd_radii(args) -> int:
    if args.n < 2:
        raise InputError("--n must be >= 2")
    gp = GaugeParams(args.n, _parse_p(args.p))
    print(f"local1={_fmt(radius_local1(gp).value)}")
    print(f"local2={_fmt(radius_local2(gp).value)}")
    print(f"semilocal={_fmt(radius_semi(gp).value)}")
    return EXIT_CERTIFIED


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wdk", description="Certified simultaneous root finding with the Weierstrass iteration.")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("solve", help="find all zeros of a polynomial")
    s.add_argument("--coeffs", help='coefficients, highest degree first, e.g. "1,0,-1" or "1,2+1i,3"')
    s.add_argument("--input", help='JSON file {"coefficients": [[re, im], ...]}')
    s.add_argument("--p", default="inf", help="norm exponent: 1, 2, any value >= 1, or inf")
    s.add_argument("--tol", type=float, default=1e-12)
    s.add_argument("--max-iter", type=int, default=100)
    s.add_argument("--mode", choices=("one_point", "two_point"), default="one_point")
    s.add_argument("--x0", help="starting vector (default: points on a circle)")
    s.add_argument("--require-certificate", action="store_true", help="fail unless x0 passes the semilocal test")
    s.add_argument("--json", metavar="OUT", help='write a JSON report ("-" for stdout)')
    s.add_argument("--trace", action="store_true", help="include iterates and bounds in the JSON report")
    s.set_defaults(func=_cmd_solve)

    v = sub.add_parser("validate", help="check a local convergence theorem against known zeros")
    v.add_argument("--roots", required=True)
    v.add_argument("--x0", required=True)
    v.add_argument("--theorem", required=True, choices=("local1", "local1_h", "local2", "local3"))
    v.add_argument("--p", default="inf")
    v.add_argument("--h", type=float)
    v.add_argument("--c", choices=("quadratic", "rational"), default="quadratic")
    v.add_argument("--sigma", type=float, default=0.5)
    v.add_argument("--steps", type=int, default=20)
    v.set_defaults(func=_cmd_validate)

    r = sub.add_parser("radii", help="print the convergence radii for given n and p")
    r.add_argument("--n", type=int, required=True)
    r.add_argument("--p", default="inf")
    r.set_defaults(func=_cmd_radii)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
        return args.func(args)
    except (InputError, WDKError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())
