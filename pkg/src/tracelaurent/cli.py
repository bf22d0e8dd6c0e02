"""Deterministic command-line interface over the library.

Usage:
    tracelaurent coeffs --n 2 --theta pi/6 [--method trace|closed|brute] [--verify]
    tracelaurent normal-form --matrix "1+1i,0;0,2"
    tracelaurent roots --n 2 --theta pi/6
    tracelaurent eval --n 2 --theta pi/6 --z 1+0i
    tracelaurent trig --n 2 --theta pi/6
    tracelaurent comb --theta pi/6 --samples 9
    tracelaurent sweep --n 3 --theta-grid 5

Matrices are written "a+bi,c+di;e+fi,g+hi" (rows split by ';', entries by
','). Angles accept decimal radians or the tokens pi/4, pi/6, pi/8, pi/16.
Output is a JSON envelope by default, or CSV rows with --format csv; floats
are printed with 17 significant digits so they re-parse bit-faithfully.
Identical invocations produce byte-identical documents.

Exit codes: 0 success, 2 usage error, 3 domain error (non-generic matrix,
angle out of range, angle at pi/4 for roots), 4 --verify disagreement. The
environment variable TRACE_LAURENT_TOL overrides the default --verify
comparison tolerance 1e-10.
"""

from __future__ import annotations

import argparse
import cmath
import csv
import io
import json
import math
import os
import sys

import numpy as np

from .core import DomainError, LaurentPoly, laurent_close
from .family import (
    DegreeCapError,
    brute_force_coeffs,
    closed_form_coeffs,
    closed_form_eval,
    trace_power_coeffs,
)
from .normal_form import canonical_matrix, normal_form
from .roots import arc_membership, canonical_roots, matrix_roots
from .trig import comb_height, comb_map, interval_system, trig_coeffs, trig_roots, unit_level_roots

__all__ = ["main", "run"]

SCHEMA_VERSION = "1"
_DEFAULT_TOL = 1e-10
_ANGLE_TOKENS = {
    "pi/4": math.pi / 4,
    "pi/6": math.pi / 6,
    "pi/8": math.pi / 8,
    "pi/16": math.pi / 16,
}


class _VerifyMismatch(Exception):
    pass


def _parse_theta(text: str) -> float:
    token = text.strip()
    if token in _ANGLE_TOKENS:
        return _ANGLE_TOKENS[token]
    try:
        value = float(token)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"cannot parse angle {text!r} (decimal radians or pi/4, pi/6, pi/8, pi/16)"
        ) from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"non-finite angle {text!r}")
    return value


def _parse_complex(text: str) -> complex:
    token = text.strip().replace(" ", "")
    try:
        value = complex(token.replace("i", "j").replace("I", "J"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse complex entry {text!r}") from None
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise argparse.ArgumentTypeError(f"non-finite complex entry {text!r}")
    return value


def _parse_matrix(text: str) -> np.ndarray:
    rows = text.strip().split(";")
    if len(rows) != 2:
        raise argparse.ArgumentTypeError(
            f"matrix spec needs 2 rows separated by ';', got {len(rows)}"
        )
    entries = []
    for row in rows:
        cells = row.split(",")
        if len(cells) != 2:
            raise argparse.ArgumentTypeError(
                f"matrix row {row!r} needs 2 comma-separated entries"
            )
        entries.append([_parse_complex(cell) for cell in cells])
    return np.array(entries, dtype=complex)


def _comparison_tol() -> float:
    raw = os.environ.get("TRACE_LAURENT_TOL")
    if raw is None:
        return _DEFAULT_TOL
    try:
        value = float(raw)
    except ValueError:
        raise ValueError(f"invalid TRACE_LAURENT_TOL value {raw!r}") from None
    if not (math.isfinite(value) and value > 0.0):
        raise ValueError(f"TRACE_LAURENT_TOL must be a positive finite number, got {raw!r}")
    return value


def _cjson(value: complex) -> dict:
    return {"re": float(value.real), "im": float(value.imag)}


def _matrix_json(mat) -> list:
    return [[_cjson(complex(mat[i, j])) for j in range(2)] for i in range(2)]


def _envelope(command: str, inputs: dict, data: dict) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "data": data,
    }


def _f(x) -> str:
    return format(float(x), ".17g")


def _coeff_rows(poly: LaurentPoly) -> list[list[str]]:
    return [[str(k), _f(v.real), _f(v.imag)] for k, v in poly.terms()]


def _cmd_coeffs(args):
    tol = _comparison_tol()
    if args.verify and args.theta is None:
        raise ValueError("--verify requires --theta (the cross-check pair is trace vs closed form)")
    n = args.n
    if args.theta is not None:
        mat = canonical_matrix(args.theta)
        if args.method == "trace":
            poly = trace_power_coeffs(n, mat)
        elif args.method == "brute":
            poly = brute_force_coeffs(n, mat)
        else:
            poly = closed_form_coeffs(n, args.theta)
        if args.verify:
            trace_poly = trace_power_coeffs(n, mat)
            closed_poly = closed_form_coeffs(n, args.theta)
            if not laurent_close(trace_poly, closed_poly, tol):
                raise _VerifyMismatch(
                    f"trace and closed-form coefficient tables disagree beyond tolerance {tol}"
                )
    else:
        if args.method == "trace":
            poly = trace_power_coeffs(n, args.matrix)
        elif args.method == "brute":
            poly = brute_force_coeffs(n, args.matrix)
        else:
            nf = normal_form(args.matrix)
            base = closed_form_coeffs(n, nf.angle)
            exponents = np.arange(-n, n + 1)
            poly = LaurentPoly(n, base.coeffs * nf.scale ** n * nf.dilation ** exponents)
    inputs = {
        "n": n,
        "theta": None if args.theta is None else float(args.theta),
        "matrix": None if args.matrix is None else _matrix_json(args.matrix),
        "method": args.method,
        "verify": bool(args.verify),
    }
    data = {"coefficients": [{"k": k, "re": v.real, "im": v.imag} for k, v in poly.terms()]}
    return _envelope("coeffs", inputs, data), ["k", "re", "im"], _coeff_rows(poly)


def _cmd_normal_form(args):
    nf = normal_form(args.matrix)
    inputs = {"matrix": _matrix_json(args.matrix)}
    data = {
        "R": float(nf.scale),
        "rho": float(nf.dilation),
        "theta": float(nf.angle),
        "a_re": float(nf.phase.real),
        "a_im": float(nf.phase.imag),
    }
    header = ["R", "rho", "theta", "a_re", "a_im"]
    rows = [[_f(data["R"]), _f(data["rho"]), _f(data["theta"]), _f(data["a_re"]), _f(data["a_im"])]]
    return _envelope("normal-form", inputs, data), header, rows


def _cmd_roots(args):
    n = args.n
    if args.theta is not None:
        report = canonical_roots(n, args.theta)
        angle = args.theta
        dilation = 1.0
    else:
        nf = normal_form(args.matrix)
        report = matrix_roots(n, args.matrix)
        angle = nf.angle
        dilation = nf.dilation
    entries = []
    for z, res in zip(report.roots, report.residuals):
        # Arc classification is defined on the unit circle; scaled roots are
        # classified through their canonical counterparts.
        label = arc_membership(complex(z) * dilation, angle)
        entries.append({"re": float(z.real), "im": float(z.imag),
                        "residual": float(res), "classification": label})
    inputs = {
        "n": n,
        "theta": None if args.theta is None else float(args.theta),
        "matrix": None if args.matrix is None else _matrix_json(args.matrix),
    }
    data = {"roots": entries, "min_pairwise_gap": float(report.min_pairwise_gap)}
    rows = [[_f(e["re"]), _f(e["im"]), _f(e["residual"]), e["classification"]] for e in entries]
    return _envelope("roots", inputs, data), ["re", "im", "residual", "classification"], rows


def _cmd_eval(args):
    closed = closed_form_eval(args.n, args.theta, args.z)
    by_coeffs = trace_power_coeffs(args.n, canonical_matrix(args.theta)).eval(args.z)
    closed = complex(closed)
    diff = abs(closed - by_coeffs)
    inputs = {"n": args.n, "theta": float(args.theta), "z": _cjson(args.z)}
    data = {
        "closed_form": _cjson(closed),
        "coefficient_eval": _cjson(by_coeffs),
        "abs_difference": float(diff),
    }
    header = ["closed_re", "closed_im", "coeff_re", "coeff_im", "abs_difference"]
    rows = [[_f(closed.real), _f(closed.imag), _f(by_coeffs.real), _f(by_coeffs.imag), _f(diff)]]
    return _envelope("eval", inputs, data), header, rows


def _cmd_trig(args):
    n, theta = args.n, args.theta
    tp = trig_coeffs(n, theta)
    roots = trig_roots(n, theta)
    levels = unit_level_roots(n, theta)
    system = interval_system(theta, -1, 1)
    intervals = system.intervals()
    inputs = {"n": n, "theta": float(theta)}
    data = {
        "cos_coefficients": [{"k": k, "value": float(v)} for k, v in enumerate(tp.cos_coeffs)],
        "roots": [float(t) for t in roots],
        "unit_level_roots": [
            {"t": float(t), "level": level, "multiplicity": mult} for t, level, mult in levels
        ],
        "intervals": [
            {"p": p, "lo": float(lo), "hi": float(hi)}
            for p, (lo, hi) in zip(range(-1, 2), intervals)
        ],
    }
    rows = []
    for k, v in enumerate(tp.cos_coeffs):
        rows.append(["coeff", str(k), _f(v), "", ""])
    for j, t in enumerate(roots):
        rows.append(["root", str(j), _f(t), "", ""])
    for j, (t, level, mult) in enumerate(levels):
        rows.append(["unit_level_root", str(j), _f(t), str(level), str(mult)])
    for p, (lo, hi) in zip(range(-1, 2), intervals):
        rows.append(["interval", str(p), _f(lo), _f(hi), ""])
    return _envelope("trig", inputs, data), ["kind", "index", "a", "b", "c"], rows


def _cmd_comb(args):
    theta, samples = args.theta, args.samples
    if samples < 1:
        raise ValueError("--samples must be >= 1")
    height = comb_height(theta)
    lo, hi = 2.0 * theta, math.pi - 2.0 * theta
    c = math.cos(2.0 * theta)
    entries = []
    for i in range(samples):
        # Interior grid of the period-0 interval; endpoints excluded.
        t = lo + (hi - lo) * (i + 1) / (samples + 1)
        u = comb_map(t, theta)
        residual = abs(cmath.cos(u) - math.cos(t) / c)
        entries.append({"t": float(t), "u_re": float(u.real), "u_im": float(u.imag),
                        "residual": float(residual)})
    inputs = {"theta": float(theta), "samples": samples}
    data = {"height": float(height), "samples": entries}
    rows = [[_f(e["t"]), _f(e["u_re"]), _f(e["u_im"]), _f(e["residual"])] for e in entries]
    return _envelope("comb", inputs, data), ["t", "u_re", "u_im", "residual"], rows


def _cmd_sweep(args):
    n, grid = args.n, args.theta_grid
    if grid < 1:
        raise ValueError("--theta-grid must be >= 1")
    if grid == 1:
        thetas = [0.0]
    else:
        thetas = [j * (math.pi / 4) / (grid - 1) for j in range(grid)]
    tables = []
    rows = []
    for theta in thetas:
        poly = closed_form_coeffs(n, theta)
        tables.append({
            "theta": float(theta),
            "coefficients": [{"k": k, "re": v.real, "im": v.imag} for k, v in poly.terms()],
        })
        for k, v in poly.terms():
            rows.append([_f(theta), str(k), _f(v.real), _f(v.imag)])
    inputs = {"n": n, "theta_grid": grid}
    data = {"tables": tables}
    return _envelope("sweep", inputs, data), ["theta", "k", "re", "im"], rows


_DISPATCH = {
    "coeffs": _cmd_coeffs,
    "normal-form": _cmd_normal_form,
    "roots": _cmd_roots,
    "eval": _cmd_eval,
    "trig": _cmd_trig,
    "comb": _cmd_comb,
    "sweep": _cmd_sweep,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tracelaurent",
        description="Trace-power Laurent family: coefficients, normal forms, roots, and circle data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("json", "csv"), default="json",
                       help="output document format (default json)")

    p = sub.add_parser("coeffs", help="coefficient table of a family member")
    p.add_argument("--n", type=int, required=True, help="degree")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--matrix", type=_parse_matrix, help='matrix spec "a+bi,c+di;e+fi,g+hi"')
    group.add_argument("--theta", type=_parse_theta, help="angle of the canonical matrix")
    p.add_argument("--method", choices=("trace", "closed", "brute"), default="trace")
    p.add_argument("--verify", action="store_true",
                   help="cross-check trace vs closed form; exit 4 on disagreement")
    add_format(p)

    p = sub.add_parser("normal-form", help="normal form parameters of a matrix")
    p.add_argument("--matrix", type=_parse_matrix, required=True)
    add_format(p)

    p = sub.add_parser("roots", help="root localization report")
    p.add_argument("--n", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--matrix", type=_parse_matrix)
    group.add_argument("--theta", type=_parse_theta)
    add_format(p)

    p = sub.add_parser("eval", help="evaluate one family member two ways")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--theta", type=_parse_theta, required=True)
    p.add_argument("--z", type=_parse_complex, required=True)
    add_format(p)

    p = sub.add_parser("trig", help="circle restriction: cosine coefficients and root systems")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--theta", type=_parse_theta, required=True)
    add_format(p)

    p = sub.add_parser("comb", help="comb map samples on the period-0 interval")
    p.add_argument("--theta", type=_parse_theta, required=True)
    p.add_argument("--samples", type=int, required=True)
    add_format(p)

    p = sub.add_parser("sweep", help="coefficient tables over an angle grid")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--theta-grid", dest="theta_grid", type=int, required=True)
    add_format(p)

    return parser


def _render_csv(envelope: dict, header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    buf.write(f"# schema_version={envelope['schema_version']} command={envelope['command']}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def run(argv) -> int:
    """Execute one invocation; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        envelope, header, rows = _DISPATCH[args.command](args)
    except _VerifyMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except DegreeCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "csv":
        sys.stdout.write(_render_csv(envelope, header, rows))
    else:
        sys.stdout.write(json.dumps(envelope, indent=2) + "\n")
    return 0


def main():
    raise SystemExit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
