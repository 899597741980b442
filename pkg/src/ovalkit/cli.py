"""ovalkit command line.

    ovalkit analyze CURVE.json
    ovalkit equidistant CURVE.json --lambda 0.4
    ovalkit sweep CURVE.json --lambda-range 0.05:0.95:19
    ovalkit stability CURVE.json
    ovalkit family 3 --spec-out m7.json
    ovalkit render CURVE.json --lambda 0.5 --lambda 0.4 --wigner-type --out fig.svg

Exit codes: 0 ok, 2 parse/validation error, 3 failed inequality, 4 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import tempfile
from dataclasses import dataclass, field
from pathlib import Path

from . import equidistants as eqd
from . import inequalities as ineq
from . import stability as stab
from .errors import BoundViolation, NonConvexCurve, NotConstantWidth, ParseError
from .formatting import decimal, quantity, symbolic, text_line
from .geometry import sample_curve
from .support_fourier import FourierSupport, curve_spec, loads_curve_spec
from .svg import Stroke, render_svg

SCHEMA = 1
DEFAULT_SAMPLES = 4096
SAMPLES_ENV = "OVALKIT_SAMPLES"
CSV_COLUMNS = ("lambda", "oriented_area", "lower_bound", "upper_bound", "cusp_count", "length_estimate")
EQUIDISTANT_COLORS = ("#c0392b", "#2471a3", "#1e8449", "#7d3c98", "#b9770e")

EXIT_OK, EXIT_INPUT, EXIT_MATH, EXIT_IO = 0, 2, 3, 4


@dataclass
class AnalysisRun:
    input_path: str | None
    command: str
    options: dict
    outputs: list[str] = field(default_factory=list)


def default_samples() -> int:
    raw = os.environ.get(SAMPLES_ENV)
    if raw is None:
        return DEFAULT_SAMPLES
    try:
        value = int(raw)
    except ValueError:
        raise ParseError(f"{SAMPLES_ENV} must be an integer, got {raw!r}") from None
    if value < 8:
        raise ParseError(f"{SAMPLES_ENV} must be >= 8")
    return value


def read_curve(path: str) -> FourierSupport:
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return loads_curve_spec(text)


def write_atomic(path: str | Path, text: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        # mkstemp creates 0600; give the result the usual umask-derived mode
        umask = os.umask(0)
        os.umask(umask)
        os.chmod(tmp, 0o666 & ~umask)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def dump_json(obj: dict) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


# -- reports ---------------------------------------------------------------

def analyze_report(support: FourierSupport, tol: float) -> dict:
    m = ineq.curve_metrics(support)
    check = ineq.improved_isoperimetric_check(m)
    cw = ineq.is_constant_width(support, tol)
    sq = m.length ** 2
    report = {
        "schema": SCHEMA,
        "command": "analyze",
        "curve": curve_spec(support),
        "min_rho": support.min_rho,
        "metrics": {
            "length": quantity(m.length),
            "area": quantity(m.area),
            "psi": quantity(m.psi),
            "wigner_area": quantity(m.wigner_area, sq),
            "classic_deficit": quantity(m.classic_deficit, sq),
            "improved_deficit": quantity(m.improved_deficit, sq),
            "phi": quantity(stab.phi(support), sq),
        },
        "constant_width": cw,
        "barbier": None,
        "improved_inequality": {
            "holds": check.holds,
            "equality": check.equality,
            "margin": quantity(check.margin, sq),
        },
    }
    if cw:
        b = ineq.barbier_check(support, tol)
        report["barbier"] = {
            "width": quantity(b.width),
            "length": quantity(b.length),
            "residual": b.residual,
            "area_identity_residual": ineq.constant_width_area_identity(support, tol),
        }
    return report


def analyze_text(r: dict) -> str:
    lines = ["curve metrics"]
    for name, q in r["metrics"].items():
        sym = q["symbolic"]
        line = f"  {name:<24}{decimal(q['value'])}"
        lines.append(f"{line}  = {sym}" if sym is not None else line)
    lines.append(f"  {'min_rho':<24}{decimal(r['min_rho'])}")
    lines.append(f"  {'constant_width':<24}{r['constant_width']}")
    ii = r["improved_inequality"]
    lines.append("improved isoperimetric inequality")
    lines.append(f"  {'holds':<24}{ii['holds']}")
    lines.append(f"  {'equality':<24}{ii['equality']}")
    if r["barbier"] is not None:
        b = r["barbier"]
        lines.append("barbier")
        lines.append("  " + text_line("width", b["width"]["value"], width=24))
        lines.append("  " + text_line("length", b["length"]["value"], width=24))
        lines.append(f"  {'residual':<24}{decimal(b['residual'])}")
        lines.append(f"  {'area_identity_residual':<24}{decimal(b['area_identity_residual'])}")
    return "\n".join(lines) + "\n"


def equidistant_reports(support: FourierSupport, lambdas: list[float], samples: int) -> dict:
    out = []
    for lam in lambdas:
        rep = eqd.equidistant_report(support, lam, samples)
        out.append({
            "lambda": rep.lam,
            "is_wigner": rep.is_wigner,
            "oriented_area": quantity(rep.oriented_area, support.a0 ** 2),
            "length_estimate": rep.length_estimate,
            "degenerate": rep.degenerate,
            "cusp_count": len(rep.cusp_thetas),
            "cusp_thetas": list(rep.cusp_thetas),
        })
    return {"schema": SCHEMA, "command": "equidistant", "curve": curve_spec(support),
            "equidistants": out}


def equidistant_text(r: dict) -> str:
    lines = []
    for e in r["equidistants"]:
        title = "wigner caustic" if e["is_wigner"] else "equidistant"
        lines.append(f"{title} lambda={decimal(e['lambda'])}")
        q = e["oriented_area"]
        line = f"  {'oriented_area':<24}{decimal(q['value'])}"
        lines.append(f"{line}  = {q['symbolic']}" if q["symbolic"] is not None else line)
        lines.append(f"  {'length_estimate':<24}{decimal(e['length_estimate'])}")
        lines.append(f"  {'cusp_count':<24}{e['cusp_count']}{' (degenerate)' if e['degenerate'] else ''}")
        for t in e["cusp_thetas"]:
            sym = symbolic(t)
            lines.append(f"    theta = {decimal(t)}" + (f"  = {sym}" if sym else ""))
    return "\n".join(lines) + "\n"


def parse_lambda_range(text: str) -> tuple[float, float, int]:
    try:
        lo, hi, steps = text.split(":")
        lo, hi, steps = float(lo), float(hi), int(steps)
    except ValueError:
        raise ParseError(f"--lambda-range must be lo:hi:steps, got {text!r}") from None
    if not lo < hi or steps < 2:
        raise ParseError("--lambda-range needs lo < hi and steps >= 2")
    return lo, hi, steps


def sweep_rows(support: FourierSupport, lo: float, hi: float, steps: int, samples: int) -> list[dict]:
    """One row per lambda.  At lambda = 1/2 the row holds the caustic's own
    area and bounds (half of the bounds on twice the area)."""
    rows = []
    for k in range(steps):
        lam = round(lo + (hi - lo) * k / (steps - 1), 12)
        b = ineq.bounds_check(support, lam)
        rep = eqd.equidistant_report(support, lam, samples)
        factor = 0.5 if b.regime is ineq.Regime.WIGNER else 1.0
        rows.append({
            "lambda": lam,
            "oriented_area": rep.oriented_area,
            "lower_bound": factor * b.lower,
            "upper_bound": factor * b.upper,
            "cusp_count": len(rep.cusp_thetas),
            "length_estimate": rep.length_estimate,
        })
    return rows


def sweep_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow([
            decimal(row[c]) if isinstance(row[c], float) else row[c] for c in CSV_COLUMNS
        ])
    return buf.getvalue()


def stability_report(support: FourierSupport, tol: float) -> dict:
    r = stab.stability_check(support, tol)
    w = stab.wigner_type_curve(support)
    sq = ineq.length_closed_form(support) ** 2
    return {
        "schema": SCHEMA,
        "command": "stability",
        "curve": curve_spec(support),
        "wigner_type_curve": curve_spec(w),
        "phi": quantity(r.phi, sq),
        "d_inf": r.d_inf,
        "d_2": r.d_2,
        "hausdorff_bound": quantity(4 * math.pi ** 2 * r.d_inf ** 2, sq),
        "l2_bound": quantity(6 * math.pi * r.d_2 ** 2, sq),
        "margin_max": quantity(r.margin_max, sq),
        "margin_l2": quantity(r.margin_l2, sq),
        "equality_class": r.equality_class.value,
    }


def stability_text(r: dict) -> str:
    def q(name: str) -> str:
        sym = r[name]["symbolic"]
        line = f"  {name:<24}{decimal(r[name]['value'])}"
        return f"{line}  = {sym}" if sym is not None else line

    w = r["wigner_type_curve"]
    terms = ", ".join(f"(n={t['n']}, a={decimal(t['a'])}, b={decimal(t['b'])})" for t in w["terms"])
    lines = [
        "stability of the improved isoperimetric inequality",
        f"  {'wigner_type_curve':<24}a0={decimal(w['a0'])} terms=[{terms}]",
        q("phi"),
        f"  {'d_inf':<24}{decimal(r['d_inf'])}",
        f"  {'d_2':<24}{decimal(r['d_2'])}",
        q("hausdorff_bound"),
        q("l2_bound"),
        q("margin_max"),
        q("margin_l2"),
        f"  {'equality_class':<24}{r['equality_class']}",
    ]
    return "\n".join(lines) + "\n"


def family_report(n: int, tol: float) -> dict:
    support = eqd.make_cusp_family(n)
    found = eqd.cusp_parameters(eqd.EquidistantSupport(support, eqd.WIGNER))
    predicted = eqd.predicted_cusp_angles(n)
    b = ineq.barbier_check(support, tol)
    err = max(abs(f - p) for f, p in zip(found, predicted)) if len(found) == len(predicted) else None
    return {
        "schema": SCHEMA,
        "command": "family",
        "n": n,
        "curve": curve_spec(support),
        "constant_width": ineq.is_constant_width(support, tol),
        "width": b.width,
        "barbier_residual": b.residual,
        "cusp_count": len(found),
        "expected_cusp_count": 2 * n + 1,
        "cusp_thetas": found,
        "predicted_thetas": predicted,
        "max_angle_error": err,
    }


def family_text(r: dict) -> str:
    lines = [
        f"cusp family n={r['n']}: p = cos({2 * r['n'] + 1} theta) + {decimal(r['curve']['a0'])}",
        f"  {'constant_width':<24}{r['constant_width']}",
        f"  {'width':<24}{decimal(r['width'])}",
        f"  {'barbier_residual':<24}{decimal(r['barbier_residual'])}",
        f"  {'cusp_count':<24}{r['cusp_count']} (expected {r['expected_cusp_count']})",
        f"  {'max_angle_error':<24}"
        + ("n/a" if r["max_angle_error"] is None else f"{r['max_angle_error']:.3e}"),
    ]
    for f, p in zip(r["cusp_thetas"], r["predicted_thetas"]):
        lines.append(f"    {decimal(f):<20} predicted {symbolic(p) or decimal(p)}")
    return "\n".join(lines) + "\n"


def render_figure(support: FourierSupport, lambdas: list[float], samples: int,
                  wigner_type: bool) -> str:
    layers = [(sample_curve(support, samples), Stroke("black", 2.0, label="oval"))]
    if wigner_type:
        w = stab.wigner_type_curve(support)
        layers.append((sample_curve(w, samples), Stroke("#555555", 1.5, dash="8 5", label="wigner-type")))
    for i, lam in enumerate(lambdas):
        eq = eqd.EquidistantSupport(support, lam)
        poly = eqd.sample_equidistant(eq, samples, single_cover=True)
        color = EQUIDISTANT_COLORS[i % len(EQUIDISTANT_COLORS)]
        layers.append((poly, Stroke(color, 1.5, label=f"lambda={decimal(lam)}")))
    return render_svg(layers)


# -- argument handling -----------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--samples", type=int, default=None,
                        help=f"sampling density (default {DEFAULT_SAMPLES}, or ${SAMPLES_ENV})")
    common.add_argument("--out", default=None, help="write output to this file instead of stdout")
    common.add_argument("--format", choices=("json", "csv", "svg", "text"), default=None)
    common.add_argument("--tol", type=float, default=ineq.CONSTANT_WIDTH_TOL,
                        help="relative tolerance on even harmonics for constant width")

    parser = argparse.ArgumentParser(prog="ovalkit", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    for name, helptext in (("analyze", "length, area, caustic area and inequality margins"),
                           ("stability", "deficit against distance to the Wigner-type curve")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("curve", help="curve-spec JSON file, or - for stdin")

    p = sub.add_parser("equidistant", parents=[common], help="one or more affine equidistants")
    p.add_argument("curve")
    p.add_argument("--lambda", dest="lambdas", type=float, action="append", required=True)

    p = sub.add_parser("sweep", parents=[common], help="area bounds over a range of lambda")
    p.add_argument("curve")
    p.add_argument("--lambda-range", required=True, help="lo:hi:steps")

    p = sub.add_parser("family", parents=[common], help="constant-width curve with 2n+1 caustic cusps")
    p.add_argument("n", type=int)
    p.add_argument("--spec-out", default=None, help="also write the curve spec JSON here")

    p = sub.add_parser("render", parents=[common], help="SVG of the oval and its equidistants")
    p.add_argument("curve")
    p.add_argument("--lambda", dest="lambdas", type=float, action="append")
    p.add_argument("--wigner-type", action="store_true", help="overlay the Wigner-type curve, dashed")
    return parser


def _check_format(args, allowed: tuple[str, ...]) -> str:
    fmt = args.format or allowed[0]
    if fmt not in allowed:
        raise ParseError(f"{args.command} supports --format {'|'.join(allowed)}")
    return fmt


def run(args: argparse.Namespace) -> AnalysisRun:
    samples = args.samples if args.samples is not None else default_samples()
    if samples < 8:
        raise ParseError("--samples must be >= 8")
    samples += samples % 2
    run_info = AnalysisRun(getattr(args, "curve", None), args.command, vars(args).copy())

    if args.command == "analyze":
        fmt = _check_format(args, ("text", "json"))
        r = analyze_report(read_curve(args.curve), args.tol)
        text = dump_json(r) if fmt == "json" else analyze_text(r)
    elif args.command == "equidistant":
        fmt = _check_format(args, ("text", "json"))
        r = equidistant_reports(read_curve(args.curve), args.lambdas, samples)
        text = dump_json(r) if fmt == "json" else equidistant_text(r)
    elif args.command == "sweep":
        fmt = _check_format(args, ("csv", "json"))
        lo, hi, steps = parse_lambda_range(args.lambda_range)
        rows = sweep_rows(read_curve(args.curve), lo, hi, steps, samples)
        if fmt == "csv":
            text = sweep_csv(rows)
        else:
            text = dump_json({"schema": SCHEMA, "command": "sweep", "columns": list(CSV_COLUMNS),
                              "rows": rows})
    elif args.command == "stability":
        fmt = _check_format(args, ("text", "json"))
        r = stability_report(read_curve(args.curve), args.tol)
        text = dump_json(r) if fmt == "json" else stability_text(r)
    elif args.command == "family":
        fmt = _check_format(args, ("text", "json"))
        if args.n < 1:
            raise ParseError("n must be >= 1")
        r = family_report(args.n, args.tol)
        text = dump_json(r) if fmt == "json" else family_text(r)
        if args.spec_out:
            write_atomic(args.spec_out, dump_json(r["curve"]))
            run_info.outputs.append(args.spec_out)
    else:
        _check_format(args, ("svg",))
        lambdas = args.lambdas if args.lambdas else [eqd.WIGNER]
        text = render_figure(read_curve(args.curve), lambdas, samples, args.wigner_type)

    if args.out:
        write_atomic(args.out, text)
        run_info.outputs.append(args.out)
    else:
        sys.stdout.write(text)
    return run_info


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        run(args)
    except (ParseError, NonConvexCurve, NotConstantWidth) as exc:
        print(f"ovalkit: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BoundViolation as exc:
        print(f"ovalkit: inequality violated: {exc}", file=sys.stderr)
        return EXIT_MATH
    except OSError as exc:
        print(f"ovalkit: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
