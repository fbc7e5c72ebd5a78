"""Command-line front-end for the Scorer-function library.

Subcommands
-----------
``eval``
    Evaluate Gi, Hi, Ai, or Bi at one point given in Cartesian or polar
    form; emit the result as text, CSV, or JSON.
``table41``
    Recompute the golden reference grid (|z| in {1, 10, 100} crossed with
    phases {pi, 5pi/6, 2pi/3}) by descent-contour quadrature and compare
    against the stored 8-digit reference values, plus the large-argument
    expansion column for the two outer radii.
``arc``
    Sample a function along a circular arc and emit a CSV table.
``selftest``
    Run the library's invariant battery and report per-property pass/fail.
``bench``
    Report quadrature evaluation counts over a radius/phase grid and check
    the expected qualitative cost pattern.

Exit codes: 0 success, 1 usage or I/O error, 2 numerical failure
(non-convergence or golden-value mismatch).
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
import time
from dataclasses import asdict, dataclass

import numpy as np

from . import airy as _airy
from . import engine as _engine
from .contour import DomainError
from .quadrature import NonFiniteIntegrandError, integrate_finite, integrate_semi_infinite

__all__ = ["OutputRecord", "main", "parse_phase"]

_CSV_HEADER = (
    "z_re,z_im,function,value_re,value_im,method,abs_error_estimate,n_evaluations"
)

#: Golden 8-digit reference values for Hi computed by contour quadrature,
#: keyed by (radius, phase label).  The imaginary part is None on the
#: negative real axis, where Hi is real.
_QUADRATURE_REFERENCE: dict[tuple[float, str], tuple[float, float | None]] = {
    (1.0, "pi"): (0.22066961, None),
    (1.0, "5pi/6"): (0.22331566, 6.2133021e-2),
    (1.0, "2pi/3"): (0.23477589, 0.13605894),
    (10.0, "pi"): (3.1768535e-2, None),
    (10.0, "5pi/6"): (2.7597145e-2, 1.5859789e-2),
    (10.0, "2pi/3"): (1.5948003e-2, 2.7622751e-2),
    (100.0, "pi"): (3.1830925e-3, None),
    (100.0, "5pi/6"): (2.7566477e-3, 1.5915439e-3),
    (100.0, "2pi/3"): (1.5915526e-3, 2.7566500e-3),
}

#: Reference values for the large-argument expansion truncated after the
#: 1/z**9 bracket term (three corrections), for the two radii where it is
#: meaningful.  These may legitimately differ from the quadrature values in
#: the trailing digits at radius 10.
_ASYMPTOTIC_REFERENCE: dict[tuple[float, str], tuple[float, float | None]] = {
    (10.0, "pi"): (3.1768528e-2, None),
    (10.0, "5pi/6"): (2.7597137e-2, 1.5859786e-2),
    (10.0, "2pi/3"): (1.5947998e-2, 2.7622742e-2),
    (100.0, "pi"): (3.1830925e-3, None),
    (100.0, "5pi/6"): (2.7566477e-3, 1.5915439e-3),
    (100.0, "2pi/3"): (1.5915526e-3, 2.7566500e-3),
}

_PHASE_LABELS = ("pi", "5pi/6", "2pi/3")


@dataclass(frozen=True)
class OutputRecord:
    """One evaluation result in the shape shared by text, CSV, and JSON."""

    z_re: float
    z_im: float
    function: str
    value_re: float
    value_im: float
    method: str
    abs_error_estimate: float
    n_evaluations: int

    def to_text(self, digits: int) -> str:
        lines = []
        for key, raw in asdict(self).items():
            if isinstance(raw, float):
                lines.append(f"{key} = {raw:.{digits}g}")
            else:
                lines.append(f"{key} = {raw}")
        return "\n".join(lines)

    def to_csv(self) -> str:
        row = (
            f"{self.z_re:.15e},{self.z_im:.15e},{self.function},"
            f"{self.value_re:.15e},{self.value_im:.15e},{self.method},"
            f"{self.abs_error_estimate:.15e},{self.n_evaluations}"
        )
        return f"{_CSV_HEADER}\n{row}"

    def to_json(self) -> str:
        return json.dumps(asdict(self))


_PI_FORM = re.compile(r"^([+-]?(?:\d+\.?\d*|\.\d+)?)pi(?:/((?:\d+\.?\d*|\.\d+)))?$")


def parse_phase(text: str) -> float:
    """Parse a phase in radians, accepting multiples of pi literally.

    Forms like ``pi``, ``-pi``, ``2pi/3``, ``0.5pi`` parse exactly as the
    corresponding float multiple of ``math.pi``; anything else must be a
    plain float.  Exact 'pi' spelling keeps special rays within the sector
    classifier's tolerance.
    """
    squeezed = text.strip().lower().replace(" ", "")
    m = _PI_FORM.match(squeezed)
    if m is None:
        return float(squeezed)
    coef_text = m.group(1)
    if coef_text in ("", "+"):
        coef = 1.0
    elif coef_text == "-":
        coef = -1.0
    else:
        coef = float(coef_text)
    denom = float(m.group(2)) if m.group(2) else 1.0
    return coef * math.pi / denom


def _z_from_polar(radius: float, phase: float) -> complex:
    re_part = radius * math.cos(phase)
    im_part = radius * math.sin(phase)
    # Sub-ulp trigonometric residue (e.g. sin(pi) ~ 1.2e-16) is noise from
    # the polar form, not part of the requested point; snap it away.
    snap = 4.0 * sys.float_info.epsilon * abs(radius)
    if abs(re_part) <= snap:
        re_part = 0.0
    if abs(im_part) <= snap:
        im_part = 0.0
    return complex(re_part, im_part)


def _evaluate(function: str, z: complex) -> _engine.ScorerResult:
    if function == "gi":
        return _engine.gi(z)
    if function == "hi":
        return _engine.hi(z)
    if function == "ai":
        pair, method, n_evals, err = _airy._ai_info(complex(z))
        return _engine.ScorerResult(pair.value, method, err, n_evals)
    if function == "bi":
        pair, method, n_evals, err = _airy._bi_info(complex(z))
        return _engine.ScorerResult(pair.value, method, err, n_evals)
    raise ValueError(f"unknown function {function!r}")


def _record_for(function: str, z: complex) -> tuple[OutputRecord, bool]:
    result = _evaluate(function, z)
    record = OutputRecord(
        z_re=z.real,
        z_im=z.imag,
        function=function,
        value_re=result.value.real,
        value_im=result.value.imag,
        method=result.method,
        abs_error_estimate=result.abs_error_estimate,
        n_evaluations=result.n_evaluations,
    )
    return record, result.converged


def _printed_ulp(reference: float) -> float:
    """Spacing of the last digit of an 8-significant-digit decimal print."""
    return 10.0 ** (math.floor(math.log10(abs(reference))) - 7)


class _Parser(argparse.ArgumentParser):
    """Argument parser whose usage failures exit with code 1, keeping exit
    code 2 reserved for numerical failures."""

    def error(self, message: str) -> None:  # noqa: A003 - argparse API
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> _Parser:
    parser = _Parser(prog="scorerlib", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate a function at one point")
    p_eval.add_argument("--fn", required=True, choices=("gi", "hi", "ai", "bi"))
    p_eval.add_argument("--re", type=float, help="real part (with --im)")
    p_eval.add_argument("--im", type=float, help="imaginary part (with --re)")
    p_eval.add_argument("--r", type=float, help="modulus (with --phase)")
    p_eval.add_argument(
        "--phase", type=parse_phase, help="phase in radians; accepts e.g. 5pi/6"
    )
    p_eval.add_argument("--digits", type=int, default=8, help="text digits (1-15)")
    p_eval.add_argument(
        "--format", choices=("text", "csv", "json"), default="text", dest="fmt"
    )
    p_eval.set_defaults(handler=_cmd_eval)

    p_table = sub.add_parser(
        "table41", help="recompute the golden reference grid and compare"
    )
    p_table.set_defaults(handler=_cmd_table41)

    p_arc = sub.add_parser("arc", help="sample a function along a circular arc")
    p_arc.add_argument("--fn", required=True, choices=("gi", "hi", "ai", "bi"))
    p_arc.add_argument("--radius", type=float, required=True)
    p_arc.add_argument("--start", type=parse_phase, default=0.0)
    p_arc.add_argument("--stop", type=parse_phase, default=math.pi)
    p_arc.add_argument("--samples", type=int, default=181)
    p_arc.add_argument("--out", default="-", help="output path, '-' for stdout")
    p_arc.set_defaults(handler=_cmd_arc)

    p_self = sub.add_parser("selftest", help="run the invariant battery")
    p_self.set_defaults(handler=_cmd_selftest)

    p_bench = sub.add_parser("bench", help="evaluation-count report over a grid")
    p_bench.add_argument("--radii", default="1,10,100", help="comma-separated moduli")
    p_bench.add_argument(
        "--phases",
        default="pi,5pi/6,2pi/3",
        help="comma-separated phases (pi literals allowed)",
    )
    p_bench.set_defaults(handler=_cmd_bench)

    return parser


def _cmd_eval(args: argparse.Namespace) -> int:
    cartesian = args.re is not None or args.im is not None
    polar = args.r is not None or args.phase is not None
    if cartesian and polar:
        print("scorerlib eval: give either --re/--im or --r/--phase, not both",
              file=sys.stderr)
        return 1
    if cartesian:
        if args.re is None or args.im is None:
            print("scorerlib eval: --re and --im must appear together",
                  file=sys.stderr)
            return 1
        z = complex(args.re, args.im)
    elif polar:
        if args.r is None or args.phase is None:
            print("scorerlib eval: --r and --phase must appear together",
                  file=sys.stderr)
            return 1
        z = _z_from_polar(args.r, args.phase)
    else:
        print("scorerlib eval: a point is required (--re/--im or --r/--phase)",
              file=sys.stderr)
        return 1
    if not 1 <= args.digits <= 15:
        print("scorerlib eval: --digits must be between 1 and 15", file=sys.stderr)
        return 1

    record, converged = _record_for(args.fn, z)
    if args.fmt == "csv":
        print(record.to_csv())
    elif args.fmt == "json":
        print(record.to_json())
    else:
        print(record.to_text(args.digits))
    return 0 if converged else 2


def _format_cell(value: float | None) -> str:
    return "  --          " if value is None else f"{value: .7e}"


def _cmd_table41(args: argparse.Namespace) -> int:
    failures = 0
    print("Hi by descent-contour quadrature vs stored 8-digit reference")
    print("radius  phase   part   computed        reference       |diff|     evals")
    start = time.perf_counter()
    asymptotic_rows = []
    for (radius, label), (ref_re, ref_im) in _QUADRATURE_REFERENCE.items():
        z = _z_from_polar(radius, parse_phase(label))
        result = _engine.hi_integral_principal(z)
        checks = [("Re", result.value.real, ref_re)]
        if ref_im is not None:
            checks.append(("Im", result.value.imag, ref_im))
        for part, computed, reference in checks:
            diff = abs(computed - reference)
            ok = diff <= 0.5 * _printed_ulp(reference) and result.converged
            failures += 0 if ok else 1
            flag = "" if ok else "  MISMATCH"
            print(
                f"{radius:6g}  {label:6s}  {part}   {computed: .7e}"
                f"  {_format_cell(reference)}  {diff:.1e}  {result.n_evaluations:5d}"
                f"{flag}"
            )
        if (radius, label) in _ASYMPTOTIC_REFERENCE:
            asymptotic_rows.append((radius, label, z))
    elapsed = time.perf_counter() - start

    print()
    print("Large-argument expansion (three correction terms) vs reference")
    print("radius  phase   part   computed        reference       |diff|")
    for radius, label, z in asymptotic_rows:
        ref_re, ref_im = _ASYMPTOTIC_REFERENCE[(radius, label)]
        result = _engine.hi_asymptotic(z, n_terms=3)
        checks = [("Re", result.value.real, ref_re)]
        if ref_im is not None:
            checks.append(("Im", result.value.imag, ref_im))
        for part, computed, reference in checks:
            diff = abs(computed - reference)
            # The stored prints carry up to one ulp of decimal rounding slop.
            ok = diff <= 1.0 * _printed_ulp(reference)
            failures += 0 if ok else 1
            flag = "" if ok else "  MISMATCH"
            print(
                f"{radius:6g}  {label:6s}  {part}   {computed: .7e}"
                f"  {_format_cell(reference)}  {diff:.1e}{flag}"
            )

    print()
    print(f"quadrature wall time: {elapsed:.3f} s")
    if failures:
        print(f"FAIL: {failures} cell(s) off the stored reference")
        return 2
    print("PASS: all cells match the stored reference")
    return 0


def _cmd_arc(args: argparse.Namespace) -> int:
    if args.samples < 2:
        print("scorerlib arc: --samples must be at least 2", file=sys.stderr)
        return 1
    if not args.radius > 0:
        print("scorerlib arc: --radius must be positive", file=sys.stderr)
        return 1

    lines = ["phase,re_value,im_value"]
    all_converged = True
    step = (args.stop - args.start) / (args.samples - 1)
    for k in range(args.samples):
        phase = args.stop if k == args.samples - 1 else args.start + k * step
        z = _z_from_polar(args.radius, phase)
        result = _evaluate(args.fn, z)
        all_converged = all_converged and result.converged
        lines.append(
            f"{phase:.15e},{result.value.real:.15e},{result.value.imag:.15e}"
        )
    payload = "\n".join(lines) + "\n"

    if args.out == "-":
        sys.stdout.write(payload)
    else:
        try:
            with open(args.out, "w", encoding="utf-8", newline="\n") as stream:
                stream.write(payload)
        except OSError as exc:
            print(f"scorerlib arc: cannot write {args.out}: {exc}", file=sys.stderr)
            return 1
    return 0 if all_converged else 2


def _selftest_checks() -> list[tuple[str, str]]:
    """Run every invariant; return (name, failure detail or '') per check."""
    outcomes: list[tuple[str, str]] = []

    def run(name: str, fn) -> None:
        try:
            detail = fn() or ""
        except Exception as exc:  # a crashed check is a failed check
            detail = f"raised {type(exc).__name__}: {exc}"
        outcomes.append((name, detail))

    def check_origin() -> str:
        g0 = _engine.gi(0.0).value
        h0 = _engine.hi(0.0).value
        worst = max(
            abs(g0 - _engine.GI_AT_ZERO) / _engine.GI_AT_ZERO,
            abs(h0 - 2.0 * g0) / abs(h0),
            abs(_airy.BI_ZERO - 3.0 * g0.real) / _airy.BI_ZERO,
        )
        return "" if worst < 1e-13 else f"origin residual {worst:.2e}"

    def check_conjugate() -> str:
        for radius in (0.7, 1.5, 4.0, 12.0):
            for phase in (0.3, 1.1, 2.0, 2.9):
                z = _z_from_polar(radius, phase)
                for fn in (_engine.gi, _engine.hi):
                    upper = fn(z).value
                    lower = fn(z.conjugate()).value
                    if abs(lower - upper.conjugate()) > 1e-14 * abs(upper):
                        return f"conjugate symmetry broken at {z}"
        return ""

    def check_sum_identity() -> str:
        worst = 0.0
        for radius in (0.5, 1.0, 2.0, 5.0, 8.0):
            for k in range(13):
                z = _z_from_polar(radius, k * math.pi / 12.0)
                g, h = _engine.gi_hi_pair(z)
                b = _airy.bi_complex(z).value
                scale = max(abs(g.value), abs(h.value), abs(b))
                worst = max(worst, abs(g.value + h.value - b) / scale)
        return "" if worst <= 1e-9 else f"sum identity residual {worst:.2e}"

    def check_connection() -> str:
        rot_up = complex(math.cos(2 * math.pi / 3), math.sin(2 * math.pi / 3))
        worst = 0.0
        for radius in (1.0, 3.0, 6.0, 10.0):
            for frac in (0.35, 0.45, 0.55, 0.62):
                z = _z_from_polar(radius, frac * math.pi)
                lhs = _engine.hi(z).value
                rhs = rot_up * _engine.hi(z * rot_up).value + 2.0 * complex(
                    math.cos(-math.pi / 6), math.sin(-math.pi / 6)
                ) * _airy.ai_complex(z * rot_up.conjugate()).value
                worst = max(worst, abs(lhs - rhs) / abs(lhs))
        return "" if worst <= 1e-9 else f"connection residual {worst:.2e}"

    def check_rotation_pair() -> str:
        worst = 0.0
        for radius in (3.0, 5.0, 8.0):
            for frac in (0.08, 0.2, 0.3):
                z = _z_from_polar(radius, frac * math.pi)
                a = _engine.gi_from_hi_rotations(z).value
                b = _engine.gi_integral(z).value
                worst = max(worst, abs(a - b) / abs(b))
            on_axis = _engine.gi_from_hi_rotations(complex(radius, 0.0)).value
            direct = _engine.gi_real_positive(radius).value
            worst = max(worst, abs(on_axis - direct) / abs(direct))
        return "" if worst <= 1e-9 else f"rotation-pair residual {worst:.2e}"

    def check_table() -> str:
        for (radius, label), (ref_re, ref_im) in _QUADRATURE_REFERENCE.items():
            z = _z_from_polar(radius, parse_phase(label))
            value = _engine.hi_integral_principal(z).value
            if abs(value.real - ref_re) > 0.5 * _printed_ulp(ref_re):
                return f"radius {radius} phase {label} Re off reference"
            if ref_im is not None and abs(value.imag - ref_im) > 0.5 * _printed_ulp(
                ref_im
            ):
                return f"radius {radius} phase {label} Im off reference"
        return ""

    def check_asymptotic() -> str:
        for (radius, label), (ref_re, ref_im) in _ASYMPTOTIC_REFERENCE.items():
            z = _z_from_polar(radius, parse_phase(label))
            value = _engine.hi_asymptotic(z, n_terms=3).value
            if abs(value.real - ref_re) > 1.0 * _printed_ulp(ref_re):
                return f"radius {radius} phase {label} Re off reference"
            if ref_im is not None and abs(value.imag - ref_im) > 1.0 * _printed_ulp(
                ref_im
            ):
                return f"radius {radius} phase {label} Im off reference"
        return ""

    def check_cross_routes() -> str:
        z = _z_from_polar(10.0, parse_phase("5pi/6"))
        a = _engine.hi_integral_principal(z).value
        b = _engine.hi_integral_v_form(z).value
        if abs(a - b) > 1e-9 * abs(a):
            return f"u-form vs v-form disagree: {abs(a - b) / abs(a):.2e}"
        z = complex(0.0, 2.0)
        a = _engine.hi_integral_upper(z).value
        b = _engine.hi_connection(z, "upper").value
        if abs(a - b) > 1e-9 * abs(a):
            return f"valley vs connection disagree: {abs(a - b) / abs(a):.2e}"
        z = complex(1.0, 0.2)
        a = _engine.gi_integral(z).value
        b = _engine.gi_from_hi_rotations(z).value
        if abs(a - b) > 1e-9 * abs(a):
            return f"contour vs rotations disagree: {abs(a - b) / abs(a):.2e}"
        return ""

    def check_quadrature() -> str:
        one = integrate_semi_infinite(lambda t: np.exp(-t) + 0.0j, 0.0)
        if abs(one.value - 1.0) > 1e-12:
            return f"exponential tail integral off by {abs(one.value - 1.0):.2e}"
        pi_val = integrate_finite(lambda t: 4.0 / (1.0 + t * t) + 0.0j, 0.0, 1.0)
        if abs(pi_val.value - math.pi) > 1e-12:
            return f"arctangent integral off by {abs(pi_val.value - math.pi):.2e}"
        return ""

    def check_wronskian() -> str:
        worst = 0.0
        for radius in (0.5, 2.0, 5.0, 8.0, 20.0):
            for k in range(7):
                z = _z_from_polar(radius, k * math.pi / 6.0)
                a = _airy.ai_complex(z)
                b = _airy.bi_complex(z)
                wron = a.value * b.derivative - a.derivative * b.value
                scale = max(
                    1.0 / math.pi,
                    abs(a.value) * abs(b.derivative)
                    + abs(a.derivative) * abs(b.value),
                )
                worst = max(worst, abs(wron - 1.0 / math.pi) / scale)
        return "" if worst <= 1e-11 else f"normalized Wronskian residual {worst:.2e}"

    run("origin_closed_forms", check_origin)
    run("conjugate_symmetry", check_conjugate)
    run("sum_identity", check_sum_identity)
    run("rotation_connection", check_connection)
    run("rotation_pair_vs_contour", check_rotation_pair)
    run("golden_table_quadrature", check_table)
    run("golden_table_asymptotic", check_asymptotic)
    run("cross_route_agreement", check_cross_routes)
    run("quadrature_closed_forms", check_quadrature)
    run("airy_wronskian", check_wronskian)
    return outcomes


def _cmd_selftest(args: argparse.Namespace) -> int:
    failures = 0
    for name, detail in _selftest_checks():
        if detail:
            failures += 1
            print(f"FAIL  {name}: {detail}")
        else:
            print(f"PASS  {name}")
    if failures:
        print(f"{failures} check(s) failed")
        return 2
    print("all checks passed")
    return 0


def _hi_by_quadrature(z: complex) -> _engine.ScorerResult:
    """Hi by contour quadrature regardless of engine shortcuts, mirroring
    the golden table's cost profile."""
    phase = abs(math.atan2(z.imag, z.real))
    if phase >= 2.0 * math.pi / 3.0 - 1e-12:
        return _engine.hi_integral_principal(z)
    if z.imag * z.imag >= 3.0 * z.real * z.real:
        return _engine.hi_integral_upper(z)
    return _engine.hi(z)


def _cmd_bench(args: argparse.Namespace) -> int:
    try:
        radii = [float(tok) for tok in args.radii.split(",") if tok]
        phases = [(tok, parse_phase(tok)) for tok in args.phases.split(",") if tok]
    except ValueError as exc:
        print(f"scorerlib bench: bad grid: {exc}", file=sys.stderr)
        return 1
    if not radii or not phases:
        print("scorerlib bench: empty grid", file=sys.stderr)
        return 1

    counts: dict[tuple[float, str], int] = {}
    print("integrand evaluations per point (Hi, contour quadrature)")
    print("radius" + "".join(f"  {label:>18s}" for label, _ in phases))
    for radius in radii:
        cells = []
        for label, phase in phases:
            z = _z_from_polar(radius, phase)
            t0 = time.perf_counter()
            result = _hi_by_quadrature(z)
            dt = (time.perf_counter() - t0) * 1e3
            counts[(radius, label)] = result.n_evaluations
            cells.append(f"  {result.n_evaluations:8d} ({dt:5.1f} ms)")
        print(f"{radius:6g}" + "".join(cells))

    failures = []
    labels = [label for label, _ in phases]
    if "2pi/3" in labels and "5pi/6" in labels:
        for radius in radii:
            stokes = counts[(radius, "2pi/3")]
            off = counts[(radius, "5pi/6")]
            if stokes and off and stokes <= off:
                failures.append(
                    f"radius {radius:g}: Stokes-ray count {stokes} is not above"
                    f" the 5pi/6 count {off}"
                )
    for label in labels:
        if label == "2pi/3" or len(radii) < 2:
            continue
        small, large = counts[(min(radii), label)], counts[(max(radii), label)]
        if large > small:
            failures.append(
                f"phase {label}: count grew from {small} at radius {min(radii):g}"
                f" to {large} at radius {max(radii):g}"
            )

    print()
    if failures:
        for line in failures:
            print(f"FAIL  {line}")
        return 2
    print("PASS  cost pattern: Stokes ray is the most expensive phase in each row;")
    print("      off-Stokes cost does not grow with the radius")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 0
    try:
        return args.handler(args)
    except (DomainError, NonFiniteIntegrandError, ValueError) as exc:
        print(f"scorerlib: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"scorerlib: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
