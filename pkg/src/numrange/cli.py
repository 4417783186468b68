"""Command line interface.

Subcommands: radius, boundary, poncelet, kms, angles, verify.  Every run
prints a key-sorted JSON report, so identical command lines give
byte-identical output.  Exit codes: 0 success, 1 certification failure,
2 usage error, 3 domain error, 4 I/O error.
"""

from __future__ import annotations

import argparse
import math
import os
import sys

import numpy as np

from .blaschke import BlaschkeProduct
from .errors import NumrangeError
from .kms import kms_eigenvalues, kms_matrix, kms_root_system, real_part_spectrum
from .linalg import hermitian_eig
from .model_operator import compress_shift_adjoint
from .numerical_range import boundary, numerical_radius
from .poncelet import circumscription_check, edge_support_gaps, poncelet_polygon
from .radius import radius_closed_form, radius_single_zero
from .report import RunReport, boundary_csv, boundary_svg
from .subspaces import radius_estimate, sin_angle_lower_bound, subspace_cos_angle
from .verify import SUITES, TOLERANCES

EXIT_OK = 0
EXIT_CERTIFICATION = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_IO = 4


def _complex_arg(text: str) -> complex:
    try:
        re_part, im_part = text.split(",")
        return complex(float(re_part), float(im_part))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected re,im, got {text!r}") from exc


def _zero_arg(text: str) -> tuple[complex, int]:
    body, _, mult = text.partition(":")
    try:
        z = _complex_arg(body)
        m = int(mult) if mult else 1
    except (argparse.ArgumentTypeError, ValueError) as exc:
        raise argparse.ArgumentTypeError(f"expected re,im[:mult], got {text!r}") from exc
    if m < 1:
        raise argparse.ArgumentTypeError(f"multiplicity must be positive, got {m}")
    return z, m


def _thread_cap() -> int:
    raw = os.environ.get("NUMRANGE_THREADS", "0")
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ValueError(f"NUMRANGE_THREADS must be an integer, got {raw!r}") from exc
    if cap < 0:
        raise ValueError(f"NUMRANGE_THREADS must be nonnegative, got {cap}")
    return cap


def _phi_from_args(args) -> BlaschkeProduct:
    zeros = getattr(args, "zero", None)
    alpha = getattr(args, "alpha", None)
    if alpha is not None and zeros:
        raise ValueError("--alpha and --zero are mutually exclusive")
    if alpha is not None:
        return BlaschkeProduct.single_zero(alpha, getattr(args, "n", None) or 1)
    if zeros:
        return BlaschkeProduct(tuple(zeros))
    raise ValueError("specify --alpha re,im [--n N] or at least one --zero re,im[:mult]")


def _phi_inputs(phi: BlaschkeProduct) -> dict:
    return {"zeros": [[z.real, z.imag, m] for z, m in phi.factors], "degree": phi.degree}


def cmd_radius(args) -> tuple[RunReport, int]:
    phi = _phi_from_args(args)
    op = compress_shift_adjoint(phi)
    n = op.n
    eigen = numerical_radius(op.matrix, grid_size=args.grid, refine_tol=args.refine_tol)
    results: dict = {"degree": n, "eigen_radius": eigen}
    if n >= 2:
        results["polygon_floor"] = math.cos(math.pi / n)
    agreement: dict = {}
    if len(phi.factors) == 1:
        zero, _ = phi.factors[0]
        formula = radius_single_zero(zero, n)
        results["formula_radius"] = formula
        agreement["formula_vs_eigen"] = abs(formula - eigen)
        if 2 <= n <= 4:
            closed = radius_closed_form(zero, n)
            results["closed_form_radius"] = closed
            agreement["closed_vs_formula"] = abs(closed - formula)
    elif all(m >= 1 for _, m in phi.factors):
        zs = [z for z, _ in phi.factors]
        distinct = all(
            abs(zs[i] - zs[j]) > 1e-12 for i in range(len(zs)) for j in range(i + 1, len(zs))
        )
        if distinct:
            factors = [BlaschkeProduct.single_zero(z, m) for z, m in phi.factors]
            est = radius_estimate(factors)
            results["estimate"] = {
                "rho": est.rho,
                "delta": est.delta,
                "applicable": est.applicable,
                "bound": est.bound,
            }
    if agreement:
        results["agreement"] = agreement
    inputs = _phi_inputs(phi)
    inputs.update({"grid": args.grid, "refine_tol": args.refine_tol, "threads": _thread_cap()})
    report = RunReport(
        command="radius",
        inputs=inputs,
        results=results,
        tolerances={"radius_agreement": TOLERANCES["radius_agreement"]},
    )
    return report, EXIT_OK


def cmd_boundary(args) -> tuple[RunReport, int]:
    if args.grid < 64:
        raise ValueError("--grid must be at least 64")
    phi = _phi_from_args(args)
    op = compress_shift_adjoint(phi)
    sample = boundary(op.matrix, grid_size=args.grid)
    radii = sample.radii()
    envelope = np.max(
        np.abs(
            sample.points[:, 0] * np.cos(sample.thetas)
            + sample.points[:, 1] * np.sin(sample.thetas)
            - sample.support
        )
    )
    polygon = None
    if args.vertex is not None:
        polygon = poncelet_polygon(op.matrix, args.vertex)
    results = {
        "radius_min": float(radii.min()),
        "radius_max": float(radii.max()),
        "envelope_residual_max": float(envelope),
        "csv": args.csv,
        "svg": args.svg,
    }
    if polygon is not None:
        results["polygon_vertices"] = list(polygon.vertices)
    if args.csv:
        with open(args.csv, "w", encoding="ascii") as fh:
            fh.write(boundary_csv(sample))
    if args.svg:
        with open(args.svg, "w", encoding="ascii") as fh:
            fh.write(boundary_svg(sample, polygon))
    inputs = _phi_inputs(phi)
    inputs.update({"grid": args.grid, "threads": _thread_cap()})
    if args.vertex is not None:
        inputs["vertex"] = args.vertex
    report = RunReport(command="boundary", inputs=inputs, results=results, tolerances={})
    return report, EXIT_OK


def cmd_poncelet(args) -> tuple[RunReport, int]:
    phi = _phi_from_args(args)
    op = compress_shift_adjoint(phi)
    polygon = poncelet_polygon(op.matrix, args.vertex)
    gaps = edge_support_gaps(polygon, op.matrix)
    max_violation = circumscription_check(polygon, op.matrix, grid_size=args.grid)
    results = {
        "vertices": list(polygon.vertices),
        "edge_gaps": list(gaps),
        "max_violation": max_violation,
        "svg": args.svg,
    }
    if args.svg:
        sample = boundary(op.matrix, grid_size=max(args.grid, 64))
        with open(args.svg, "w", encoding="ascii") as fh:
            fh.write(boundary_svg(sample, polygon))
    inputs = _phi_inputs(phi)
    inputs.update({"vertex": args.vertex, "grid": args.grid, "threads": _thread_cap()})
    report = RunReport(
        command="poncelet",
        inputs=inputs,
        results=results,
        tolerances={"circumscription": TOLERANCES["circumscription"]},
    )
    return report, EXIT_OK


def cmd_kms(args) -> tuple[RunReport, int]:
    system = kms_root_system(args.alpha, args.n)
    analytic = kms_eigenvalues(args.alpha, args.n)
    dense = hermitian_eig(kms_matrix(args.alpha, args.n)).values[::-1]
    spectrum = real_part_spectrum(args.alpha, args.n)
    results = {
        "roots": list(system.roots),
        "brackets": [list(b) for b in system.brackets],
        "eigenvalues": list(analytic),
        "dense_delta_max": float(np.max(np.abs(analytic - dense))),
        "real_part_spectrum": list(spectrum),
        "real_part_radius": float(-spectrum[-1]),
    }
    report = RunReport(
        command="kms",
        inputs={"alpha": args.alpha, "n": args.n, "threads": _thread_cap()},
        results=results,
        tolerances={"dense_agreement": 1e-9},
    )
    return report, EXIT_OK


def cmd_angles(args) -> tuple[RunReport, int]:
    if not args.zero or len(args.zero) < 2:
        raise ValueError("need at least two --zero factors")
    factors = [BlaschkeProduct.single_zero(z, m) for z, m in args.zero]
    pairs = []
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            rep = subspace_cos_angle(factors[i], factors[j])
            pairs.append(
                {
                    "i": i,
                    "j": j,
                    "cos_angle": rep.cos_angle,
                    "sin_angle": rep.sin_angle,
                    "sin_lower_bound": sin_angle_lower_bound(factors[i], factors[j]),
                    "truncation": rep.truncation,
                }
            )
    est = radius_estimate(factors)
    proxy = radius_estimate(factors, rho_mode="f-proxy")
    results = {
        "pairs": pairs,
        "estimate": {
            "rho": est.rho,
            "delta": est.delta,
            "applicable": est.applicable,
            "bound": est.bound,
        },
        "estimate_proxy": {
            "rho": proxy.rho,
            "applicable": proxy.applicable,
            "bound": proxy.bound,
        },
    }
    inputs = {
        "zeros": [[z.real, z.imag, m] for z, m in args.zero],
        "threads": _thread_cap(),
    }
    report = RunReport(
        command="angles",
        inputs=inputs,
        results=results,
        tolerances={"sin_bound_slack": TOLERANCES["sin_bound_slack"]},
    )
    return report, EXIT_OK


def cmd_verify(args) -> tuple[RunReport, int]:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    kwargs = {}
    if args.trials is not None:
        kwargs["trials"] = args.trials
    if args.seed is not None:
        kwargs["seed"] = args.seed
    results = {}
    all_passed = True
    for name in names:
        suite = SUITES[name](**kwargs)
        all_passed = all_passed and suite.passed
        results[name] = {
            "trials": suite.trials,
            "seed": suite.seed,
            "passed": suite.passed,
            "failures": suite.failures,
            "records": suite.records,
        }
    report = RunReport(
        command="verify",
        inputs={
            "suite": args.suite,
            "trials": args.trials,
            "seed": args.seed,
            "threads": _thread_cap(),
        },
        results=results,
        tolerances=dict(TOLERANCES),
    )
    return report, EXIT_OK if all_passed else EXIT_CERTIFICATION


def _add_operator_args(sub) -> None:
    sub.add_argument("--alpha", type=_complex_arg, help="single zero as re,im")
    sub.add_argument("--n", type=int, help="multiplicity used with --alpha")
    sub.add_argument(
        "--zero",
        action="append",
        type=_zero_arg,
        help="zero as re,im[:mult]; repeat for products",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="numrange",
        description="Numerical ranges of compressed shifts for finite Blaschke products",
    )
    parser.add_argument("--out", help="also write the JSON report to this path")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("radius", help="numerical radius by several methods")
    _add_operator_args(p)
    p.add_argument("--grid", type=int, default=256)
    p.add_argument("--refine-tol", dest="refine_tol", type=float, default=1e-12)
    p.set_defaults(func=cmd_radius)

    p = sub.add_parser("boundary", help="boundary of the numerical range")
    _add_operator_args(p)
    p.add_argument("--grid", type=int, default=2048)
    p.add_argument("--csv", help="write theta,lambda,x,y rows here")
    p.add_argument("--svg", help="write a static SVG plot here")
    p.add_argument("--vertex", type=_complex_arg, help="overlay the polygon through this unit-circle point")
    p.set_defaults(func=cmd_boundary)

    p = sub.add_parser("poncelet", help="circumscribing polygon through a vertex")
    _add_operator_args(p)
    p.add_argument("--vertex", type=_complex_arg, required=True)
    p.add_argument("--grid", type=int, default=256)
    p.add_argument("--svg", help="write a static SVG plot here")
    p.set_defaults(func=cmd_poncelet)

    p = sub.add_parser("kms", help="Toeplitz root system and spectra")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_kms)

    p = sub.add_parser("angles", help="model space angles and radius estimate")
    p.add_argument(
        "--zero",
        action="append",
        type=_zero_arg,
        help="single-zero factor as re,im[:mult]; repeat at least twice",
    )
    p.set_defaults(func=cmd_angles)

    p = sub.add_parser("verify", help="randomized certification suites")
    p.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_verify)

    return parser


_VALUE_FLAGS = {"--zero", "--alpha", "--vertex"}


def _merge_negative_values(argv: list[str]) -> list[str]:
    """Join flag values starting with a minus sign into --flag=value form so
    argparse does not mistake them for options."""
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if tok in _VALUE_FLAGS and nxt and nxt.startswith("-") and not nxt.startswith("--"):
            out.append(f"{tok}={nxt}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    args = parser.parse_args(_merge_negative_values(argv))
    try:
        report, code = args.func(args)
    except NumrangeError as exc:
        print(f"numrange: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"numrange: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"numrange: {exc}", file=sys.stderr)
        return EXIT_IO
    text = report.to_json()
    sys.stdout.write(text)
    if args.out:
        try:
            with open(args.out, "w", encoding="ascii") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"numrange: {exc}", file=sys.stderr)
            return EXIT_IO
    return code


if __name__ == "__main__":
    sys.exit(main())
