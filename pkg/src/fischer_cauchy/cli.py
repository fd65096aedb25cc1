"""fischer-cauchy: solve, certify and survey mixed Cauchy problems ``L(P q) = f``.

Usage:
    fischer-cauchy solve problem.json [--max-degree N] [--out report.json]
    fischer-cauchy wellposed problem.json [--out report.json]
    fischer-cauchy ellipticity divisor.json [--resolution R] [--out report.json]
    fischer-cauchy identities [--grid small|default|large]
    fischer-cauchy survey divisor.json [--m-max M] [--samples S] [--seed K]

Exit codes: 0 success, 1 input error, 2 singular degree / not elliptic,
3 identity failure, 4 inconclusive ellipticity or nonzero residual.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import io
from .ellipticity import (
    ELLIPTIC,
    NOT_ELLIPTIC,
    TransformInvalid,
    b_elliptic_check,
    identity_form,
    wave_substitution,
)
from .harmonic import min_eigenvalue_e
from .identities import GRIDS, run_all
from .polynomials import LinearChange
from .solver import SingularDegree, check_wellposed, solve_series
from .surveys import harmonic_ratio_sequence, lower_bound_survey

EXIT_OK, EXIT_INPUT, EXIT_SINGULAR, EXIT_IDENTITY, EXIT_UNSETTLED = 0, 1, 2, 3, 4

log = logging.getLogger("fischer_cauchy")


def _load(path: str):
    try:
        return json.loads(Path(path).read_text())
    except FileNotFoundError:
        raise io.InputError(f"no such file: {path}")
    except json.JSONDecodeError as exc:
        raise io.InputError(f"malformed JSON in {path}: {exc}")


def _emit(doc, out: str | None):
    text = io.dumps(doc)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _certificate_doc(c) -> dict:
    return {
        "m": c.m,
        "invertible": c.invertible,
        "det": io.report_coeff(c.det),
        "lower_ratio": io.report_float(c.lower_ratio),
        "rf_norm_sq": io.report_coeff(c.rf_norm_sq) if c.rf_norm_sq is not None else None,
    }


def cmd_solve(args) -> int:
    doc = _load(args.problem)
    problem = io.decode_problem(doc, args.max_degree)
    report = io.envelope("solve", doc)
    report["max_degree"] = problem.max_degree
    try:
        sol = solve_series(problem)
    except SingularDegree as exc:
        report.update(
            status="singular",
            singular_degree=exc.m,
            per_degree=[_certificate_doc(c) for c in exc.certificates],
            residual_ok=None,
            radius_estimate=None,
            solution=None,
        )
        _emit(report, args.out)
        log.warning("degree %d is singular: the problem is not well posed", exc.m)
        return EXIT_SINGULAR
    report.update(
        status="solved" if sol.residual_ok else "residual_failed",
        singular_degree=None,
        regime=sol.regime,
        per_degree=[_certificate_doc(c) for c in sol.per_degree],
        residual_ok=sol.residual_ok,
        radius_estimate=io.report_float(sol.radius_estimate),
        solution=io.report_series(sol.solution),
        solution_text=sol.solution.to_text(),
    )
    _emit(report, args.out)
    return EXIT_OK if sol.residual_ok else EXIT_UNSETTLED


def cmd_wellposed(args) -> int:
    doc = _load(args.problem)
    problem = io.decode_problem(doc, args.max_degree)
    certs = check_wellposed(problem)
    singular = [c.m for c in certs if not c.invertible]
    report = io.envelope("wellposed", doc)
    report.update(
        max_degree=problem.max_degree,
        well_posed=not singular,
        singular_degrees=singular,
        per_degree=[_certificate_doc(c) for c in certs],
    )
    _emit(report, args.out)
    return EXIT_SINGULAR if singular else EXIT_OK


def cmd_ellipticity(args) -> int:
    doc = _load(args.divisor)
    io.validate(doc, io.ELLIPTICITY_SCHEMA)
    n = doc["n"]
    P = io.decode_poly(doc["divisor"], n, "divisor")
    if "imaginary_axes" in doc:
        P = wave_substitution(P, doc["imaginary_axes"])
    B = io.decode_matrix(doc["B"], n, "B") if "B" in doc else identity_form(n)
    try:
        A = LinearChange(tuple(map(tuple, io.decode_matrix(doc["A"], n, "A")))) if "A" in doc else LinearChange.identity(n)
    except ValueError as exc:
        raise io.InputError(f"'A': {exc}")
    resolution = args.resolution or doc.get("resolution", 4096)
    try:
        cert = b_elliptic_check(P, B, A, resolution)
    except TransformInvalid as exc:
        raise io.InputError(f"'A' does not normalise 'B': {exc}")
    report = io.envelope("ellipticity", doc)
    report.update(
        verdict=cert.verdict,
        real_on_reals=cert.real_on_reals,
        delta_grid_min=io.report_float(cert.delta_grid_min),
        delta_lower=io.report_float(cert.delta_lower),
        resolution=cert.resolution,
        resolution_needed=cert.resolution_needed,
        witness=cert.witness,
        nonreal_coefficient=cert.nonreal_coefficient,
        transformed=io.report_poly(cert.transformed),
        transformed_text=cert.transformed.to_text(),
        notes=cert.notes,
    )
    _emit(report, args.out)
    if cert.verdict == ELLIPTIC:
        return EXIT_OK
    return EXIT_SINGULAR if cert.verdict == NOT_ELLIPTIC else EXIT_UNSETTLED


def cmd_identities(args) -> int:
    results = run_all(args.grid)
    width = max(len(r.name) for r in results)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status}  {r.name:<{width}}  checks={r.checks:<6d} {r.seconds:7.2f}s")
        if not r.passed:
            print(f"      counterexample: {r.counterexample}")
    return EXIT_OK if all(r.passed for r in results) else EXIT_IDENTITY


def cmd_survey(args) -> int:
    doc = _load(args.divisor)
    io.validate(doc, io.DIVISOR_SCHEMA)
    n = doc["n"]
    P = io.decode_poly(doc["divisor"], n, "divisor")
    if P.degree % 2:
        raise io.InputError("'divisor' must have even degree 2p")
    p = doc.get("p", P.degree // 2)
    if 2 * p != P.degree:
        raise io.InputError(f"'p' = {p} does not match divisor degree {P.degree}")
    cert = b_elliptic_check(P, identity_form(n), LinearChange.identity(n), 4096) if n in (2, 3) and P.is_real() else None
    if cert is None or cert.verdict != ELLIPTIC:
        log.warning("divisor is not certified elliptic; ratios may vanish")
    rows = lower_bound_survey(P, p, n, args.m_max, args.samples, args.seed)
    report = io.envelope("survey", doc)
    report.update(
        seed=args.seed,
        samples=args.samples,
        prng="numpy.random.default_rng (PCG64)",
        p=p,
        elliptic=cert.verdict if cert else "unchecked",
        lower_bounds=[
            {
                "m": r["m"],
                "e_pm": io.rational_str(min_eigenvalue_e(p, r["m"], n)),
                "min_sampled_ratio": io.report_float(r["min_sampled_ratio"]),
                "operator_min_ratio": io.report_float(r["operator_min_ratio"]),
            }
            for r in rows
        ],
        harmonic_ratios=[io.report_float(v) for v in harmonic_ratio_sequence(p, n, args.harmonic_m_max)] if n >= 2 else None,
    )
    _emit(report, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fischer-cauchy", description=__doc__.split("\n")[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve L(Pq)=f degree by degree")
    p.add_argument("problem")
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--out")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("wellposed", help="per-degree invertibility certificates")
    p.add_argument("problem")
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--out")
    p.set_defaults(func=cmd_wellposed)

    p = sub.add_parser("ellipticity", help="(B-)ellipticity certificate for a divisor")
    p.add_argument("divisor")
    p.add_argument("--resolution", type=int, default=None)
    p.add_argument("--out")
    p.set_defaults(func=cmd_ellipticity)

    p = sub.add_parser("identities", help="run the exact identity suites")
    p.add_argument("--grid", choices=sorted(GRIDS), default="default")
    p.set_defaults(func=cmd_identities)

    p = sub.add_parser("survey", help="empirical lower-bound constants for Delta^p(P .)")
    p.add_argument("divisor")
    p.add_argument("--m-max", type=int, default=10)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--harmonic-m-max", type=int, default=20)
    p.add_argument("--out")
    p.set_defaults(func=cmd_survey)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except io.InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
