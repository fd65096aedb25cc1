"""Acceptance gate: one test per criterion, each printing a single PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v``; the summary lines are printed
even without ``-s``.
"""
import time
from contextlib import contextmanager
from fractions import Fraction

import numpy as np
import pytest

from conftest import PROBLEMS
from fischer_cauchy import catalog
from fischer_cauchy.cli import main
from fischer_cauchy.ellipticity import (
    ELLIPTIC,
    b_elliptic_check,
    ellipticity_check,
    identity_form,
    verify_orthogonal_for_sigma,
    wave_substitution,
)
from fischer_cauchy.identities import (
    eigen_identities,
    min_eigenvalue_identities,
    moment_identities,
    norm_identities,
)
from fischer_cauchy.polynomials import GradedSeries, HomPoly, norm_sq_poly, random_hompoly, substitute_linear
from fischer_cauchy.solver import Problem, check_wellposed, solve_series
from fischer_cauchy.surveys import complex_norm_ratio_sequence, harmonic_ratio_sequence


@contextmanager
def criterion(capsys, number, title, limit):
    state = {"ok": False, "detail": ""}
    t0 = time.perf_counter()
    try:
        yield state
    finally:
        dt = time.perf_counter() - t0
        within = limit is None or dt < limit
        ok = state["ok"] and within
        budget = f"< {limit:g}s" if limit else "no limit"
        extra = f"  {state['detail']}" if state["detail"] else ""
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title} ({dt:.2f}s, {budget}){extra}")
        if state["ok"]:
            assert within, f"criterion {number} took {dt:.2f}s, limit {limit}s"


def test_criterion_01_moments(capsys):
    with criterion(capsys, 1, "moment ratio identities, m,k,j,n <= 6", 1.0) as st:
        res = moment_identities(6)
        assert res.passed, res.counterexample
        st.update(ok=True, detail=f"{res.checks} exact checks")


def test_criterion_02_eigen_structure(capsys):
    with criterion(capsys, 2, "F_2p eigen-structure, p,s <= 3, deg h <= 6, n in {2,3}", 10.0) as st:
        res = eigen_identities(max_p=3, max_s=3, max_deg_h=6, dims=(2, 3))
        assert res.passed, res.counterexample
        st.update(ok=True, detail=f"{res.checks} exact checks")


def test_criterion_03_min_eigenvalue(capsys):
    with criterion(capsys, 3, "e_pm = d_p(0,m) = moment form, p <= 3, m <= 12, n <= 4", None) as st:
        res = min_eigenvalue_identities(3, 12, 4)
        assert res.passed, res.counterexample
        st.update(ok=True, detail=f"{res.checks} exact checks")


def test_criterion_04_norm_inequalities(capsys):
    with criterion(capsys, 4, "norm inequalities on 200 random forms, n <= 3, deg <= 10", 60.0) as st:
        res = norm_identities(samples=200, max_degree=10)
        assert res.passed, res.counterexample
        st.update(ok=True, detail=f"{res.checks} exact checks")


def test_criterion_05_complex_real_contrast(capsys):
    with criterion(capsys, 5, "complex-norm ratio positive and stable; real sequence bounded", None) as st:
        rows = complex_norm_ratio_sequence(1, 2, 12)
        ratios = [r["ratio"] for r in rows]
        assert min(ratios) > 0
        tail = ratios[5:]
        assert all(abs(b - a) / a <= 0.10 for a, b in zip(tail, tail[1:]))
        seq = harmonic_ratio_sequence(1, 2, 20)
        assert max(seq) <= 2 * seq[5]
        st.update(ok=True, detail=f"min ratio {min(ratios):.4f}, harmonic max/m5 {max(seq) / seq[5]:.3f}")


def test_criterion_06_worked_solver_examples(capsys, tmp_path):
    with criterion(capsys, 6, "singular product divisor exits 2; q = 1/4; q0 = 1/4, q2 = -|x|^2/64", 3.0) as st:
        t = time.perf_counter()
        assert main(["solve", str(PROBLEMS / "singular_product.json"), "--out", str(tmp_path / "n.json")]) == 2
        assert time.perf_counter() - t < 1
        t = time.perf_counter()
        rep = solve_series(catalog.laplace_norm_divisor())
        assert rep.residual_ok and rep.solution.parts == {0: HomPoly.constant(2, Fraction(1, 4))}
        assert time.perf_counter() - t < 1
        t = time.perf_counter()
        rep = solve_series(catalog.laplace_plus_one())
        assert rep.residual_ok
        assert rep.solution.parts == {
            0: HomPoly.constant(2, Fraction(1, 4)),
            2: norm_sq_poly(2).scale(Fraction(-1, 64)),
        }
        assert time.perf_counter() - t < 1
        st["ok"] = True


def test_criterion_07_xi_example(capsys):
    with criterion(capsys, 7, "xi = 3/4 example: exact transform, delta within 1e-6 of 1/2 at R = 1e5", 5.0) as st:
        xi = Fraction(3, 4)
        A = catalog.xi_matrix(xi)
        P = catalog.xi_quartic(xi)
        assert verify_orthogonal_for_sigma(A)
        assert substitute_linear(P, A.inverse_transpose()) == HomPoly(2, 4, {(4, 0): 1, (0, 4): 1})
        cert = b_elliptic_check(P, identity_form(2), A, 100000)
        assert cert.verdict == ELLIPTIC
        assert abs(cert.delta_grid_min - 0.5) <= 1e-6
        st.update(ok=True, detail=f"grid delta {cert.delta_grid_min:.9f}, certified {cert.delta_lower:.6f}")


def test_criterion_08_wellposed_at_scale(capsys):
    with criterion(capsys, 8, "Delta^2 + a1 d1 + b, P = x1^4 + x2^4, N = 16", 120.0) as st:
        prob = catalog.quartic_divisor_problem(max_degree=16)
        certs = check_wellposed(prob)
        assert all(c.invertible for c in certs)
        rep = solve_series(prob)
        assert rep.residual_ok
        assert max(rep.solution.degrees()) <= 16
        st.update(ok=True, detail=f"{len(certs)} degrees invertible, min lower ratio {min(c.lower_ratio for c in certs):.3f}")


def _corpus():
    return {
        "laplace_norm": catalog.laplace_norm_divisor(),
        "laplace_plus_one": catalog.laplace_plus_one(6),
        "quartic_problem": catalog.quartic_divisor_problem(max_degree=16),
        "wave": catalog.wave_problem(2, 10),
    }


def test_criterion_09_uniqueness(capsys):
    with criterion(capsys, 9, "f = 0 gives q = 0; solution map is degree-triangular", 30.0) as st:
        rng = np.random.default_rng(9)
        checks = 0
        for name, prob in _corpus().items():
            n, N = prob.n, prob.max_degree
            zero = Problem(prob.operator, prob.divisor, GradedSeries.zero(n, prob.rhs.cutoff), N)
            assert solve_series(zero, diagnostics=False).solution.is_zero(), name
            base = solve_series(prob, diagnostics=False).solution
            for m in sorted({0, N // 2, N}):
                bump = GradedSeries(n, prob.rhs.cutoff, {m: random_hompoly(rng, n, m)})
                moved = Problem(prob.operator, prob.divisor, prob.rhs + bump, N)
                q = solve_series(moved, diagnostics=False).solution
                assert all(q.part(j) == base.part(j) for j in range(m)), (name, m)
                assert q.part(m) != base.part(m) or bump.is_zero(), (name, m)
                checks += 1
        st.update(ok=True, detail=f"{len(_corpus())} problems, {checks} perturbations")


def test_criterion_10_wave_pipeline(capsys):
    with criterion(capsys, 10, "wave substitution is elliptic; problem solves through degree 10", None) as st:
        P = wave_substitution(catalog.light_cone_divisor(2), [2])
        assert P == norm_sq_poly(3)
        assert ellipticity_check(P, 256).verdict == ELLIPTIC
        rep = solve_series(catalog.wave_problem(2, 10))
        assert rep.residual_ok and all(c.invertible for c in rep.per_degree)
        assert len(rep.per_degree) == 11
        st["ok"] = True


@pytest.mark.parametrize("name", ["quartic_problem.json", "wave.json", "laplace_plus_one.json"])
def test_corpus_files_solve_through_cli(name, tmp_path):
    out = tmp_path / "r.json"
    assert main(["solve", str(PROBLEMS / name), "--out", str(out)]) == 0
