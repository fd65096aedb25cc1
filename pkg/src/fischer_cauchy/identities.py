"""Exact identity suites run by ``fischer-cauchy identities`` and the acceptance tests.

Every check is a rational comparison; a suite fails on the first counterexample.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from .fischer import fischer_inner, norm_sq_F, norm_sq_rF, real_fischer_inner
from .harmonic import (
    apply_F,
    eigenvalue_d,
    gauss_decompose,
    harmonic_projection,
    min_eigenvalue_e,
    min_eigenvalue_from_moments,
)
from .numerics import moment_ratio, radial_moment, shifted_moment_ratio
from .polynomials import (
    HomPoly,
    apply_symbol,
    conjugate_coefficients,
    differentiate,
    laplacian,
    monomial_basis,
    multiply,
    norm_sq_poly,
    random_hompoly,
)

GRIDS = {
    # name: (moment bound, random samples, max degree, max p)
    "small": {"moment": 4, "samples": 40, "degree": 6, "p": 2, "m_eig": 8, "n_eig": 3},
    "default": {"moment": 6, "samples": 200, "degree": 10, "p": 3, "m_eig": 12, "n_eig": 4},
    "large": {"moment": 8, "samples": 400, "degree": 12, "p": 3, "m_eig": 16, "n_eig": 5},
}


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    counterexample: str | None = None
    seconds: float = 0.0
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.counterexample is None


def _run(name: str, body: Callable[[SuiteResult], None]) -> SuiteResult:
    res = SuiteResult(name)
    t0 = time.perf_counter()
    body(res)
    res.seconds = time.perf_counter() - t0
    return res


def moment_identities(bound: int = 6) -> SuiteResult:
    def body(res):
        for m in range(1, bound + 1):
            for k in range(1, bound + 1):
                for j in range(1, bound + 1):
                    for n in range(1, bound + 1):
                        lhs = moment_ratio(m, k, j, n)
                        rhs = radial_moment(2 * m + 2 * j * k + n - 1).ratio(radial_moment(2 * m + n - 1))
                        res.checks += 1
                        if lhs != rhs:
                            res.counterexample = f"m={m} k={k} j={j} n={n}: {lhs} != {rhs}"
                            return
        for m in range(41):
            res.checks += 1
            if radial_moment(m + 2).ratio(radial_moment(m)) != Fraction(m + 1, 2):
                res.counterexample = f"I_{{m+2}} != (m+1)/2 I_m at m={m}"
                return

    return _run("moment ratios and recurrence", body)


def eigen_identities(max_p: int = 3, max_s: int = 3, max_deg_h: int = 6, dims=(2, 3), seed: int = 1) -> SuiteResult:
    rng = np.random.default_rng(seed)

    def body(res):
        for n in dims:
            for dh in range(max_deg_h + 1):
                Y = harmonic_projection(random_hompoly(rng, n, dh))
                if Y.is_zero():
                    continue
                for s in range(max_s + 1):
                    f = multiply(norm_sq_poly(n, s), Y)
                    for p in range(1, max_p + 1):
                        res.checks += 1
                        if apply_F(f, p) != f.scale(eigenvalue_d(p, s, dh, n)):
                            res.counterexample = f"n={n} deg h={dh} s={s} p={p}"
                            return

    return _run("eigen-structure of F_2p", body)


def min_eigenvalue_identities(max_p: int = 3, max_m: int = 12, max_n: int = 4) -> SuiteResult:
    def body(res):
        for p in range(1, max_p + 1):
            for m in range(max_m + 1):
                for n in range(1, max_n + 1):
                    e = min_eigenvalue_e(p, m, n)
                    res.checks += 1
                    if e != eigenvalue_d(p, 0, m, n) or e != min_eigenvalue_from_moments(p, m, n):
                        res.counterexample = f"p={p} m={m} n={n}"
                        return
                    if n >= 2:
                        res.checks += 1
                        if min(eigenvalue_d(p, s, m - 2 * s, n) for s in range(m // 2 + 1)) != e:
                            res.counterexample = f"minimality fails at p={p} m={m} n={n}"
                            return

    return _run("minimal eigenvalue e_pm", body)


def _random_forms(samples: int, max_degree: int, seed: int, dims=(1, 2, 3)):
    rng = np.random.default_rng(seed)
    for t in range(samples):
        n = dims[t % len(dims)]
        m = int(rng.integers(0, max_degree + 1))
        yield n, m, random_hompoly(rng, n, m)


def norm_identities(samples: int = 200, max_degree: int = 10, seed: int = 2) -> SuiteResult:
    """Laplacian orthogonality and positivity, both derivative bounds, the |x|^{2k} equality case and the F_{2p} lower bound."""

    def body(res):
        for n, m, f in _random_forms(samples, max_degree, seed):
            lap = laplacian(f)
            nf = norm_sq_F(f)
            nr = norm_sq_rF(f).real()
            # <Delta f, f>_F = 0, <Delta f, f>_rF >= 0
            res.checks += 2
            if fischer_inner(lap, f) != 0:
                res.counterexample = f"<Delta f,f>_F != 0 (n={n}, m={m})"
                return
            v = real_fischer_inner(lap, f).rational_part
            if v.im != 0 or v.re < 0:
                res.counterexample = f"<Delta f,f>_rF = {v} (n={n}, m={m})"
                return
            # derivative bounds for every |alpha| <= 2
            for order in (1, 2):
                for alpha in monomial_basis(n, order):
                    d = differentiate(f, alpha)
                    res.checks += 2
                    if norm_sq_F(d) > m**order * nf:
                        res.counterexample = f"||D^{alpha} f||_F bound (n={n}, m={m})"
                        return
                    if norm_sq_rF(d).real() > (2 * m) ** order * nr:
                        res.counterexample = f"||D^{alpha} f||_rF bound (n={n}, m={m})"
                        return
            # multiplication by |x|^{2k}: equality with the moment ratio
            for k in (1, 2):
                res.checks += 1
                lhs = norm_sq_rF(multiply(norm_sq_poly(n, k), f)).real()
                if lhs != shifted_moment_ratio(2 * m + n - 1, 2 * k) * nr:
                    res.counterexample = f"|| |x|^{2 * k} f ||_rF equality (n={n}, m={m})"
                    return
            # ||F_2p f||_rF >= e_pm ||f||_rF
            for p in (1, 2):
                if m > 8 and p == 2:
                    continue
                res.checks += 1
                e = min_eigenvalue_e(p, m, n)
                if norm_sq_rF(apply_F(f, p)).real() < e * e * nr:
                    res.counterexample = f"F_2p lower bound (n={n}, m={m}, p={p})"
                    return

    return _run("norm inequalities (Laplacian, derivatives, |x|^2k, F_2p)", body)


def adjointness_identities(samples: int = 60, seed: int = 3) -> SuiteResult:
    rng = np.random.default_rng(seed)

    def body(res):
        for t in range(samples):
            n = 1 + t % 3
            kq = int(rng.integers(0, 3))
            mf = int(rng.integers(kq, 7))
            Q = random_hompoly(rng, n, kq)
            f = random_hompoly(rng, n, mf)
            g = random_hompoly(rng, n, mf - kq)
            res.checks += 1
            if fischer_inner(apply_symbol(Q, f), g) != fischer_inner(f, multiply(conjugate_coefficients(Q), g)):
                res.counterexample = f"<Q(D)f,g>_F != <f,Q*g>_F (n={n})"
                return
            # partial integration for rF
            a = random_hompoly(rng, n, int(rng.integers(0, 6)))
            b = random_hompoly(rng, n, int(rng.integers(0, 6)))
            for j in range(n):
                e = [0] * n
                e[j] = 1
                xj = HomPoly.variable(n, j)
                lhs = real_fischer_inner(differentiate(a, e), b) + real_fischer_inner(a, differentiate(b, e))
                rhs = real_fischer_inner(multiply(xj, a), b).scale(2)
                res.checks += 1
                if lhs.rational_part != rhs.rational_part:
                    res.counterexample = f"partial integration identity (n={n}, j={j})"
                    return

    return _run("adjointness and partial integration", body)


def gauss_identities(samples: int = 60, max_degree: int = 10, seed: int = 4) -> SuiteResult:
    def body(res):
        for n, m, f in _random_forms(samples, max_degree, seed, dims=(2, 3)):
            dec = gauss_decompose(f)
            res.checks += 1
            if dec.reconstruct() != f or any(not laplacian(h).is_zero() for _, h in dec.components):
                res.counterexample = f"Gauss decomposition (n={n}, m={m})"
                return
            if gauss_decompose(dec.reconstruct()).components != dec.components:
                res.counterexample = f"Gauss decomposition not unique (n={n}, m={m})"
                return

    return _run("Gauss decomposition", body)


def run_all(grid: str = "default") -> list[SuiteResult]:
    g = GRIDS[grid]
    return [
        moment_identities(g["moment"]),
        eigen_identities(max_p=g["p"], max_deg_h=min(g["degree"], 6)),
        min_eigenvalue_identities(g["p"], g["m_eig"], g["n_eig"]),
        norm_identities(g["samples"], g["degree"]),
        adjointness_identities(max(20, g["samples"] // 4)),
        gauss_identities(max(20, g["samples"] // 4), g["degree"]),
    ]
