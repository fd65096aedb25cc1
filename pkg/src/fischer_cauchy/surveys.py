"""Empirical lower-bound constants and growth sequences for the per-degree maps.

Sampling uses numpy's ``default_rng`` (PCG64) seeded by the caller.
"""
from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
import scipy.linalg

from .fischer import fischer_gram_diagonal, norm_sq_rF
from .harmonic import eigenvalue_d, min_eigenvalue_e
from .numerics import shifted_moment_ratio
from .polynomials import HomPoly, laplacian, monomial_basis, multiply, norm_sq_poly, random_hompoly
from .solver import degree_matrix, fischer_lower_ratio, rf_lower_ratio


def lower_bound_survey(P: HomPoly, p: int, n: int, m_max: int, samples: int, seed: int = 0) -> list[dict]:
    """Per degree ``m``: min over random ``f_m`` of
    ``||Delta^p(P f_m)||_rF / (e_{p,m} ||f_m||_rF)``, plus the same ratio
    minimised over the whole degree-``m`` space (float generalized eigenproblem).
    """
    if P.degree != 2 * p or P.n != n:
        raise ValueError("P must be a form of degree 2p in n variables")
    rng = np.random.default_rng(seed)
    principal = norm_sq_poly(n, p)
    rows = []
    for m in range(m_max + 1):
        e = float(min_eigenvalue_e(p, m, n))
        best = math.inf
        exact_min = None
        for _ in range(samples):
            f = random_hompoly(rng, n, m)
            if f.is_zero():
                continue
            g = laplacian(multiply(P, f), p)
            r = norm_sq_rF(g).rational_part.re / norm_sq_rF(f).rational_part.re
            if exact_min is None or r < exact_min:
                exact_min = r
            best = min(best, math.sqrt(float(r)) / e)
        op_min = rf_lower_ratio(degree_matrix(principal, P, m)) / e
        rows.append(
            {
                "m": m,
                "e_pm": e,
                "min_sampled_ratio": best,
                "min_sampled_ratio_sq_exact": exact_min,
                "operator_min_ratio": op_min,
            }
        )
    return rows


def harmonic_ratio_sq(p: int, n: int, m: int) -> Fraction:
    """``(||Delta^p(|x|^{2p} Y_m)||_rF / || |x|^{2p} Y_m ||_rF)^2`` for harmonic ``Y_m``.

    ``F_{2p} Y_m = d_p(0, m) Y_m`` and ``|| |x|^{2p} Y ||^2 = (I_{2m+4p+n-1}/I_{2m+n-1}) ||Y||^2``.
    """
    d = eigenvalue_d(p, 0, m, n)
    return d * d / shifted_moment_ratio(2 * m + n - 1, 2 * p)


def harmonic_ratio_sequence(p: int, n: int, m_max: int) -> list[float]:
    if n < 2:
        raise ValueError("the bounded-ratio statement needs n >= 2; see one_variable_ratio_sequence")
    return [math.sqrt(float(harmonic_ratio_sq(p, n, m))) for m in range(m_max + 1)]


def one_variable_ratio_sequence(p: int, m_max: int) -> list[float]:
    """n = 1 contrast: ``(d/dx)^{2p}(x^{2p} x^m) = (m+2p)...(m+1) x^m``; this ratio grows."""
    out = []
    for m in range(m_max + 1):
        d = math.prod(range(m + 1, m + 2 * p + 1))
        out.append(math.sqrt(float(Fraction(d * d) / shifted_moment_ratio(2 * m, 2 * p))))
    return out


def complex_norm_ratio_sequence(p: int, n: int, m_max: int) -> list[dict]:
    """Complex Fischer norm: ``min_q ||Delta^p(Sigma^p q)||_F / (m^p ||q||_F)`` for m = 1..m_max,
    alongside ``min_q ||Delta^p(Sigma^p q)||_F / (sqrt(m^p) ||Sigma^p q||_F)``.
    """
    sigma_p = norm_sq_poly(n, p)
    rows = []
    for m in range(1, m_max + 1):
        op = degree_matrix(sigma_p, sigma_p, m)
        T = op.as_complex()
        M = _multiplication_matrix(sigma_p, m)
        G_hi = np.diag(fischer_gram_diagonal(n, m + 2 * p))
        H = T.conj().T @ np.diag(fischer_gram_diagonal(n, m)) @ T
        K = M.conj().T @ G_hi @ M
        first = math.sqrt(max(float(scipy.linalg.eigh((H + H.conj().T) / 2, (K + K.conj().T) / 2, eigvals_only=True)[0]), 0.0))
        rows.append(
            {
                "m": m,
                "ratio": fischer_lower_ratio(op) / m**p,
                "first_ratio": first / math.sqrt(m**p),
                "rf_ratio": rf_lower_ratio(op) / m**p,
            }
        )
    return rows


def _multiplication_matrix(P: HomPoly, m: int) -> np.ndarray:
    basis = monomial_basis(P.n, m)
    cols = [multiply(P, HomPoly.monomial(b)).to_vector() for b in basis]
    return np.array([[complex(c[i]) for c in cols] for i in range(len(cols[0]))], dtype=complex)
