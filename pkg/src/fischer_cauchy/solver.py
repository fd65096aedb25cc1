"""Degree-by-degree series solver for ``L(P q) = f``.

``L = Q(D) + sum_{|alpha| <= k0} a_alpha(x) D^alpha`` with ``Q`` and ``P``
homogeneous of the same degree ``k``.  Matching the degree-``m`` part gives

    Q(D)(P q_m) = f_m - sum_alpha sum_i a_{alpha,i} D^alpha(P q_{m+|alpha|-k-i})

so each ``q_m`` is the unique preimage under the degree-``m`` map
``T_m: q -> Q(D)(P q)`` once ``T_m`` is invertible.
"""
from __future__ import annotations

import logging
import math
import os
import statistics
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np
import scipy.linalg

from .fischer import fischer_gram_diagonal, norm_sq_rF, real_gram_matrix
from .linalg import eliminate
from .numerics import GaussianRational
from .polynomials import (
    DegreeError,
    DimensionError,
    GradedSeries,
    HomPoly,
    apply_symbol,
    differentiate,
    monomial_basis,
    multiply,
    norm_sq_poly,
)

log = logging.getLogger(__name__)

THREADS_ENV = "FISCHER_CAUCHY_THREADS"


class SingularDegree(Exception):
    """The degree-``m`` map is not invertible: the problem is not well posed there."""

    def __init__(self, m: int, certificates: list | None = None):
        super().__init__(f"degree {m}: Q(D)(P q_m) is singular")
        self.m = m
        self.certificates = certificates or []


class CutoffTooSmall(ValueError):
    pass


def max_workers() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


@dataclass
class OperatorSpec:
    n: int
    principal: HomPoly
    lower_order: list = field(default_factory=list)  # [(alpha, GradedSeries)]

    def __post_init__(self):
        if self.principal.n != self.n:
            raise DimensionError("principal symbol has the wrong dimension")
        if self.principal.is_zero():
            raise ValueError("principal symbol must be nonzero")
        clean = []
        for alpha, series in self.lower_order:
            alpha = tuple(int(a) for a in alpha)
            if len(alpha) != self.n:
                raise DimensionError(f"multi-index {alpha} does not have length {self.n}")
            if series.n != self.n:
                raise DimensionError(f"coefficient of D^{alpha} has the wrong dimension")
            clean.append((alpha, series))
        self.lower_order = clean
        if self.k0 >= self.k:
            raise ValueError(f"lower-order terms must have order k0 < k (k0={self.k0}, k={self.k})")

    @property
    def k(self) -> int:
        return self.principal.degree

    @property
    def k0(self) -> int:
        return max((sum(a) for a, _ in self.lower_order), default=0)

    @classmethod
    def laplacian_power(cls, n: int, p: int, lower_order: Sequence = ()) -> OperatorSpec:
        return cls(n, norm_sq_poly(n, p), list(lower_order))


@dataclass
class Problem:
    operator: OperatorSpec
    divisor: HomPoly
    rhs: GradedSeries
    max_degree: int

    def __post_init__(self):
        if self.divisor.n != self.operator.n or self.rhs.n != self.operator.n:
            raise DimensionError("divisor, rhs and operator must share the dimension")
        if self.divisor.degree != self.operator.k:
            raise DegreeError(f"divisor has degree {self.divisor.degree}, principal has degree {self.operator.k}")
        if self.max_degree < 0:
            raise ValueError("max_degree must be nonnegative")

    @property
    def n(self) -> int:
        return self.operator.n


@dataclass
class DegreeOperator:
    m: int
    n: int
    matrix: list  # rows of GaussianRational over monomial_basis(n, m)

    @property
    def basis(self):
        return monomial_basis(self.n, self.m)

    def as_complex(self) -> np.ndarray:
        return np.array([[complex(v) for v in row] for row in self.matrix], dtype=complex).reshape(len(self.matrix), len(self.matrix))


@dataclass
class DegreeCertificate:
    m: int
    invertible: bool
    det: GaussianRational
    lower_ratio: float | None = None
    rf_norm_sq: GaussianRational | None = None  # of q_m, filled in by the solver


@dataclass
class SolutionReport:
    solution: GradedSeries
    per_degree: list
    residual_ok: bool
    radius_estimate: float | None
    regime: str


def degree_matrix(principal: HomPoly, divisor: HomPoly, m: int) -> DegreeOperator:
    n = principal.n
    basis = monomial_basis(n, m)

    def column(beta):
        return apply_symbol(principal, multiply(divisor, HomPoly.monomial(beta))).to_vector()

    workers = max_workers()
    if workers > 1 and len(basis) > 8:
        with ThreadPoolExecutor(workers) as ex:
            cols = list(ex.map(column, basis))
    else:
        cols = [column(b) for b in basis]
    size = len(basis)
    matrix = [[cols[j][i] for j in range(size)] for i in range(size)]
    return DegreeOperator(m, n, matrix)


def assemble_degree_map(problem: Problem, m: int) -> DegreeOperator:
    if not 0 <= m <= problem.max_degree:
        raise DegreeError(f"degree {m} outside [0, {problem.max_degree}]")
    return degree_matrix(problem.operator.principal, problem.divisor, m)


def min_gain(T: np.ndarray, gram: np.ndarray) -> float:
    """``min_q ||T q|| / ||q||`` for the norm with Gram matrix ``gram`` (float)."""
    if T.shape[0] == 0:
        return math.inf
    if gram.ndim == 1:
        gram = np.diag(gram)
    H = T.conj().T @ gram @ T
    H = (H + H.conj().T) / 2
    w = scipy.linalg.eigh(H, gram, eigvals_only=True)
    return math.sqrt(max(float(w[0]), 0.0))


def rf_lower_ratio(op: DegreeOperator) -> float:
    return min_gain(op.as_complex(), real_gram_matrix(op.n, op.m))


def fischer_lower_ratio(op: DegreeOperator) -> float:
    return min_gain(op.as_complex(), fischer_gram_diagonal(op.n, op.m))


def check_wellposed(problem: Problem, *, ratios: bool = True) -> list[DegreeCertificate]:
    certs = []
    for m in range(problem.max_degree + 1):
        op = assemble_degree_map(problem, m)
        det = eliminate(op.matrix).det
        certs.append(DegreeCertificate(m, bool(det), det, rf_lower_ratio(op) if ratios else None))
    return certs


def _check_cutoffs(problem: Problem):
    N = problem.max_degree
    if problem.rhs.cutoff < N:
        raise CutoffTooSmall(f"rhs is known through degree {problem.rhs.cutoff}, need {N}")
    for alpha, series in problem.operator.lower_order:
        if series.cutoff < N:
            raise CutoffTooSmall(f"coefficient of D^{alpha} is known through degree {series.cutoff}, need {N}")


def regime_label(op: OperatorSpec) -> str:
    if not op.lower_order:
        return "no lower-order terms: unique solution on the full ball"
    k, k0 = op.k, op.k0
    if 2 * k0 < k:
        return "k0 < k/2: bijection on A(B_R), solution converges on the same ball"
    if 2 * k0 == k:
        return "k0 = k/2: unique solution on some smaller ball B_r"
    return "k0 > k/2: outside the Laplacian-power theory; per-degree uniqueness only"


def solve_series(problem: Problem, *, diagnostics: bool = True) -> SolutionReport:
    """Solve degree by degree, then verify ``L(P q) - f`` vanishes through ``max_degree``."""
    _check_cutoffs(problem)
    op = problem.operator
    n, k, N, P = problem.n, op.k, problem.max_degree, problem.divisor
    q: dict[int, HomPoly] = {}
    Pq: dict[int, HomPoly] = {}
    DPq: dict = {}
    certs: list[DegreeCertificate] = []
    for m in range(N + 1):
        rhs = problem.rhs.part(m)
        for alpha, series in op.lower_order:
            l = sum(alpha)
            for i in range(m + l - k + 1):
                a_i = series.part(i)
                if a_i.is_zero():
                    continue
                j = m + l - k - i
                if q[j].is_zero():
                    continue
                key = (alpha, j)
                if key not in DPq:
                    DPq[key] = differentiate(Pq[j], alpha)
                rhs = rhs - multiply(a_i, DPq[key])
        T = assemble_degree_map(problem, m)
        res = eliminate(T.matrix, [rhs.to_vector() if rhs.terms else [GaussianRational(0)] * len(T.matrix)])
        cert = DegreeCertificate(m, bool(res.det), res.det, rf_lower_ratio(T) if diagnostics else None)
        certs.append(cert)
        if res.solution is None:
            raise SingularDegree(m, certs)
        q[m] = HomPoly.from_vector(n, m, res.solution[0])
        cert.rf_norm_sq = norm_sq_rF(q[m]).rational_part
        Pq[m] = multiply(P, q[m])
        log.debug("degree %d solved (%d unknowns)", m, len(T.matrix))
    solution = GradedSeries(n, N, {m: p for m, p in q.items() if p.terms})
    residual_ok = residual(problem, solution).is_zero()
    radius = convergence_diagnostics(solution) if diagnostics else None
    return SolutionReport(solution, certs, residual_ok, radius, regime_label(op))


def apply_operator(problem: Problem, q: GradedSeries) -> GradedSeries:
    """Degree-``<= N`` truncation of ``L(P q)``."""
    op, N, k, n = problem.operator, problem.max_degree, problem.operator.k, problem.n
    u = {d + k: multiply(problem.divisor, p) for d, p in q.parts.items() if d <= N}
    out = {m: HomPoly.zero(n, m) for m in range(N + 1)}
    for m in range(N + 1):
        if m + k in u:
            out[m] = out[m] + apply_symbol(op.principal, u[m + k])
    for alpha, series in op.lower_order:
        l = sum(alpha)
        for d, ud in u.items():
            Du = differentiate(ud, alpha)
            for i, a_i in series.parts.items():
                m = i + d - l
                if m <= N:
                    out[m] = out[m] + multiply(a_i, Du)
    return GradedSeries(n, N, out)


def residual(problem: Problem, q: GradedSeries) -> GradedSeries:
    return apply_operator(problem, q) - problem.rhs.truncate(problem.max_degree)


def convergence_diagnostics(q: GradedSeries) -> float | None:
    """Empirical radius from ``r_m = (m! / ||q_m||_rF^2)^{1/(2m)}`` (median of the last third)."""
    logs = []
    half_log_pi = q.n / 2 * math.log(math.pi)
    for m in q.degrees():
        if m == 0:
            continue
        v = norm_sq_rF(q.parts[m]).rational_part.re
        log_norm = math.log(v.numerator) - math.log(v.denominator) + half_log_pi
        logs.append((math.lgamma(m + 1) - log_norm) / (2 * m))
    if len(logs) < 6:
        return None
    tail = logs[len(logs) - max(1, len(logs) // 3):]
    val = statistics.median(tail)
    return math.exp(val) if val < 700 else math.inf
