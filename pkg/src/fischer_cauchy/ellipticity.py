"""Ellipticity and B-ellipticity checks for homogeneous divisors.

A verdict of ``elliptic`` is backed by a Lipschitz grid bound on the sphere.
For B-ellipticity the caller supplies the matrix ``A``; a negative verdict
only says that *this* ``A`` does not exhibit ellipticity.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .fischer import lipschitz_bound, sphere_grid
from .numerics import ZERO, GaussianRational, as_gaussian
from .polynomials import DimensionError, HomPoly, LinearChange, evaluate_float, substitute_linear

ELLIPTIC = "elliptic"
NOT_ELLIPTIC = "not_elliptic"
INCONCLUSIVE = "inconclusive"


class TransformInvalid(ValueError):
    """``B(A tau)`` is not the standard form ``Sigma(tau)``."""


@dataclass
class EllipticityCertificate:
    real_on_reals: bool
    delta_lower: float | None
    delta_grid_min: float | None
    resolution: int
    verdict: str
    witness: list[float] | None = None
    nonreal_coefficient: list[int] | None = None
    resolution_needed: int | None = None
    transformed: HomPoly | None = None
    notes: list[str] = field(default_factory=list)


def is_real_on_reals(P: HomPoly) -> bool:
    return P.is_real()


def _gram(A: LinearChange, B) -> list[list[GaussianRational]]:
    """``A^T B A``."""
    n = A.n
    Am = A.matrix
    BA = [[sum((B[i][k] * Am[k][j] for k in range(n)), ZERO) for j in range(n)] for i in range(n)]
    return [[sum((Am[k][i] * BA[k][j] for k in range(n)), ZERO) for j in range(n)] for i in range(n)]


def _is_identity(M) -> bool:
    return all(M[i][j] == (1 if i == j else 0) for i in range(len(M)) for j in range(len(M)))


def identity_form(n: int):
    return [[GaussianRational(1 if i == j else 0) for j in range(n)] for i in range(n)]


def verify_transform(A: LinearChange, B) -> bool:
    """Exact check of ``B(A tau) = Sigma(tau)``, i.e. ``A^T B A = I``."""
    B = [[as_gaussian(v) for v in row] for row in B]
    if len(B) != A.n or any(len(row) != A.n for row in B):
        raise DimensionError("B must be n x n")
    return _is_identity(_gram(A, B))


def verify_orthogonal_for_sigma(A: LinearChange) -> bool:
    return verify_transform(A, identity_form(A.n))


def _nested_certified_lower(values: np.ndarray, resolution: int, n: int, lip: float) -> float:
    """Best Lipschitz lower bound over the dyadic subgrids of the evaluated grid."""
    best = -math.inf
    r = resolution
    while True:
        if n == 2:
            sub = values[:: resolution // r]
        else:
            step = resolution // r
            grid = values.reshape(resolution + 1, resolution)
            sub = grid[::step, ::step]
        _, h = sphere_grid(n, r)
        best = max(best, float(sub.min()) - lip * h)
        if r % 2 or r // 2 < 8:
            break
        r //= 2
    return best


def sphere_min_certified(P: HomPoly, resolution: int) -> tuple[float, float, list[float]]:
    """``(grid_min, certified_lower, argmin_point)`` for a real form on the unit sphere."""
    if not is_real_on_reals(P):
        raise ValueError("sphere minimisation needs a real polynomial")
    pts, _ = sphere_grid(P.n, resolution)
    vals = np.real(evaluate_float(P, pts))
    i = int(np.argmin(vals))
    lower = _nested_certified_lower(vals, resolution, P.n, lipschitz_bound(P))
    return float(vals[i]), lower, pts[i].tolist()


def _needed_resolution(P: HomPoly, grid_min: float) -> int | None:
    if grid_min <= 0:
        return None
    lip = lipschitz_bound(P)
    # covering radius is roughly c/resolution with c = pi (n=2) or 3pi/2 (n=3)
    c = math.pi if P.n == 2 else 1.5 * math.pi
    return int(math.ceil(c * lip / grid_min)) + 1


def ellipticity_check(P: HomPoly, resolution: int) -> EllipticityCertificate:
    """Certificate for ``P(x) >= delta |x|^deg`` on ``R^n``."""
    if P.degree % 2:
        raise ValueError("an elliptic form must have even degree")
    if not is_real_on_reals(P):
        bad = next(a for a, c in P.sorted_terms() if c.im)
        return EllipticityCertificate(False, None, None, resolution, NOT_ELLIPTIC, nonreal_coefficient=list(bad), transformed=P)
    if P.degree == 0:
        c = float(P.coefficient((0,) * P.n).re)
        verdict = ELLIPTIC if c > 0 else NOT_ELLIPTIC
        return EllipticityCertificate(True, c, c, resolution, verdict, transformed=P)
    grid_min, lower, point = sphere_min_certified(P, resolution)
    cert = EllipticityCertificate(True, lower, grid_min, resolution, INCONCLUSIVE, transformed=P)
    if grid_min <= 0:
        cert.verdict = NOT_ELLIPTIC
        cert.witness = point
    elif lower > 0:
        cert.verdict = ELLIPTIC
    else:
        cert.resolution_needed = _needed_resolution(P, grid_min)
    return cert


def b_elliptic_check(P: HomPoly, B, A: LinearChange, resolution: int) -> EllipticityCertificate:
    """Check ``B``-ellipticity of ``P`` through the supplied ``A``.

    Verifies ``B(A tau) = Sigma(tau)`` exactly, forms ``P(A^{-t} x)`` exactly
    and certifies the transform on the sphere.
    """
    if not verify_transform(A, B):
        raise TransformInvalid("A^T B A is not the identity")
    transformed = substitute_linear(P, A.inverse_transpose())
    cert = ellipticity_check(transformed, resolution)
    if cert.verdict != ELLIPTIC:
        cert.notes.append("verdict concerns the supplied A only; another A may still exhibit B-ellipticity")
    return cert


def wave_substitution(P: HomPoly, imaginary_axes: Iterable[int]) -> HomPoly:
    """Substitute ``x_j -> i x_j`` on the selected axes."""
    axes = set(imaginary_axes)
    if any(j < 0 or j >= P.n for j in axes):
        raise DimensionError("axis index out of range")
    i_pow = [GaussianRational(1), GaussianRational(0, 1), GaussianRational(-1), GaussianRational(0, -1)]
    terms = {}
    for alpha, c in P.terms.items():
        k = sum(alpha[j] for j in axes) % 4
        terms[alpha] = c * i_pow[k]
    return HomPoly(P.n, P.degree, terms)


def axis_scaling(n: int, axes: Sequence[int], factor) -> LinearChange:
    return LinearChange(tuple(tuple((factor if i in axes else 1) if i == j else 0 for j in range(n)) for i in range(n)))
