"""The complex (apolar) Fischer product and its real Gaussian-weighted analogue.

The real product ``<f, g>_rF = int_{R^n} f conj(g) exp(-|x|^2) dx`` is always
returned as a :class:`RealFischerValue` whose true value carries an implicit
factor ``pi^{n/2}``; nothing here ever integrates numerically.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .numerics import ZERO, GaussianRational
from .polynomials import DimensionError, GradedSeries, HomPoly, coefficient_l1, evaluate_float, monomial_basis


@dataclass(frozen=True)
class RealFischerValue:
    """``rational_part * pi^{n/2}``."""

    rational_part: GaussianRational
    n: int

    def _check(self, other: RealFischerValue):
        if self.n != other.n:
            raise DimensionError("real Fischer values from different dimensions are not comparable")

    def __add__(self, other: RealFischerValue) -> RealFischerValue:
        self._check(other)
        return RealFischerValue(self.rational_part + other.rational_part, self.n)

    def __sub__(self, other: RealFischerValue) -> RealFischerValue:
        self._check(other)
        return RealFischerValue(self.rational_part - other.rational_part, self.n)

    def scale(self, c) -> RealFischerValue:
        return RealFischerValue(self.rational_part * c, self.n)

    def ratio(self, other: RealFischerValue) -> GaussianRational:
        self._check(other)
        return self.rational_part / other.rational_part

    def real(self) -> Fraction:
        if self.rational_part.im:
            raise ValueError("value is not real")
        return self.rational_part.re

    def __float__(self) -> float:
        return float(self.real()) * math.pi ** (self.n / 2)

    def __complex__(self) -> complex:
        return complex(self.rational_part) * math.pi ** (self.n / 2)


def _parts(f):
    if isinstance(f, HomPoly):
        return {f.degree: f} if f.terms else {}
    if isinstance(f, GradedSeries):
        return f.parts
    raise TypeError(f"expected HomPoly or GradedSeries, got {type(f).__name__}")


def _dim(f) -> int:
    return f.n


# complex Fischer product ----------------------------------------------------


def fischer_inner(f, g) -> GaussianRational:
    """``<f, g>_F = sum_alpha alpha! c_alpha conj(d_alpha)``."""
    if _dim(f) != _dim(g):
        raise DimensionError("dimension mismatch")
    fp, gp = _parts(f), _parts(g)
    total = ZERO
    for m, p in fp.items():
        q = gp.get(m)
        if q is None:
            continue
        for alpha, c in p.terms.items():
            d = q.terms.get(alpha)
            if d is not None:
                total = total + c * d.conjugate() * _alpha_factorial(alpha)
    return total


def norm_sq_F(f) -> Fraction:
    return fischer_inner(f, f).re


@lru_cache(maxsize=None)
def _alpha_factorial(alpha) -> int:
    out = 1
    for a in alpha:
        out *= math.factorial(a)
    return out


# real Fischer product -------------------------------------------------------


@lru_cache(maxsize=None)
def gaussian_moment_1d(k: int) -> Fraction:
    """``int_R t^k exp(-t^2) dt / sqrt(pi)``: zero for odd ``k``, ``k!/(4^{k/2} (k/2)!)`` otherwise."""
    if k % 2:
        return Fraction(0)
    h = k // 2
    return Fraction(math.factorial(k), 4**h * math.factorial(h))


@lru_cache(maxsize=None)
def monomial_pairing(gamma) -> Fraction:
    out = Fraction(1)
    for g in gamma:
        if g % 2:
            return Fraction(0)
        out *= gaussian_moment_1d(g)
    return out


def real_fischer_inner(f, g) -> RealFischerValue:
    n = _dim(f)
    if n != _dim(g):
        raise DimensionError("dimension mismatch")
    total = ZERO
    fp, gp = _parts(f), _parts(g)
    for p in fp.values():
        for q in gp.values():
            if (p.degree + q.degree) % 2:
                continue
            for alpha, c in p.terms.items():
                for beta, d in q.terms.items():
                    w = monomial_pairing(tuple(a + b for a, b in zip(alpha, beta)))
                    if w:
                        total = total + c * d.conjugate() * w
    return RealFischerValue(total, n)


def norm_sq_rF(f) -> RealFischerValue:
    v = real_fischer_inner(f, f)
    return RealFischerValue(GaussianRational(v.rational_part.re), v.n)


@lru_cache(maxsize=None)
def real_gram_matrix(n: int, m: int) -> np.ndarray:
    """Float Gram matrix of ``<x^a, x^b>_rF / pi^{n/2}`` on the degree-``m`` monomial basis."""
    basis = monomial_basis(n, m)
    G = np.empty((len(basis), len(basis)))
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            G[i, j] = float(monomial_pairing(tuple(x + y for x, y in zip(a, b))))
    return G


@lru_cache(maxsize=None)
def fischer_gram_diagonal(n: int, m: int) -> np.ndarray:
    return np.array([float(_alpha_factorial(a)) for a in monomial_basis(n, m)])


# sphere maxima ------------------------------------------------------------


def sphere_grid(n: int, resolution: int) -> tuple[np.ndarray, float]:
    """Points on ``S^{n-1}`` and a covering radius ``h`` (every sphere point is
    within Euclidean distance ``h`` of some grid point).

    n=2: ``resolution`` equally spaced angles.  n=3: a ``(resolution+1) x
    resolution`` latitude/longitude grid.  Doubling ``resolution`` refines
    the grid to a superset.
    """
    if n == 2:
        t = 2 * np.pi * np.arange(resolution) / resolution
        pts = np.column_stack([np.cos(t), np.sin(t)])
        return pts, 2 * math.sin(math.pi / (2 * resolution))
    if n == 3:
        th = np.pi * np.arange(resolution + 1) / resolution
        ph = 2 * np.pi * np.arange(resolution) / resolution
        T, P = np.meshgrid(th, ph, indexing="ij")
        pts = np.column_stack([(np.sin(T) * np.cos(P)).ravel(), (np.sin(T) * np.sin(P)).ravel(), np.cos(T).ravel()])
        # half a meridian step, then at most half a parallel step
        return pts, math.pi / (2 * resolution) + math.pi / resolution
    raise DimensionError(f"sphere grids are implemented for n in {{2, 3}}, got n={n}")


def lipschitz_bound(f: HomPoly) -> float:
    """Bound on ``|grad f|`` over the closed unit ball: ``degree * sum |c_alpha|``."""
    return f.degree * coefficient_l1(f)


def sphere_max_estimate(f: HomPoly, resolution: int) -> tuple[float, float]:
    """``(lower, certified_upper)`` bracketing ``max_{|x|=1} |f(x)|``."""
    if resolution < 8:
        raise ValueError("resolution must be at least 8")
    pts, h = sphere_grid(f.n, resolution)
    vals = np.abs(evaluate_float(f, pts))
    lower = float(vals.max()) if len(vals) else 0.0
    return lower, lower + lipschitz_bound(f) * h
