"""Gauss decomposition and the eigen-operator ``F_{2p}(q) = Delta^p(|x|^{2p} q)``."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .numerics import shifted_moment_ratio
from .polynomials import HomPoly, laplacian, multiply, norm_sq_poly


@dataclass(frozen=True)
class GaussDecomposition:
    """``f = sum_s |x|^{2s} h_{m-2s}`` with every ``h`` harmonic.

    ``components`` lists ``(s, h)`` for ``s = 0 .. m // 2``; an ``h`` may be zero.
    """

    n: int
    degree: int
    components: tuple

    def component(self, s: int) -> HomPoly:
        return self.components[s][1]

    def reconstruct(self) -> HomPoly:
        out = HomPoly.zero(self.n, self.degree)
        for s, h in self.components:
            out = out + multiply(norm_sq_poly(self.n, s), h)
        return out


def laplacian_radial_constant(s: int, deg_h: int, n: int) -> Fraction:
    """``c`` in ``Delta(|x|^{2s} h) = c |x|^{2s-2} h`` for harmonic ``h``."""
    if s < 0:
        raise ValueError("s must be nonnegative")
    return Fraction(2 * s * (2 * s - 2 + 2 * deg_h + n))


def _iterated_constant(s: int, j: int, deg_h: int, n: int) -> Fraction:
    # Delta^j(|x|^{2s} h) = c |x|^{2(s-j)} h
    return prod((laplacian_radial_constant(s - t, deg_h, n) for t in range(j)), start=Fraction(1))


def gauss_decompose(f: HomPoly) -> GaussDecomposition:
    """Exact harmonic decomposition by back-substitution through ``Delta^j f``."""
    n, m = f.n, f.degree
    top = m // 2
    lap = [f]
    for _ in range(top):
        lap.append(laplacian(lap[-1]))
    h: dict[int, HomPoly] = {}
    for j in range(top, -1, -1):
        rest = lap[j]
        for s in range(j + 1, top + 1):
            if h[s].terms:
                c = _iterated_constant(s, j, m - 2 * s, n)
                rest = rest - multiply(norm_sq_poly(n, s - j), h[s]).scale(c)
        h[j] = rest.scale(1 / _iterated_constant(j, j, m - 2 * j, n))
        if not h[j].terms:
            h[j] = HomPoly.zero(n, m - 2 * j)
    return GaussDecomposition(n, m, tuple((s, h[s]) for s in range(top + 1)))


def harmonic_projection(f: HomPoly) -> HomPoly:
    """The ``s = 0`` Gauss component of ``f``."""
    return gauss_decompose(f).component(0)


def eigenvalue_d(p: int, s: int, m: int, n: int) -> Fraction:
    """Eigenvalue of ``F_{2p}`` on ``|x|^{2s} h`` with ``deg h = m``:
    ``2^p (s+p)...(s+1) * (2s+2p-2+n+2m)...(2s+n+2m)``.
    """
    if p < 1 or s < 0 or m < 0:
        raise ValueError("need p >= 1 and s, m >= 0")
    return Fraction(2**p * prod(s + i for i in range(1, p + 1)) * prod(2 * s + n + 2 * m + 2 * i for i in range(p)))


def min_eigenvalue_e(p: int, m: int, n: int) -> Fraction:
    """``e_{p,m} = 2^p p! (2m+n)(2m+n+2)...(2m+n+2(p-1))``."""
    if p < 1 or m < 0:
        raise ValueError("need p >= 1 and m >= 0")
    return Fraction(2**p * prod(range(1, p + 1)) * prod(2 * m + n + 2 * i for i in range(p)))


def min_eigenvalue_from_moments(p: int, m: int, n: int) -> Fraction:
    """``2^{2p} p! I_{2m+2p+n-1} / I_{2m+n-1}``; agrees with :func:`min_eigenvalue_e`."""
    return 4**p * prod(range(1, p + 1)) * shifted_moment_ratio(2 * m + n - 1, p)


def apply_F(q: HomPoly, p: int) -> HomPoly:
    if p < 1:
        raise ValueError("p must be at least 1")
    return laplacian(multiply(norm_sq_poly(q.n, p), q), p)
