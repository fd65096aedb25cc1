"""Homogeneous polynomials and truncated graded series over the Gaussian rationals."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

import numpy as np

from .numerics import ONE, ZERO, Fraction, GaussianRational, as_gaussian

MultiIndex = tuple  # tuple[int, ...], one exponent per variable


class DimensionError(ValueError):
    pass


class DegreeError(ValueError):
    pass


@lru_cache(maxsize=None)
def monomial_basis(n: int, m: int) -> tuple[MultiIndex, ...]:
    """Exponent vectors of degree ``m`` in ``n`` variables, in graded-lex order.

    Within a degree the order is lexicographically decreasing, so ``x1**m``
    comes first and ``xn**m`` last.
    """
    if n == 1:
        return ((m,),)
    out = []
    for first in range(m, -1, -1):
        for rest in monomial_basis(n - 1, m - first):
            out.append((first,) + rest)
    return tuple(out)


def graded_lex_key(alpha: MultiIndex):
    return (sum(alpha), tuple(-a for a in alpha))


class HomPoly:
    """Homogeneous polynomial of a fixed degree in ``n`` variables.

    ``terms`` maps exponent tuples to nonzero :class:`GaussianRational`
    coefficients.  The zero polynomial of a given degree has no terms.
    Instances are treated as immutable.
    """

    __slots__ = ("n", "degree", "terms")

    def __init__(self, n: int, degree: int, terms: Mapping | None = None, *, _trusted: bool = False):
        if n < 1:
            raise DimensionError("dimension must be positive")
        if degree < 0:
            raise DegreeError("degree must be nonnegative")
        self.n = n
        self.degree = degree
        if _trusted:
            self.terms = terms
            return
        clean = {}
        for alpha, c in (terms or {}).items():
            alpha = tuple(int(a) for a in alpha)
            if len(alpha) != n:
                raise DimensionError(f"exponent {alpha} does not have length {n}")
            if any(a < 0 for a in alpha):
                raise DegreeError(f"negative exponent in {alpha}")
            if sum(alpha) != degree:
                raise DegreeError(f"exponent {alpha} is not of degree {degree}")
            c = as_gaussian(c)
            if c:
                clean[alpha] = clean.get(alpha, ZERO) + c
        self.terms = {a: c for a, c in clean.items() if c}

    # constructors ------------------------------------------------------
    @classmethod
    def zero(cls, n: int, degree: int = 0) -> HomPoly:
        return cls(n, degree, {}, _trusted=True)

    @classmethod
    def constant(cls, n: int, c) -> HomPoly:
        c = as_gaussian(c)
        return cls(n, 0, {(0,) * n: c} if c else {}, _trusted=True)

    @classmethod
    def monomial(cls, alpha: Sequence[int], c=1) -> HomPoly:
        alpha = tuple(alpha)
        return cls(len(alpha), sum(alpha), {alpha: c})

    @classmethod
    def variable(cls, n: int, j: int) -> HomPoly:
        alpha = [0] * n
        alpha[j] = 1
        return cls.monomial(alpha)

    @classmethod
    def from_vector(cls, n: int, degree: int, vec: Sequence[GaussianRational]) -> HomPoly:
        basis = monomial_basis(n, degree)
        if len(vec) != len(basis):
            raise DimensionError("vector length does not match the monomial basis")
        return cls(n, degree, {a: c for a, c in zip(basis, vec) if c}, _trusted=True)

    # basic protocol ----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, HomPoly):
            return NotImplemented
        if self.n != other.n:
            return False
        if not self.terms and not other.terms:
            return True
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, self.degree if self.terms else 0, frozenset(self.terms.items())))

    def coefficient(self, alpha) -> GaussianRational:
        return self.terms.get(tuple(alpha), ZERO)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: graded_lex_key(t[0]))

    def to_vector(self) -> list[GaussianRational]:
        return [self.terms.get(a, ZERO) for a in monomial_basis(self.n, self.degree)]

    def __repr__(self):
        return f"HomPoly(n={self.n}, degree={self.degree}, {self.to_text()!r})"

    def to_text(self) -> str:
        """Canonical rendering: graded-lex monomials, ``(re+imi)*x1^a*x2^b``."""
        if not self.terms:
            return "0"
        parts = []
        for alpha, c in self.sorted_terms():
            mono = "*".join(
                f"x{j + 1}" if a == 1 else f"x{j + 1}^{a}" for j, a in enumerate(alpha) if a
            )
            coeff = f"({c})"
            parts.append(f"{coeff}*{mono}" if mono else coeff)
        return " + ".join(parts)

    # arithmetic --------------------------------------------------------
    def _check_dim(self, other: HomPoly):
        if self.n != other.n:
            raise DimensionError(f"dimension mismatch: {self.n} vs {other.n}")

    def __add__(self, other: HomPoly) -> HomPoly:
        self._check_dim(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        if self.degree != other.degree:
            raise DegreeError(f"cannot add degrees {self.degree} and {other.degree}")
        terms = dict(self.terms)
        for a, c in other.terms.items():
            s = terms.get(a)
            s = c if s is None else s + c
            if s:
                terms[a] = s
            else:
                terms.pop(a, None)
        return HomPoly(self.n, self.degree, terms, _trusted=True)

    def __neg__(self) -> HomPoly:
        return HomPoly(self.n, self.degree, {a: -c for a, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other: HomPoly) -> HomPoly:
        return self + (-other)

    def scale(self, c) -> HomPoly:
        c = as_gaussian(c)
        if not c:
            return HomPoly.zero(self.n, self.degree)
        return HomPoly(self.n, self.degree, {a: v * c for a, v in self.terms.items()}, _trusted=True)

    def __mul__(self, other):
        if isinstance(other, HomPoly):
            return multiply(self, other)
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> HomPoly:
        result = HomPoly.constant(self.n, 1)
        for _ in range(k):
            result = multiply(result, self)
        return result

    def conjugate(self) -> HomPoly:
        return conjugate_coefficients(self)

    def is_real(self) -> bool:
        return all(c.im == 0 for c in self.terms.values())


def add(f: HomPoly, g: HomPoly) -> HomPoly:
    return f + g


def scale(f: HomPoly, c) -> HomPoly:
    return f.scale(c)


def multiply(f: HomPoly, g: HomPoly) -> HomPoly:
    f._check_dim(g)
    deg = f.degree + g.degree
    if not f.terms or not g.terms:
        return HomPoly.zero(f.n, deg)
    terms: dict = {}
    for a, c in f.terms.items():
        for b, d in g.terms.items():
            key = tuple(x + y for x, y in zip(a, b))
            v = c * d
            old = terms.get(key)
            terms[key] = v if old is None else old + v
    return HomPoly(f.n, deg, {k: v for k, v in terms.items() if v}, _trusted=True)


def differentiate(f: HomPoly, alpha: Sequence[int]) -> HomPoly:
    """``D^alpha f``; the zero polynomial of degree ``max(deg - |alpha|, 0)`` if it vanishes."""
    alpha = tuple(alpha)
    if len(alpha) != f.n:
        raise DimensionError(f"multi-index {alpha} does not have length {f.n}")
    order = sum(alpha)
    new_deg = max(f.degree - order, 0)
    if order > f.degree:
        return HomPoly.zero(f.n, new_deg)
    terms = {}
    for beta, c in f.terms.items():
        factor = 1
        for b, a in zip(beta, alpha):
            if b < a:
                factor = 0
                break
            factor *= math.perm(b, a)
        if factor:
            terms[tuple(b - a for b, a in zip(beta, alpha))] = c * factor
    return HomPoly(f.n, new_deg, terms, _trusted=True)


def partial(f: HomPoly, j: int, times: int = 1) -> HomPoly:
    alpha = [0] * f.n
    alpha[j] = times
    return differentiate(f, alpha)


def laplacian(f: HomPoly, power: int = 1) -> HomPoly:
    for _ in range(power):
        out = None
        for j in range(f.n):
            term = partial(f, j, 2)
            out = term if out is None else out + term
        f = out
    return f


def norm_sq_poly(n: int, s: int = 1) -> HomPoly:
    """``|x|^{2s} = (x_1^2 + ... + x_n^2)^s``."""
    return _norm_sq_power(n, s)


@lru_cache(maxsize=None)
def _norm_sq_power(n: int, s: int) -> HomPoly:
    if s == 0:
        return HomPoly.constant(n, 1)
    sigma = HomPoly(n, 2, {tuple(2 if i == j else 0 for i in range(n)): 1 for j in range(n)})
    return multiply(_norm_sq_power(n, s - 1), sigma)


def apply_symbol(Q: HomPoly, f: HomPoly) -> HomPoly:
    """``Q(D) f = sum_alpha q_alpha D^alpha f``."""
    Q._check_dim(f)
    new_deg = max(f.degree - Q.degree, 0)
    out = HomPoly.zero(f.n, new_deg)
    if Q.degree > f.degree:
        return out
    for alpha, q in Q.terms.items():
        out = out + differentiate(f, alpha).scale(q)
    return out


def conjugate_coefficients(f: HomPoly) -> HomPoly:
    return HomPoly(f.n, f.degree, {a: c.conjugate() for a, c in f.terms.items()}, _trusted=True)


def evaluate(f: HomPoly, point: Sequence) -> GaussianRational:
    if len(point) != f.n:
        raise DimensionError(f"point has length {len(point)}, expected {f.n}")
    pt = [as_gaussian(v) for v in point]
    total = ZERO
    for alpha, c in f.terms.items():
        v = c
        for x, a in zip(pt, alpha):
            if a:
                v = v * x**a
        total = total + v
    return total


def evaluate_float(f: HomPoly, points) -> np.ndarray:
    """Evaluate in double precision at an ``(N, n)`` array of points (or a single point).

    Complex points are allowed; the result is real only for real coefficients at real points.
    """
    pts = np.asarray(points)
    pts = pts.astype(complex if np.iscomplexobj(pts) else float)
    single = pts.ndim == 1
    pts = np.atleast_2d(pts)
    if pts.shape[1] != f.n:
        raise DimensionError(f"points have {pts.shape[1]} coordinates, expected {f.n}")
    out = np.zeros(pts.shape[0], dtype=complex)
    for alpha, c in f.terms.items():
        mono = np.ones(pts.shape[0], dtype=pts.dtype)
        for j, a in enumerate(alpha):
            if a:
                mono = mono * pts[:, j] ** a
        out += complex(c) * mono
    if not np.iscomplexobj(pts) and all(c.im == 0 for c in f.terms.values()):
        out = out.real
    return out[0] if single else out


def coefficient_l1(f: HomPoly) -> float:
    return float(sum(abs(c) for c in f.terms.values()))


# linear changes of variables ------------------------------------------


def _mat(rows) -> tuple[tuple[GaussianRational, ...], ...]:
    return tuple(tuple(as_gaussian(v) for v in row) for row in rows)


@dataclass(frozen=True)
class LinearChange:
    """Invertible ``n x n`` matrix over the Gaussian rationals."""

    matrix: tuple

    def __post_init__(self):
        m = _mat(self.matrix)
        object.__setattr__(self, "matrix", m)
        n = len(m)
        if n == 0 or any(len(row) != n for row in m):
            raise DimensionError("matrix must be square and nonempty")
        from .linalg import determinant

        if not determinant(m):
            raise ValueError("matrix is singular")

    @property
    def n(self) -> int:
        return len(self.matrix)

    @classmethod
    def identity(cls, n: int) -> LinearChange:
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    def transpose(self) -> LinearChange:
        return LinearChange(tuple(zip(*self.matrix)))

    def inverse(self) -> LinearChange:
        from .linalg import inverse

        return LinearChange(inverse(self.matrix))

    def inverse_transpose(self) -> LinearChange:
        return self.inverse().transpose()

    def __matmul__(self, other: LinearChange) -> LinearChange:
        n = self.n
        return LinearChange(
            tuple(
                tuple(sum((self.matrix[i][k] * other.matrix[k][j] for k in range(n)), ZERO) for j in range(n))
                for i in range(n)
            )
        )


def substitute_linear(f: HomPoly, A: LinearChange) -> HomPoly:
    """``x -> f(A x)``: each ``x_i`` is replaced by ``sum_j A[i][j] x_j``."""
    if A.n != f.n:
        raise DimensionError(f"matrix is {A.n}x{A.n}, polynomial has {f.n} variables")
    n = f.n
    forms = [HomPoly(n, 1, {tuple(1 if k == j else 0 for k in range(n)): A.matrix[i][j] for j in range(n)}) for i in range(n)]
    powers: list[list[HomPoly]] = [[HomPoly.constant(n, 1)] for _ in range(n)]
    out = HomPoly.zero(n, f.degree)
    for alpha, c in f.terms.items():
        term = HomPoly.constant(n, c)
        for i, a in enumerate(alpha):
            while len(powers[i]) <= a:
                powers[i].append(multiply(powers[i][-1], forms[i]))
            if a:
                term = multiply(term, powers[i][a])
        out = out + term
    return out


# graded series ----------------------------------------------------------


@dataclass
class GradedSeries:
    """Truncated power series ``sum_{m <= cutoff} f_m``; absent degrees are zero."""

    n: int
    cutoff: int
    parts: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for m, p in self.parts.items():
            if p.n != self.n:
                raise DimensionError(f"part of degree {m} has dimension {p.n}, expected {self.n}")
            if p.terms and p.degree != m:
                raise DegreeError(f"part stored under degree {m} has degree {p.degree}")
            if m > self.cutoff or m < 0:
                raise DegreeError(f"degree {m} outside [0, {self.cutoff}]")
            if p.terms:
                clean[m] = p
        self.parts = clean

    @classmethod
    def from_polys(cls, n: int, cutoff: int, polys: Iterable[HomPoly]) -> GradedSeries:
        parts: dict = {}
        for p in polys:
            if p.terms:
                parts[p.degree] = parts[p.degree] + p if p.degree in parts else p
        return cls(n, cutoff, parts)

    @classmethod
    def zero(cls, n: int, cutoff: int) -> GradedSeries:
        return cls(n, cutoff, {})

    def part(self, m: int) -> HomPoly:
        if m > self.cutoff:
            raise DegreeError(f"degree {m} exceeds cutoff {self.cutoff}")
        return self.parts.get(m) or HomPoly.zero(self.n, m)

    def degrees(self) -> list[int]:
        return sorted(self.parts)

    def is_zero(self) -> bool:
        return not self.parts

    def truncate(self, cutoff: int) -> GradedSeries:
        return GradedSeries(self.n, cutoff, {m: p for m, p in self.parts.items() if m <= cutoff})

    def __eq__(self, other):
        if not isinstance(other, GradedSeries):
            return NotImplemented
        return self.n == other.n and self.cutoff == other.cutoff and self.parts == other.parts

    def __add__(self, other: GradedSeries) -> GradedSeries:
        if self.n != other.n:
            raise DimensionError("dimension mismatch")
        cutoff = min(self.cutoff, other.cutoff)
        parts = {}
        for m in range(cutoff + 1):
            s = self.part(m) + other.part(m)
            if s.terms:
                parts[m] = s
        return GradedSeries(self.n, cutoff, parts)

    def __neg__(self):
        return GradedSeries(self.n, self.cutoff, {m: -p for m, p in self.parts.items()})

    def __sub__(self, other):
        return self + (-other)

    def to_text(self) -> str:
        if not self.parts:
            return "0"
        return " + ".join(f"[{m}] {self.parts[m].to_text()}" for m in self.degrees())


def random_hompoly(rng: np.random.Generator, n: int, m: int, *, complex_coeffs: bool = True, bound: int = 5, density: float = 1.0) -> HomPoly:
    """Random integer-coefficient form for tests and surveys (``rng`` is a numpy Generator)."""
    terms = {}
    for alpha in monomial_basis(n, m):
        if density < 1.0 and rng.random() > density:
            continue
        re = int(rng.integers(-bound, bound + 1))
        im = int(rng.integers(-bound, bound + 1)) if complex_coeffs else 0
        if re or im:
            terms[alpha] = GaussianRational(re, im)
    return HomPoly(n, m, terms, _trusted=True)


def all_multi_indices(n: int, max_order: int):
    for k in range(max_order + 1):
        yield from monomial_basis(n, k)


__all__ = [
    "DegreeError",
    "DimensionError",
    "GradedSeries",
    "HomPoly",
    "LinearChange",
    "ONE",
    "add",
    "all_multi_indices",
    "apply_symbol",
    "coefficient_l1",
    "conjugate_coefficients",
    "differentiate",
    "evaluate",
    "evaluate_float",
    "graded_lex_key",
    "laplacian",
    "monomial_basis",
    "multiply",
    "norm_sq_poly",
    "partial",
    "random_hompoly",
    "scale",
    "substitute_linear",
]
