"""Exact dense linear algebra over the Gaussian rationals.

Matrices are cleared of denominators and reduced with fraction-free (Bareiss)
elimination over the Gaussian integers; pivots are chosen by smallest
coefficient height.  The determinant falls out of the elimination.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .numerics import ZERO, GaussianRational, as_gaussian

Matrix = Sequence[Sequence[GaussianRational]]


@dataclass
class Elimination:
    det: GaussianRational
    rank_deficient_at: int | None  # first column without a pivot, if singular
    solution: list[list[GaussianRational]] | None  # one list per right-hand side


def _lcm_denominator(rows) -> int:
    lcm = 1
    for row in rows:
        for v in row:
            lcm = math.lcm(lcm, v.re.denominator, v.im.denominator)
    return lcm


def _height(a: int, b: int) -> int:
    return max(abs(a), abs(b)).bit_length()


def eliminate(M: Matrix, rhs: Sequence[Sequence[GaussianRational]] = ()) -> Elimination:
    """Bareiss elimination of ``M`` (square) with optional right-hand sides.

    ``rhs`` is a list of column vectors.  Returns the exact determinant and,
    when ``M`` is invertible, the exact solutions.
    """
    n = len(M)
    if n == 0:
        return Elimination(GaussianRational(1), None, [[] for _ in rhs])
    if any(len(row) != n for row in M):
        raise ValueError("matrix must be square")
    r = len(rhs)
    rows = [[as_gaussian(v) for v in M[i]] + [as_gaussian(rhs[j][i]) for j in range(r)] for i in range(n)]
    scale = _lcm_denominator(rows)
    re = [[int(v.re * scale) for v in row] for row in rows]
    im = [[int(v.im * scale) for v in row] for row in rows]
    real = not any(any(row) for row in im)
    width = n + r
    sign = 1
    prev_re, prev_im = 1, 0
    for k in range(n):
        best, best_h = -1, None
        for i in range(k, n):
            if re[i][k] or im[i][k]:
                h = _height(re[i][k], im[i][k])
                if best_h is None or h < best_h:
                    best, best_h = i, h
        if best < 0:
            return Elimination(ZERO, k, None)
        if best != k:
            re[k], re[best] = re[best], re[k]
            im[k], im[best] = im[best], im[k]
            sign = -sign
        pr, rk = re[k][k], re[k]
        if real:
            for i in range(k + 1, n):
                ri = re[i]
                f = ri[k]
                if f:
                    for j in range(k + 1, width):
                        ri[j] = (ri[j] * pr - f * rk[j]) // prev_re
                else:
                    for j in range(k + 1, width):
                        ri[j] = ri[j] * pr // prev_re
                ri[k] = 0
            prev_re = pr
        else:
            pi, ik = im[k][k], im[k]
            den = prev_re * prev_re + prev_im * prev_im
            for i in range(k + 1, n):
                ri, ii = re[i], im[i]
                fr, fi = ri[k], ii[k]
                for j in range(k + 1, width):
                    # (x * p - f * y) / prev over Z[i]
                    xr, xi = ri[j], ii[j]
                    yr, yi = rk[j], ik[j]
                    ar = xr * pr - xi * pi - (fr * yr - fi * yi)
                    ai = xr * pi + xi * pr - (fr * yi + fi * yr)
                    ri[j] = (ar * prev_re + ai * prev_im) // den
                    ii[j] = (ai * prev_re - ar * prev_im) // den
                ri[k] = ii[k] = 0
            prev_re, prev_im = pr, pi
    s_n = Fraction(1, scale**n)
    det = GaussianRational(sign * re[n - 1][n - 1] * s_n, sign * im[n - 1][n - 1] * s_n)
    if not r:
        return Elimination(det, None, [])
    # back substitution on the triangular integer system (common scale cancels)
    U = [[GaussianRational(re[i][j], im[i][j]) for j in range(width)] for i in range(n)]
    sols = []
    for c in range(r):
        x = [ZERO] * n
        for i in range(n - 1, -1, -1):
            acc = U[i][n + c]
            row = U[i]
            for j in range(i + 1, n):
                if row[j] and x[j]:
                    acc = acc - row[j] * x[j]
            x[i] = acc / row[i]
        sols.append(x)
    return Elimination(det, None, sols)


def determinant(M: Matrix) -> GaussianRational:
    return eliminate(M).det


def solve(M: Matrix, b: Sequence[GaussianRational]) -> list[GaussianRational]:
    res = eliminate(M, [b])
    if res.solution is None:
        raise ZeroDivisionError(f"singular matrix (no pivot in column {res.rank_deficient_at})")
    return res.solution[0]


def inverse(M: Matrix) -> list[list[GaussianRational]]:
    n = len(M)
    cols = [[GaussianRational(1 if i == j else 0) for i in range(n)] for j in range(n)]
    res = eliminate(M, cols)
    if res.solution is None:
        raise ZeroDivisionError("singular matrix")
    return [[res.solution[j][i] for j in range(n)] for i in range(n)]


def matvec(M: Matrix, v: Sequence[GaussianRational]) -> list[GaussianRational]:
    out = []
    for row in M:
        acc = ZERO
        for a, b in zip(row, v):
            if a and b:
                acc = acc + a * b
        out.append(acc)
    return out
