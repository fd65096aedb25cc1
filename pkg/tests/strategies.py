from fractions import Fraction

from hypothesis import strategies as st

from fischer_cauchy.numerics import GaussianRational
from fischer_cauchy.polynomials import HomPoly, LinearChange, monomial_basis

small_fractions = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))
gaussian = st.builds(GaussianRational, small_fractions, small_fractions)
real_gaussian = st.builds(GaussianRational, small_fractions)
nonzero_gaussian = gaussian.filter(bool)


@st.composite
def hompolys(draw, n=None, degree=None, max_n=3, max_degree=6, real=False):
    n = draw(st.integers(1, max_n)) if n is None else n
    m = draw(st.integers(0, max_degree)) if degree is None else degree
    basis = monomial_basis(n, m)
    coeff = real_gaussian if real else gaussian
    chosen = draw(st.lists(st.sampled_from(basis), max_size=min(len(basis), 6), unique=True))
    return HomPoly(n, m, {a: draw(coeff) for a in chosen})


@st.composite
def invertible_changes(draw, n):
    rows = draw(st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=n, max_size=n))
    try:
        return LinearChange(tuple(tuple(GaussianRational(v) for v in r) for r in rows))
    except ValueError:
        from hypothesis import assume

        assume(False)
