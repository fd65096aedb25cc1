import math
from fractions import Fraction

import pytest

from fischer_cauchy.fischer import norm_sq_rF
from fischer_cauchy.harmonic import harmonic_projection
from fischer_cauchy.polynomials import HomPoly, laplacian, multiply, norm_sq_poly
from fischer_cauchy.surveys import (
    complex_norm_ratio_sequence,
    harmonic_ratio_sequence,
    harmonic_ratio_sq,
    one_variable_ratio_sequence,
    lower_bound_survey,
)


def test_harmonic_ratio_matches_direct_computation():
    # harmonic Y_3 = Re (x1 + i x2)^3 in the plane
    Y = harmonic_projection(HomPoly.monomial((3, 0)))
    for p in (1, 2):
        u = multiply(norm_sq_poly(2, p), Y)
        direct = norm_sq_rF(laplacian(u, p)).real() / norm_sq_rF(u).real()
        assert direct == harmonic_ratio_sq(p, 2, 3)


def test_harmonic_sequence_is_bounded_and_one_variable_grows():
    seq = harmonic_ratio_sequence(1, 2, 20)
    assert max(seq) <= 2 * seq[5]
    assert max(seq) < 4
    one = one_variable_ratio_sequence(1, 20)
    assert one[-1] > 2 * one[5]
    with pytest.raises(ValueError):
        harmonic_ratio_sequence(1, 1, 5)


def test_complex_norm_ratio_closed_form_for_plane():
    for row in complex_norm_ratio_sequence(1, 2, 8):
        assert row["ratio"] == pytest.approx(4 + 4 / row["m"], rel=1e-9)
        assert row["first_ratio"] > 0 and row["rf_ratio"] > 0


def test_lower_bound_survey_examples():
    rows = lower_bound_survey(norm_sq_poly(2, 2), 2, 2, 4, samples=5, seed=0)
    assert all(r["operator_min_ratio"] == pytest.approx(1.0, rel=1e-9) for r in rows)
    assert all(r["min_sampled_ratio"] >= r["operator_min_ratio"] - 1e-9 for r in rows)
    rows = lower_bound_survey(HomPoly.monomial((1, 1)), 1, 2, 2, samples=3, seed=0)
    assert rows[0]["operator_min_ratio"] == 0
    a = lower_bound_survey(HomPoly(2, 4, {(4, 0): 1, (0, 4): 1}), 2, 2, 3, samples=4, seed=7)
    b = lower_bound_survey(HomPoly(2, 4, {(4, 0): 1, (0, 4): 1}), 2, 2, 3, samples=4, seed=7)
    assert a == b
    assert all(r["operator_min_ratio"] > 0.5 for r in a)
    assert isinstance(a[0]["min_sampled_ratio_sq_exact"], Fraction)
    assert math.isfinite(a[0]["min_sampled_ratio"])
