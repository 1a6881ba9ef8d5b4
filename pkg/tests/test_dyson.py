from fractions import Fraction

import pytest

from origami.dyson import (
    RationalFunction1V,
    assert_polynomial,
    c_in_x,
    contribution_in_x,
    cz_in_x,
    ds_ode_residual,
    g_series,
    x_coeff,
)
from origami.euler import CohPoint, PoleError
from origami.partitions import RankVector, enumerate_tuples
from origami.qseries import g_closed

CROSSED = RankVector({"12": 1, "34": 1})
F = Fraction


def test_rational_function_examples():
    f = RationalFunction1V.from_coeffs([1, 0, 1], [0, 1])  # (x^2+1)/x
    assert not assert_polynomial(f)
    assert x_coeff(f, -1) == 1 and x_coeff(f, 1) == 1
    g = RationalFunction1V.from_coeffs([3, 1])
    assert assert_polynomial(g)
    assert all(x_coeff(g, -k) == 0 for k in range(1, 5))
    assert (f * RationalFunction1V.linear(1, 0)).is_polynomial()
    assert (f - f) == 0
    with pytest.raises(ZeroDivisionError):
        f / RationalFunction1V.const(0)


@pytest.mark.parametrize("w,w1,w2", [(F(3), F(5), F(7)), (F(-2, 3), F(1, 4), F(9, 5))])
def test_second_coefficient_identity(w, w1, w2):
    lin = RationalFunction1V.linear
    f = lin(1, w + w1) * lin(1, w + w2) / (lin(1, w) * lin(1, w + w1 + w2))
    assert f.x_coeff(-1) == 0
    assert f.x_coeff(-2) == w1 * w2


def test_laurent_against_evaluation():
    f = RationalFunction1V.from_coeffs([2, -1, 0, 5], [1, 3, 1])
    coeffs = f.laurent_at_infinity(30)
    x = F(10**6)
    approx = sum(c * x**k for k, c in coeffs.items())
    assert abs(approx - f(x)) < F(1, 10**80)


def test_cz_n0_is_c():
    cp = CohPoint.random(CROSSED.slots(), 3)
    s1, s2, s3 = cp.s
    s4 = -s1 - s2 - s3
    expected = RationalFunction1V.linear(-1, cp.v[("34", 1)] - s3 - s4)
    assert cz_in_x(CROSSED, 0, cp) == expected == c_in_x(CROSSED, cp)


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_cz_polynomial(seed):
    cp = CohPoint.random(CROSSED.slots(), seed)
    for n in range(4):
        assert cz_in_x(CROSSED, n, cp).is_polynomial()


def test_per_fixed_point_residue_vanishes():
    cp = CohPoint.random(CROSSED.slots(), 4)
    for n in range(4):
        for t in enumerate_tuples(CROSSED, n):
            assert contribution_in_x(t, cp).x_coeff(-1) == 0


def test_crossed_precondition():
    with pytest.raises(ValueError):
        cz_in_x(RankVector({"12": 1, "23": 1}), 1, CohPoint.random([("12", 1), ("23", 1)], 1))


def test_higher_rank_x_variants():
    # observed behaviour for r12 = 2: x must shift every v_{12,alpha}
    rv = RankVector({"12": 2, "34": 1})
    cp = CohPoint.random(rv.slots(), 7)
    assert all(cz_in_x(rv, n, cp, "sum").is_polynomial() for n in range(3))
    assert not cz_in_x(rv, 1, cp, "first").is_polynomial()


def test_g_series_first_order():
    s1, s2, s3 = F(2), F(3), F(5)
    g = g_series(s1, s2, s3, 1)
    assert g[0] == 1
    assert g[1] == (s1 + s3) * (s2 + s3) / (s1 * s2)


@pytest.mark.parametrize("s", [(F(2, 7), F(3, 11), F(5, 13)), (F(1, 3), F(-7, 2), F(4)), (F(-5, 6), F(2, 9), F(-1, 4))])
def test_g_series_closed_form(s):
    assert g_series(*s, 6) == g_closed(s, 6)


def test_ds_residual_constant_term():
    s1, s2, s3 = F(2, 7), F(3, 11), F(5, 13)
    s4 = -s1 - s2 - s3
    val = s3 * s4 * (s1 + s3) * (s1 + s4) / (s3 * s4) + s1 * s2 * (s1 + s3) * (s2 + s3) / (s1 * s2)
    assert val == 0
    assert ds_ode_residual(s1, s2, s3, 1)[0] == 0


@pytest.mark.parametrize("s", [(F(2, 7), F(3, 11), F(5, 13)), (F(1, 3), F(-7, 2), F(4)), (F(-5, 6), F(2, 9), F(-1, 4))])
def test_ds_residual_vanishes(s):
    assert all(c == 0 for c in ds_ode_residual(*s, 5))


def test_integer_point():
    assert all(c == 0 for c in ds_ode_residual(2, 3, 5, 4))
    # beyond q^4 the weight -3*s1 + 2*s2 of a box with arm = leg = 2 vanishes
    with pytest.raises(PoleError):
        g_series(2, 3, 5, 5)
