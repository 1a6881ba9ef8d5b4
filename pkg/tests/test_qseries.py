from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from origami.euler import bracket, eval_k
from origami.kchar import Character, EvalPoint, Monomial
from origami.qseries import (
    Bracket,
    QGeom,
    QSeries,
    Scalar,
    crossed_rhs,
    eta_bar,
    g_closed,
    modular_rhs,
    plethystic_exp,
    rank1_kernel,
    rank1_rhs,
)

fracs = st.fractions(min_value=-5, max_value=5, max_denominator=7)


def test_series_ops_examples():
    assert (QSeries([1, -1], 2) ** -2).to_json() == ["1", "2", "3"]
    f = QSeries([1, -1], 6)
    assert f.pow_rational(Fraction(1, 2)) ** 2 == f
    assert QSeries([1, 1, 1]).dq() == QSeries([1, 2])
    with pytest.raises(ZeroDivisionError):
        QSeries([0, 1]).inverse()
    with pytest.raises(ValueError):
        QSeries([2, 1]).log()


def test_eta_examples():
    assert eta_bar(4).to_json() == ["1", "-1", "-1", "0", "0"]
    assert eta_bar(3).inverse().to_json() == ["1", "1", "2", "3"]
    assert eta_bar(0).to_json() == ["1"]


def test_eta_pentagonal_sparsity():
    pent = {k * (3 * k - 1) // 2 for k in range(-5, 6)}
    e = eta_bar(20)
    for n in range(21):
        if n not in pent:
            assert e[n] == 0
        else:
            assert abs(e[n]) == 1


def test_pleth_examples():
    assert plethystic_exp(QGeom(), None, 4).to_json() == ["1", "1", "2", "3", "5"]
    assert plethystic_exp(Scalar(0) * QGeom(), None, 4) == QSeries.one(4)
    p = EvalPoint.random([], 5)
    series = plethystic_exp(rank1_kernel(), p, 3)
    assert eval_k(Bracket.of().f, p) == 1
    num = bracket(Character.t(1) * Character.t(3) + Character.t(2) * Character.t(3))
    den = bracket(Character.t(1) + Character.t(2))
    assert series[1] == eval_k(num, p) / eval_k(den, p)
    with pytest.raises(ValueError):
        plethystic_exp(Scalar(1), None, 2)


@settings(max_examples=20)
@given(st.integers(0, 10**6))
def test_exp_additive(seed):
    p = EvalPoint.random([], seed)
    f, g = rank1_kernel(), Bracket.of(Monomial((2, 0, 0))) * QGeom()
    both = plethystic_exp(_Sum(f, g), p, 4)
    assert both == plethystic_exp(f, p, 4) * plethystic_exp(g, p, 4)


class _Sum:
    def __init__(self, a, b):
        self.a, self.b = a, b

    def evaluate(self, p, n, N):
        return self.a.evaluate(p, n, N) + self.b.evaluate(p, n, N)


@given(st.lists(fracs, min_size=1, max_size=6))
def test_log_exp_inverse(cs):
    f = QSeries([0] + cs)
    assert f.exp().log() == f
    g = QSeries([1] + cs)
    assert g.log().exp() == g


@given(st.lists(fracs, min_size=1, max_size=6), st.lists(fracs, min_size=1, max_size=6))
def test_division(a, b):
    f, g = QSeries(a), QSeries([1] + b)
    assert (f / g) * g == f.truncate(min(f.N, g.N))


def _sympy_coeffs(expr, N):
    q = sympy.Symbol("q")
    s = sympy.series(expr, q, 0, N + 1).removeO()
    return [str(sympy.Poly(s, q).coeff_monomial(q**k)) for k in range(N + 1)]


def test_modular_rhs_against_independent_product():
    from sympy import QQ
    from sympy.polys.ring_series import rs_mul, rs_series_inversion
    from sympy.polys.rings import ring

    R, q = ring("q", QQ)
    N = 8
    prec = N + 1

    def eb(k):
        out = R(1)
        for n in range(1, N + 1):
            out = rs_mul(out, 1 - q ** (k * n), q, prec)
        return out

    num = rs_mul(eb(4), eb(4), q, prec)
    den = eb(2)
    for _ in range(6):
        den = rs_mul(den, eb(1), q, prec)
    ratio = rs_mul(num, rs_series_inversion(den, q, prec), q, prec)
    expected = [str(ratio.coeff(q**k)) if k else str(ratio.coeff(1)) for k in range(N + 1)]
    assert modular_rhs(N).to_json() == expected
    assert modular_rhs(4).to_json() == ["1", "6", "28", "104", "342"]


def test_g_closed_first_order():
    s = (Fraction(2), Fraction(3), Fraction(5))
    g = g_closed(s, 6)
    assert g[0] == 1
    assert g[1] == (s[0] + s[2]) * (s[1] + s[2]) / (s[0] * s[1])


def test_g_closed_against_sympy():
    q = sympy.Symbol("q")
    s1, s2, s3 = sympy.Rational(1, 3), sympy.Rational(-2), sympy.Rational(5, 7)
    c = (s1 + s3) * (s2 + s3) / (s1 * s2)
    expr = sympy.prod([(1 - q**n) ** (-c) for n in range(1, 5)])
    assert g_closed((Fraction(1, 3), Fraction(-2), Fraction(5, 7)), 4).to_json() == _sympy_coeffs(expr, 4)


def test_crossed_rhs_constant_term():
    p = EvalPoint.random([], 2)
    assert crossed_rhs(p, 3)[0] == 1
    assert rank1_rhs(p, 3)[0] == 1


def test_json_roundtrip():
    f = QSeries([1, Fraction(-2, 3), 0])
    assert QSeries.from_json(f.to_json()) == f
    assert f.to_json() == ["1", "-2/3", "0"]
