from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from origami.dyson import RationalFunction1V
from origami.euler import (
    CohPoint,
    FactoredCoh,
    FactoredK,
    PoleError,
    bracket,
    euler_coh,
    eval_coh,
    eval_coh_in_x,
    eval_coh_laurent,
    eval_k,
    eval_k_exponential,
)
from origami.kchar import Character, EvalPoint, Monomial
from origami.nekrasov import v_char
from origami.partitions import Partition, PartitionTuple, RankVector, enumerate_tuples
from strategies import characters

t1, t2, t3 = (Character.t(a) for a in (1, 2, 3))
M1, M2 = Monomial((2, 0, 0)), Monomial((0, 2, 0))
M13, M23 = Monomial((2, 0, 2)), Monomial((0, 2, 2))
SLOTS = [("12", 1), ("34", 1), ("13", 1)]


def single_box_v():
    return v_char(PartitionTuple(RankVector({"12": 1}), {("12", 1): Partition((1,))}))


def test_bracket_examples():
    assert bracket(Character()).factors == {}
    assert bracket(t1).factors == {M1: 1}
    assert bracket(-single_box_v()).factors == {M1: -1, M2: -1, M13: 1, M23: 1}
    with pytest.raises(ValueError):
        bracket(Character.const(1))


def test_euler_coh_examples():
    f = euler_coh(-single_box_v())
    assert eval_coh(f, CohPoint((1, 2, -5), {})) == Fraction(-4 * -3, 2) == 6
    assert eval_coh(euler_coh(t1), CohPoint((3, 1, 1), {})) == 3
    with pytest.raises(ValueError):
        euler_coh(2 - t1)


def test_eval_k_examples():
    p = EvalPoint((Fraction(2), Fraction(3), Fraction(5)), {})
    assert eval_k(FactoredK(), p) == 1
    assert eval_k(bracket(t1), p) == Fraction(3, 2)


def test_half_integer_bracket_needs_fourth_roots():
    p = EvalPoint.random([], 1)
    with pytest.raises(ValueError):
        eval_k(bracket(Character({Monomial((1, 0, 0)): 1})), p)


def test_pole_error():
    p = EvalPoint((Fraction(2), Fraction(2), Fraction(3)), {})
    f = bracket(-(t1 * t2.dual()))
    with pytest.raises(PoleError):
        eval_k(f, p)
    assert eval_k(f.inverse(), p) == 0
    with pytest.raises(PoleError):
        eval_coh(euler_coh(-(t1 * t2.dual())), CohPoint((1, 1, 2), {}))


@settings(max_examples=60)
@given(characters(), st.integers(0, 10**6))
def test_bracket_duality(chi, seed):
    chi = chi.moving_part("TT")
    p = EvalPoint.random(SLOTS, seed)
    try:
        lhs = eval_k(bracket(chi), p)
        rhs = eval_k(bracket(chi.dual()), p)
    except PoleError:
        return
    assert lhs == (-1) ** (chi.rank() % 2) * rhs


@settings(max_examples=60)
@given(characters(), characters(), st.integers(0, 10**6))
def test_multiplicativity(a, b, seed):
    a, b = a.moving_part("TT"), b.moving_part("TT")
    p, cp = EvalPoint.random(SLOTS, seed), CohPoint.random(SLOTS, seed)
    try:
        assert eval_k(bracket(a + b), p) == eval_k(bracket(a), p) * eval_k(bracket(b), p)
        assert eval_k(bracket(-a), p) * eval_k(bracket(a), p) == 1
    except PoleError:
        pass
    try:
        assert eval_coh(euler_coh(a + b), cp) == eval_coh(euler_coh(a), cp) * eval_coh(euler_coh(b), cp)
    except PoleError:
        pass


def test_eval_coh_in_x():
    p = CohPoint((Fraction(1), Fraction(2), Fraction(3)), {("12", 1): Fraction(7)})
    w = Character.w(("12", 1))
    # (x + s1) / x
    f = euler_coh(w * t1 - w)
    got = eval_coh_in_x(f, p)
    assert got == RationalFunction1V.from_coeffs([1, 1], [0, 1])
    assert eval_coh_in_x(euler_coh(t1 + t2), p) == RationalFunction1V.const(2)


def test_in_x_agrees_with_pointwise():
    rv = RankVector({"12": 1, "34": 1})
    cp = CohPoint.random(rv.slots(), 11)
    for t in enumerate_tuples(rv, 2):
        f = euler_coh(-v_char(t))
        fx = eval_coh_in_x(f, cp)
        assert fx(cp.v[("12", 1)]) == eval_coh(f, cp)


def test_laurent_matches_regular_value():
    rv = RankVector({"12": 1, "13": 1})
    base = CohPoint.random(rv.slots(), 5)
    direction = CohPoint.random(rv.slots(), 6)
    for t in enumerate_tuples(rv, 2):
        f = euler_coh(-v_char(t))
        series = eval_coh_laurent(f, base, direction, 0)
        assert series == {0: eval_coh(f, base)}


def test_laurent_leading_order():
    # s1 / (s1 - s2) at s1 = s2: a simple pole along the perturbation
    f = FactoredCoh({M1: 1, Monomial((2, -2, 0)): -1})
    base = CohPoint((Fraction(3), Fraction(3), Fraction(1)), {})
    direction = CohPoint((Fraction(1), Fraction(0), Fraction(0)), {})
    assert eval_coh_laurent(f, base, direction, 0) == {-1: Fraction(3), 0: Fraction(1)}


def test_cohomological_limit():
    rv = RankVector({"12": 1, "34": 1})
    cp = CohPoint.random(rv.slots(), 3)
    t = enumerate_tuples(rv, 3)[4]
    v = v_char(t)
    ref = eval_coh(euler_coh(-v), cp)
    errs = []
    with mpmath.workdps(100):
        for b in ("1e-3", "1e-4", "1e-5"):
            k = eval_k_exponential(bracket(-v), cp, b)
            errs.append(abs(k - ref) / abs(mpmath.mpf(ref.numerator) / ref.denominator))
    assert errs[0] > errs[1] > errs[2]
    assert errs[2] < 1e-6


def test_str_forms():
    assert str(FactoredK()) == "1"
    assert "s1" in str(euler_coh(t1))
