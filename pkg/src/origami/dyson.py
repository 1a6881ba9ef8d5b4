"""Descending-x expansions of the non-normalized crossed series and the Hilbert-scheme series G."""

from __future__ import annotations

from fractions import Fraction

from sympy import QQ, Poly, Symbol

from .adhm2d import hilb_weights
from .euler import CohPoint, PoleError, euler_coh, eval_coh_in_x
from .nekrasov import c_norm_char, v_char
from .partitions import RankVector, enumerate_tuples, partitions_of
from .qseries import QSeries

X = Symbol("x")


def _poly(coeffs) -> Poly:
    """Poly from coefficients in ascending order."""
    return Poly([QQ(Fraction(c).numerator, Fraction(c).denominator) for c in reversed(list(coeffs))] or [QQ(0)], X, domain=QQ)


class RationalFunction1V:
    """num/den in x over QQ, reduced, with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None):
        if den is None:
            den = Poly(1, X, domain=QQ)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        g = num.gcd(den)
        if not g.is_one:
            num, den = num.quo(g), den.quo(g)
        lc = den.LC()
        self.num = num.quo_ground(lc)
        self.den = den.quo_ground(lc)

    @classmethod
    def const(cls, c) -> "RationalFunction1V":
        return cls(_poly([c]))

    @classmethod
    def linear(cls, a, c) -> "RationalFunction1V":
        """a*x + c."""
        return cls(_poly([c, a]))

    @classmethod
    def from_coeffs(cls, num, den=(1,)) -> "RationalFunction1V":
        return cls(_poly(num), _poly(den))

    def __add__(self, other) -> "RationalFunction1V":
        other = _lift(other)
        return RationalFunction1V(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction1V":
        return RationalFunction1V(-self.num, self.den)

    def __sub__(self, other) -> "RationalFunction1V":
        return self + (-_lift(other))

    def __mul__(self, other) -> "RationalFunction1V":
        other = _lift(other)
        return RationalFunction1V(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction1V":
        other = _lift(other)
        if other.num.is_zero:
            raise ZeroDivisionError("division by the zero function")
        return RationalFunction1V(self.num * other.den, self.den * other.num)

    def __pow__(self, k: int) -> "RationalFunction1V":
        if k < 0:
            return RationalFunction1V(self.den ** (-k), self.num ** (-k))
        return RationalFunction1V(self.num ** k, self.den ** k)

    def __eq__(self, other) -> bool:
        other = _lift(other)
        return self.num == other.num and self.den == other.den

    __hash__ = None  # type: ignore[assignment]

    def is_polynomial(self) -> bool:
        return self.den.degree() == 0

    def __call__(self, x) -> Fraction:
        x = QQ(Fraction(x).numerator, Fraction(x).denominator)
        d = self.den.eval(x)
        if d == 0:
            raise PoleError("denominator", x)
        val = self.num.eval(x) / d
        return Fraction(int(val.numerator), int(val.denominator))

    def laurent_at_infinity(self, depth: int) -> dict:
        """{k: [x^k]} for the expansion in descending powers, down to x^{-depth}."""
        q, r = self.num.div(self.den)
        out = {}
        for (k,), c in q.terms():
            if c:
                out[k] = Fraction(int(c.numerator), int(c.denominator))
        if r.is_zero or depth <= 0:
            return out
        d = self.den.degree()
        # r/den = R(xi)/D(xi) in xi = 1/x
        rc = _ascending(r, d + 1)
        R = list(reversed(rc))
        D = list(reversed(_ascending(self.den, d + 1)))
        series = [Fraction(0)] * (depth + 1)
        for k in range(depth + 1):
            acc = R[k] if k < len(R) else Fraction(0)
            for j in range(1, min(k, d) + 1):
                acc -= D[j] * series[k - j]
            series[k] = acc / D[0]
        for k in range(1, depth + 1):
            if series[k]:
                out[-k] = series[k]
        return out

    def x_coeff(self, k: int) -> Fraction:
        depth = max(-k, 0)
        return self.laurent_at_infinity(depth).get(k, Fraction(0))

    def __repr__(self) -> str:
        return f"({self.num.as_expr()})/({self.den.as_expr()})"


def _ascending(p: Poly, length: int) -> list:
    coeffs = [Fraction(int(c.numerator), int(c.denominator)) for c in reversed(p.all_coeffs())]
    return (coeffs + [Fraction(0)] * length)[:length]


def _lift(x) -> RationalFunction1V:
    return x if isinstance(x, RationalFunction1V) else RationalFunction1V.const(x)


def assert_polynomial(f: RationalFunction1V) -> bool:
    return f.is_polynomial()


def x_coeff(f: RationalFunction1V, k: int) -> Fraction:
    return f.x_coeff(k)


# crossed ranks ----------------------------------------------------------


def _check_crossed(ranks: RankVector) -> None:
    others = [a for a in ("13", "14", "23", "24") if ranks[a]]
    if not ranks["12"] or not ranks["34"] or others:
        raise ValueError(f"need r_12, r_34 > 0 and all other ranks 0, got {ranks}")


def x_slots(ranks: RankVector, mode: str = "first") -> tuple:
    """Slots carrying x: v_{12,1} only, or every v_{12,alpha} shifted by x."""
    if mode == "first":
        return (("12", 1),)
    if mode == "sum":
        return tuple(("12", a) for a in range(1, ranks["12"] + 1))
    raise ValueError(f"unknown x mode {mode!r}")


def contribution_in_x(tup, cp: CohPoint, mode: str = "first") -> RationalFunction1V:
    slots = x_slots(tup.ranks, mode)
    return eval_coh_in_x(euler_coh(-v_char(tup)), cp, slots, shift=(mode == "sum"))


def c_in_x(ranks: RankVector, cp: CohPoint, mode: str = "first") -> RationalFunction1V:
    chi = c_norm_char(ranks)
    return eval_coh_in_x(euler_coh(chi), cp, x_slots(ranks, mode), shift=(mode == "sum"))


def cz_in_x(ranks: RankVector, n: int, cp: CohPoint, mode: str = "first") -> RationalFunction1V:
    """q^n coefficient of C * Z as a function of x."""
    _check_crossed(ranks)
    total = RationalFunction1V.const(0)
    for tup in enumerate_tuples(ranks, n):
        total = total + contribution_in_x(tup, cp, mode)
    return c_in_x(ranks, cp, mode) * total


# the series G ------------------------------------------------------------


def g_series(s1, s2, s3, N: int) -> QSeries:
    """sum_n q^n sum_{|lam|=n} prod_mu (mu - s3)/mu over Hilb tangent weights mu."""
    s1, s2, s3 = Fraction(s1), Fraction(s2), Fraction(s3)
    coeffs = []
    for n in range(N + 1):
        total = Fraction(0)
        for lam in partitions_of(n):
            term = Fraction(1)
            for e1, e2 in hilb_weights(lam):
                mu = e1 * s1 + e2 * s2
                if mu == 0:
                    raise PoleError((e1, e2), (s1, s2, s3))
                term *= (mu - s3) / mu
            total += term
        coeffs.append(total)
    return QSeries(coeffs, N)


def ds_ode_residual(s1, s2, s3, N: int) -> QSeries:
    """s3 s4 G(s1,s2,s3) G'(s3,s4,s1) + s1 s2 G(s3,s4,s1) G'(s1,s2,s3); valid to q^{N-1}."""
    s1, s2, s3 = Fraction(s1), Fraction(s2), Fraction(s3)
    s4 = -s1 - s2 - s3
    if s1 * s2 * s3 * s4 == 0:
        raise PoleError("s1 s2 s3 s4", (s1, s2, s3))
    ga = g_series(s1, s2, s3, N)
    gb = g_series(s3, s4, s1, N)
    return ga * gb.dq() * (s3 * s4) + gb * ga.dq() * (s1 * s2)
