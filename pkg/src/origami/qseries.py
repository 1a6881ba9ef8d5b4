"""Truncated power series in q over the rationals, plethystic exponentials and closed forms."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .euler import FactoredK, PoleError, eval_k
from .kchar import EvalPoint, Monomial, canonicalize


class QSeries:
    """Coefficients of q^0..q^N; arithmetic never reads past N."""

    __slots__ = ("N", "c")

    def __init__(self, coeffs: Iterable, N: int | None = None):
        c = [Fraction(x) for x in coeffs]
        if N is None:
            N = len(c) - 1
        if N < 0:
            raise ValueError("truncation order must be nonnegative")
        c = (c + [Fraction(0)] * (N + 1))[: N + 1]
        self.N = N
        self.c = c

    @classmethod
    def one(cls, N: int) -> "QSeries":
        return cls([1], N)

    @classmethod
    def zero(cls, N: int) -> "QSeries":
        return cls([], N)

    @classmethod
    def monomial(cls, k: int, N: int, coeff=1) -> "QSeries":
        out = [Fraction(0)] * (N + 1)
        if k <= N:
            out[k] = Fraction(coeff)
        return cls(out, N)

    def __getitem__(self, k: int) -> Fraction:
        return self.c[k]

    def __len__(self) -> int:
        return self.N + 1

    def __iter__(self):
        return iter(self.c)

    def _order(self, other: "QSeries") -> int:
        return min(self.N, other.N)

    def _coerce(self, other) -> "QSeries":
        if isinstance(other, QSeries):
            return other
        return QSeries([other], self.N)

    def __add__(self, other) -> "QSeries":
        other = self._coerce(other)
        n = self._order(other)
        return QSeries([self.c[i] + other.c[i] for i in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self) -> "QSeries":
        return QSeries([-x for x in self.c], self.N)

    def __sub__(self, other) -> "QSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "QSeries":
        return (-self) + other

    def __mul__(self, other) -> "QSeries":
        if not isinstance(other, QSeries):
            k = Fraction(other)
            return QSeries([k * x for x in self.c], self.N)
        n = self._order(other)
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            a = self.c[i]
            if not a:
                continue
            for j in range(n + 1 - i):
                if other.c[j]:
                    out[i + j] += a * other.c[j]
        return QSeries(out, n)

    __rmul__ = __mul__

    def inverse(self) -> "QSeries":
        if self.c[0] == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv0 = 1 / self.c[0]
        out = [inv0]
        for n in range(1, self.N + 1):
            s = sum((self.c[k] * out[n - k] for k in range(1, n + 1)), Fraction(0))
            out.append(-s * inv0)
        return QSeries(out, self.N)

    def __truediv__(self, other) -> "QSeries":
        if not isinstance(other, QSeries):
            return self * (1 / Fraction(other))
        return self * other.inverse()

    def __rtruediv__(self, other) -> "QSeries":
        return self.inverse() * other

    def __pow__(self, k: int) -> "QSeries":
        if k < 0:
            return self.inverse() ** (-k)
        out = QSeries.one(self.N)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        n = self._order(other)
        return self.c[: n + 1] == other.c[: n + 1]

    __hash__ = None  # type: ignore[assignment]

    def truncate(self, N: int) -> "QSeries":
        return QSeries(self.c[: N + 1], min(N, self.N))

    def dq(self) -> "QSeries":
        """Formal derivative in q; the result is valid to order N-1."""
        return QSeries([k * self.c[k] for k in range(1, self.N + 1)], max(self.N - 1, 0))

    def log(self) -> "QSeries":
        if self.c[0] != 1:
            raise ValueError("log needs constant term 1")
        # h' = f'/f
        f = self.c
        h = [Fraction(0)] * (self.N + 1)
        for n in range(1, self.N + 1):
            s = n * f[n] - sum((k * h[k] * f[n - k] for k in range(1, n)), Fraction(0))
            h[n] = s / n
        return QSeries(h, self.N)

    def exp(self) -> "QSeries":
        if self.c[0] != 0:
            raise ValueError("exp needs constant term 0")
        f = self.c
        g = [Fraction(1)] + [Fraction(0)] * self.N
        for n in range(1, self.N + 1):
            g[n] = sum((k * f[k] * g[n - k] for k in range(1, n + 1)), Fraction(0)) / n
        return QSeries(g, self.N)

    def pow_rational(self, c) -> "QSeries":
        return (self.log() * Fraction(c)).exp()

    def subs_power(self, k: int) -> "QSeries":
        """f(q^k), same truncation."""
        out = [Fraction(0)] * (self.N + 1)
        for i, x in enumerate(self.c):
            if i * k > self.N:
                break
            out[i * k] = x
        return QSeries(out, self.N)

    def to_json(self) -> list:
        return [str(x) for x in self.c]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "QSeries":
        return cls([Fraction(x) for x in data])

    def __repr__(self) -> str:
        return f"QSeries({self.to_json()})"


def eta_bar(N: int) -> QSeries:
    """prod_{n>0} (1 - q^n) truncated at q^N."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    out = QSeries.one(N)
    for n in range(1, N + 1):
        out = out * QSeries([1] + [0] * (n - 1) + [-1], N)
    return out


# bracket expressions ----------------------------------------------------


class BracketExpr:
    """Expression tree evaluated at (p^n, q^n) to a truncated series."""

    def evaluate(self, p: EvalPoint, n: int, N: int) -> QSeries:
        raise NotImplementedError

    def __mul__(self, other: "BracketExpr") -> "BracketExpr":
        return Product((self, other))

    def __truediv__(self, other: "BracketExpr") -> "BracketExpr":
        return Quotient(self, other)


class Bracket(BracketExpr):
    """A product of brackets [m]^k, i.e. a FactoredK, as a q-constant."""

    def __init__(self, f: FactoredK):
        self.f = f

    @classmethod
    def of(cls, *monos: Monomial) -> "Bracket":
        factors: dict = {}
        for m in monos:
            factors[m] = factors.get(m, 0) + 1
        return cls(FactoredK(factors))

    def evaluate(self, p, n, N):
        return QSeries([eval_k(self.f, p.power(n))], N)


class Scalar(BracketExpr):
    def __init__(self, value):
        self.value = Fraction(value)

    def evaluate(self, p, n, N):
        return QSeries([self.value], N)


class QGeom(BracketExpr):
    """q/(1-q), evaluated at q^n."""

    def evaluate(self, p, n, N):
        return QSeries([1 if k and k % n == 0 else 0 for k in range(N + 1)], N)


class Product(BracketExpr):
    def __init__(self, parts):
        self.parts = tuple(parts)

    def evaluate(self, p, n, N):
        out = QSeries.one(N)
        for part in self.parts:
            out = out * part.evaluate(p, n, N)
        return out


class Quotient(BracketExpr):
    def __init__(self, num: BracketExpr, den: BracketExpr):
        self.num, self.den = num, den

    def evaluate(self, p, n, N):
        return self.num.evaluate(p, n, N) / self.den.evaluate(p, n, N)


def plethystic_exp(expr: BracketExpr, p: EvalPoint, N: int) -> QSeries:
    """Exp(f) = exp(sum_n f(p^n, q^n) / n), truncated at q^N."""
    total = QSeries.zero(N)
    for n in range(1, N + 1):
        term = expr.evaluate(p, n, N)
        if term[0] != 0:
            raise ValueError("plethystic exponential needs f(q=0) = 0")
        total = total + term * Fraction(1, n)
    return total.exp()


# closed forms -----------------------------------------------------------


def _mono(*pairs) -> Monomial:
    """Monomial from (index, integer exponent) pairs, indices 1..4."""
    dt4 = [0, 0, 0, 0]
    for a, e in pairs:
        dt4[a - 1] += 2 * e
    return canonicalize(dt4)


def rank1_kernel() -> BracketExpr:
    num = Bracket.of(_mono((1, 1), (3, 1)), _mono((2, 1), (3, 1)))
    den = Bracket.of(_mono((1, 1)), _mono((2, 1)))
    return num / den * QGeom()


def crossed_second_kernel() -> BracketExpr:
    num = Bracket.of(_mono((1, 1), (3, 1)), _mono((1, 1), (4, 1)))
    den = Bracket.of(_mono((3, 1)), _mono((4, 1)))
    return num / den * QGeom()


def rank1_rhs(p: EvalPoint, N: int) -> QSeries:
    return plethystic_exp(rank1_kernel(), p, N)


def crossed_rhs(p: EvalPoint, N: int) -> QSeries:
    return plethystic_exp(rank1_kernel(), p, N) * plethystic_exp(crossed_second_kernel(), p, N)


def modular_rhs(N: int) -> QSeries:
    """eta(q^4)^2 / (eta(q^2) eta(q)^6); the q-prefactor exponent is (8 - 2 - 6)/24 = 0."""
    e = eta_bar(N)
    return e.subs_power(4) ** 2 / (e.subs_power(2) * e ** 6)


def g_closed(sp, N: int) -> QSeries:
    """prod_n (1 - q^n)^{-c} with c = (s1+s3)(s2+s3)/(s1 s2)."""
    s1, s2, s3 = (Fraction(x) for x in sp.s[:3]) if hasattr(sp, "s") else (Fraction(x) for x in sp)
    if s1 * s2 == 0:
        raise PoleError("s1 s2", sp)
    c = (s1 + s3) * (s2 + s3) / (s1 * s2)
    return eta_bar(N).pow_rational(-c)
