"""Factored Euler classes of characters and their exact evaluation.

A class is never expanded: it is a product over monomials m of
(m^{1/2} - m^{-1/2})^k in K-theory, or of the linear form c_1(m)^k in
cohomology.  Sums only happen after evaluation at a point.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

import mpmath

from .kchar import Character, EvalPoint, Monomial


class PoleError(ZeroDivisionError):
    """A denominator factor vanishes at the evaluation point."""

    def __init__(self, factor, point=None):
        super().__init__(f"factor {factor} vanishes at the evaluation point")
        self.factor = factor
        self.point = point


def _check_no_fixed(chi: Character, what: str) -> None:
    fixed = chi.fixed_part("TT")
    if fixed:
        raise ValueError(f"{what} undefined: character has torus-fixed terms {fixed}")


def _combine(a: Mapping, b: Mapping, sign: int = 1) -> dict:
    out = dict(a)
    for m, k in b.items():
        v = out.get(m, 0) + sign * k
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


@dataclass(frozen=True)
class FactoredK:
    """sign * prod_m (m^{1/2} - m^{-1/2})^{k_m}."""

    factors: Mapping[Monomial, int] = field(default_factory=dict)
    sign: int = 1

    def __mul__(self, other: "FactoredK") -> "FactoredK":
        return FactoredK(_combine(self.factors, other.factors), self.sign * other.sign)

    def inverse(self) -> "FactoredK":
        return FactoredK({m: -k for m, k in self.factors.items()}, self.sign)

    def __str__(self) -> str:
        if not self.factors:
            return "1" if self.sign > 0 else "-1"
        body = " ".join(f"[{m}]^{k}" for m, k in sorted(self.factors.items(), key=lambda mk: (mk[0].dt, mk[0].dw)))
        return body if self.sign > 0 else "-" + body


@dataclass(frozen=True)
class FactoredCoh:
    """prod_m c_1(m)^{k_m}; c_1 of a monomial is its linear form in s, v."""

    factors: Mapping[Monomial, int] = field(default_factory=dict)
    sign: int = 1

    def __mul__(self, other: "FactoredCoh") -> "FactoredCoh":
        return FactoredCoh(_combine(self.factors, other.factors), self.sign * other.sign)

    def inverse(self) -> "FactoredCoh":
        return FactoredCoh({m: -k for m, k in self.factors.items()}, self.sign)

    def __str__(self) -> str:
        if not self.factors:
            return "1" if self.sign > 0 else "-1"
        body = " ".join(f"({linear_form_str(m)})^{k}" for m, k in sorted(self.factors.items(), key=lambda mk: (mk[0].dt, mk[0].dw)))
        return body if self.sign > 0 else "-" + body


def bracket(chi: Character) -> FactoredK:
    """The symmetrized K-theoretic Euler class [chi]."""
    _check_no_fixed(chi, "bracket")
    return FactoredK(dict(chi.items()))


def euler_coh(chi: Character) -> FactoredCoh:
    _check_no_fixed(chi, "Euler class")
    return FactoredCoh(dict(chi.items()))


def linear_form_str(m: Monomial) -> str:
    terms = [(Fraction(d, 2), f"s{i + 1}") for i, d in enumerate(m.dt) if d]
    terms += [(Fraction(e, 2), f"v[{s[0]},{s[1]}]") for s, e in m.dw]
    out = ""
    for c, name in terms:
        mag = abs(c)
        piece = name if mag == 1 else f"{mag}*{name}"
        if not out:
            out = piece if c > 0 else "-" + piece
        else:
            out += (" + " if c > 0 else " - ") + piece
    return out or "0"


# evaluation -----------------------------------------------------------


def _half(m: Monomial) -> Monomial:
    """m^{1/2}; needs every doubled exponent even."""
    if any(d % 2 for d in m.dt) or any(e % 2 for _, e in m.dw):
        raise ValueError(f"[{m}] needs a fourth root of the point coordinates")
    return Monomial(tuple(d // 2 for d in m.dt), tuple((s, e // 2) for s, e in m.dw))


def eval_k(f: FactoredK, p: EvalPoint) -> Fraction:
    """Exact value with t_i = u_i^2, w = y^2, so m^{1/2} is a rational monomial in u, y."""
    num = Fraction(f.sign)
    den = Fraction(1)
    for m, k in f.factors.items():
        root = p.monomial_value(_half(m))
        val = root - 1 / root
        if val == 0:
            if k < 0:
                raise PoleError(m, p)
            return Fraction(0)
        if k > 0:
            num *= val ** k
        else:
            den *= val ** (-k)
    return num / den


@dataclass(frozen=True)
class CohPoint:
    """Rational values of s1, s2, s3 (s4 = -s1-s2-s3) and of each v_{A,alpha}."""

    s: tuple
    v: Mapping = field(default_factory=dict)
    seed: int | None = None

    def form_value(self, m: Monomial) -> Fraction:
        val = Fraction(m.dt[0]) * self.s[0] + m.dt[1] * self.s[1] + m.dt[2] * self.s[2]
        for slot, e in m.dw:
            val += e * self.v[slot]
        return val / 2

    @property
    def s4(self) -> Fraction:
        return -(self.s[0] + self.s[1] + self.s[2])

    def shifted(self, direction: "CohPoint", eps) -> "CohPoint":
        return CohPoint(
            tuple(a + eps * b for a, b in zip(self.s, direction.s)),
            {k: self.v[k] + eps * direction.v.get(k, 0) for k in self.v},
            self.seed,
        )

    @classmethod
    def random(cls, slots, seed: int, bound: int = 64) -> "CohPoint":
        rng = random.Random(seed)
        slots = list(slots)
        vals = []
        seen = set()
        while len(vals) < 3 + len(slots):
            x = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
            if x == 0 or x in seen:
                continue
            seen.add(x)
            vals.append(x)
        return cls(tuple(vals[:3]), dict(zip(slots, vals[3:])), seed)


def eval_coh(f: FactoredCoh, p: CohPoint) -> Fraction:
    num = Fraction(f.sign)
    den = Fraction(1)
    for m, k in f.factors.items():
        val = p.form_value(m)
        if val == 0:
            if k < 0:
                raise PoleError(m, p)
            return Fraction(0)
        if k > 0:
            num *= val ** k
        else:
            den *= val ** (-k)
    return num / den


def eval_coh_in_x(f: FactoredCoh, p: CohPoint, slots=(("12", 1),), shift: bool = False):
    """The class as a rational function of x, other parameters fixed by p.

    Each listed slot gets v = x (or v = x + p.v[slot] when ``shift``).
    """
    from .dyson import RationalFunction1V

    num = RationalFunction1V.const(f.sign)
    den = RationalFunction1V.const(1)
    for m, k in f.factors.items():
        a = sum((Fraction(m.w_exponent(s), 2) for s in slots), Fraction(0))
        c = p.form_value(m)
        if not shift:
            c -= sum((Fraction(m.w_exponent(s), 2) * p.v[s] for s in slots), Fraction(0))
        if a == 0 and c == 0:
            if k < 0:
                raise PoleError(m, p)
            return RationalFunction1V.const(0)
        lin = RationalFunction1V.linear(a, c)
        if k > 0:
            num = num * lin ** k
        else:
            den = den * lin ** (-k)
    return num / den


def eval_coh_laurent(f: FactoredCoh, base: CohPoint, direction: CohPoint, order: int = 0) -> dict:
    """Laurent expansion in eps of the class at base + eps*direction.

    Returns {power: coefficient} for powers up to ``order``.  Used to take
    limits onto special loci (e.g. s1+s2+s3 = 0) where single factors vanish.
    """
    lead = 0
    facs = []
    for m, k in f.factors.items():
        c0 = base.form_value(m)
        c1 = _form_value_linear(direction, m)
        if c0 == 0:
            # the factor is exactly c1 * eps
            if c1 == 0:
                if k < 0:
                    raise PoleError(m, base)
                return {}
            lead += k
            facs.append((c1, Fraction(0), k))
        else:
            facs.append((c0, c1, k))
    depth = order - lead
    if depth < 0:
        return {}
    series = [Fraction(0)] * (depth + 1)
    series[0] = Fraction(f.sign)
    for a0, a1, k in facs:
        series = _mul_series(series, _power_linear(a0, a1, k, depth), depth)
    return {lead + i: c for i, c in enumerate(series) if c}


def _form_value_linear(direction: CohPoint, m: Monomial) -> Fraction:
    val = Fraction(m.dt[0]) * direction.s[0] + m.dt[1] * direction.s[1] + m.dt[2] * direction.s[2]
    for slot, e in m.dw:
        val += e * direction.v.get(slot, 0)
    return val / 2


def _mul_series(a: list, b: list, depth: int) -> list:
    out = [Fraction(0)] * (depth + 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j in range(depth + 1 - i):
            if b[j]:
                out[i + j] += x * b[j]
    return out


def _power_linear(a0: Fraction, a1: Fraction, k: int, depth: int) -> list:
    """(a0 + a1 eps)^k truncated at eps^depth; a0 != 0."""
    ratio = a1 / a0
    out = []
    coeff = Fraction(1)
    for i in range(depth + 1):
        out.append(a0 ** k * coeff * ratio ** i)
        coeff = coeff * (k - i) / (i + 1)
    return out


def eval_k_exponential(f: FactoredK, p: CohPoint, b, dps: int = 100):
    """Value at t_i = exp(b s_i), w = exp(b v) in mpmath arithmetic.

    Each factor is m^{1/2} - m^{-1/2} = 2 sinh(b * c_1(m) / 2).
    """
    with mpmath.workdps(dps):
        b = mpmath.mpf(b)
        val = mpmath.mpf(f.sign)
        for m, k in f.factors.items():
            form = p.form_value(m)
            x = 2 * mpmath.sinh(b * mpmath.mpf(form.numerator) / form.denominator / 2)
            val *= x ** k
        return val
