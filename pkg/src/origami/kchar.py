"""Torus characters in t1..t4 (with t1 t2 t3 t4 = 1) and framing variables.

Exponents are stored doubled so that square roots such as t1^{1/2} are exact
integers.  The t4 exponent is always folded into t1, t2, t3, which gives every
character a unique normal form.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple

Slot = tuple  # (label, alpha), e.g. ("12", 1)


class Monomial(NamedTuple):
    dt: tuple[int, int, int]
    dw: tuple = ()  # sorted ((slot, exponent), ...), doubled, no zeros

    def __mul__(self, other: "Monomial") -> "Monomial":  # type: ignore[override]
        dt = (self.dt[0] + other.dt[0], self.dt[1] + other.dt[1], self.dt[2] + other.dt[2])
        if not other.dw:
            return Monomial(dt, self.dw)
        if not self.dw:
            return Monomial(dt, other.dw)
        acc = dict(self.dw)
        for s, e in other.dw:
            acc[s] = acc.get(s, 0) + e
        return Monomial(dt, tuple(sorted((s, e) for s, e in acc.items() if e)))

    def inverse(self) -> "Monomial":
        return Monomial((-self.dt[0], -self.dt[1], -self.dt[2]), tuple((s, -e) for s, e in self.dw))

    def power(self, k: int) -> "Monomial":
        if k == 0:
            return ONE
        return Monomial(tuple(k * d for d in self.dt), tuple((s, k * e) for s, e in self.dw))

    @property
    def is_trivial(self) -> bool:
        return self.dt == (0, 0, 0) and not self.dw

    def w_exponent(self, slot) -> int:
        """Doubled exponent of the framing variable ``slot``."""
        for s, e in self.dw:
            if s == slot:
                return e
        return 0

    def __str__(self) -> str:
        parts = [f"t{i + 1}^{{{d}/2}}" for i, d in enumerate(self.dt) if d]
        parts += [f"w[{s[0]},{s[1]}]^{{{e}/2}}" for s, e in self.dw]
        return " ".join(parts) if parts else "1"


ONE = Monomial((0, 0, 0), ())


def canonicalize(dt4: Iterable[int], dw: Mapping | Iterable = ()) -> Monomial:
    """Build a monomial from doubled exponents of t1..t4 and framing variables.

    The t4 exponent is removed using t4 = (t1 t2 t3)^{-1}.

    >>> canonicalize((0, 0, 0, 2))
    Monomial(dt=(-2, -2, -2), dw=())
    """
    d1, d2, d3, *rest = tuple(dt4)
    d4 = rest[0] if rest else 0
    items = dw.items() if isinstance(dw, Mapping) else dw
    acc: dict = {}
    for s, e in items:
        acc[tuple(s)] = acc.get(tuple(s), 0) + e
    return Monomial((d1 - d4, d2 - d4, d3 - d4), tuple(sorted((s, e) for s, e in acc.items() if e)))


def _mono_key(m: Monomial):
    return (m.dt, m.dw)


class Character:
    """A finite integer combination of monomials.

    Instances are treated as immutable values; arithmetic returns new objects.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        self._terms = {m: c for m, c in (terms or {}).items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Character":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # constructors -------------------------------------------------------

    @classmethod
    def monomial(cls, m: Monomial, coeff: int = 1) -> "Character":
        return cls({m: coeff})

    @classmethod
    def const(cls, c: int) -> "Character":
        return cls({ONE: c})

    @classmethod
    def t(cls, a: int, exp: int = 1) -> "Character":
        """t_a^exp for a in 1..4 (integer exponent)."""
        dt4 = [0, 0, 0, 0]
        dt4[a - 1] = 2 * exp
        return cls({canonicalize(dt4): 1})

    @classmethod
    def w(cls, slot, exp: int = 1) -> "Character":
        return cls({Monomial((0, 0, 0), ((tuple(slot), 2 * exp),)): 1})

    # accessors ----------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coeff(self, m: Monomial) -> int:
        return self._terms.get(m, 0)

    # ring operations ----------------------------------------------------

    def __add__(self, other: "Character") -> "Character":
        if isinstance(other, int):
            other = Character.const(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Character._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Character":
        return Character._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "Character") -> "Character":
        if isinstance(other, int):
            other = Character.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "Character":
        return (-self) + other

    def __mul__(self, other) -> "Character":
        if isinstance(other, int):
            return self.scale(other)
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Character._raw(out)

    __rmul__ = __mul__

    def scale(self, k: int) -> "Character":
        if not k:
            return Character()
        return Character._raw({m: k * c for m, c in self._terms.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Character.const(other)
        if not isinstance(other, Character):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # named operations ---------------------------------------------------

    def dual(self) -> "Character":
        return Character._raw({m.inverse(): c for m, c in self._terms.items()})

    def rank(self) -> int:
        return sum(self._terms.values())

    def fixed_part(self, torus: str = "TT") -> "Character":
        """Sub-sum of monomials fixed by the chosen torus.

        ``T``: the rank-3 torus t1 t2 t3 t4 = 1 (framing ignored);
        ``TT``: T times the framing torus;
        ``T0``/``TT0``: the Calabi-Yau 3 subtorus t1 t2 t3 = 1 (and t4 = 1).
        """
        pred = _FIXED[torus]
        return Character._raw({m: c for m, c in self._terms.items() if pred(m)})

    def moving_part(self, torus: str = "TT") -> "Character":
        return self - self.fixed_part(torus)

    def fixed_dim(self, torus: str = "TT") -> int:
        fixed = self.fixed_part(torus)
        for m, c in fixed.items():
            if c < 0:
                raise ValueError(f"fixed part has negative multiplicity {c} at {m}")
        return fixed.rank()

    def subst_costable(self) -> "Character":
        """Replace every w_{A,alpha} by t_A w_{A,alpha}^{-1}."""
        out: dict = {}
        for m, c in self._terms.items():
            dt = list(m.dt) + [0]
            dw = []
            for slot, e in m.dw:
                a, b = int(slot[0][0]), int(slot[0][1])
                dt[a - 1] += e
                dt[b - 1] += e
                dw.append((slot, -e))
            mm = canonicalize(dt, dw)
            v = out.get(mm, 0) + c
            if v:
                out[mm] = v
            else:
                out.pop(mm, None)
        return Character._raw(out)

    def evaluate(self, p: "EvalPoint") -> Fraction:
        return sum((c * p.monomial_value(m) for m, c in self._terms.items()), Fraction(0))

    def slots(self) -> set:
        return {s for m in self._terms for s, _ in m.dw}

    # text form ----------------------------------------------------------

    def sorted_terms(self) -> list:
        return sorted(self._terms.items(), key=lambda mc: _mono_key(mc[0]))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c} * {m}" for m, c in self.sorted_terms())

    def __repr__(self) -> str:
        return f"Character({self})"

    @classmethod
    def parse(cls, text: str) -> "Character":
        text = text.strip()
        if text == "0":
            return cls()
        out: dict = {}
        for chunk in text.split(" + "):
            coeff_s, mono_s = chunk.split(" * ", 1)
            dt = [0, 0, 0]
            dw = []
            for tok in mono_s.split():
                if tok == "1":
                    continue
                mt = _T_TOKEN.fullmatch(tok)
                if mt:
                    dt[int(mt.group(1)) - 1] += int(mt.group(2))
                    continue
                mw = _W_TOKEN.fullmatch(tok)
                if not mw:
                    raise ValueError(f"cannot parse monomial token {tok!r}")
                dw.append(((mw.group(1), int(mw.group(2))), int(mw.group(3))))
            m = canonicalize(dt, dw)
            out[m] = out.get(m, 0) + int(coeff_s)
        return cls(out)


_T_TOKEN = re.compile(r"t([1-3])\^\{(-?\d+)/2\}")
_W_TOKEN = re.compile(r"w\[(\d\d),(\d+)\]\^\{(-?\d+)/2\}")

_FIXED = {
    "T": lambda m: m.dt == (0, 0, 0),
    "TT": lambda m: m.dt == (0, 0, 0) and not m.dw,
    "T0": lambda m: m.dt[0] == m.dt[1] == m.dt[2] and m.dt[0] % 2 == 0,
    "TT0": lambda m: m.dt[0] == m.dt[1] == m.dt[2] and m.dt[0] % 2 == 0 and not m.dw,
}


def character_sum(chars: Iterable[Character]) -> Character:
    out: dict = {}
    for ch in chars:
        for m, c in ch.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return Character._raw(out)


@dataclass(frozen=True)
class EvalPoint:
    """Rational point with t_i = u_i^2 and w_slot = y_slot^2."""

    u: tuple
    y: Mapping = field(default_factory=dict)
    seed: int | None = None

    def monomial_value(self, m: Monomial) -> Fraction:
        u = self.u
        val = u[0] ** m.dt[0] * u[1] ** m.dt[1] * u[2] ** m.dt[2]
        for s, e in m.dw:
            val *= self.y[s] ** e
        return val

    def power(self, n: int) -> "EvalPoint":
        """The point at which every monomial takes its n-th power."""
        return EvalPoint(tuple(x ** n for x in self.u), {s: v ** n for s, v in self.y.items()}, self.seed)

    def replace(self, u=None, y=None) -> "EvalPoint":
        return EvalPoint(tuple(u) if u is not None else self.u, dict(y) if y is not None else dict(self.y), self.seed)

    @classmethod
    def random(cls, slots: Iterable, seed: int, bound: int = 64) -> "EvalPoint":
        slots = list(slots)
        rng = random.Random(seed)
        vals = _distinct_rationals(rng, 3 + len(slots), bound)
        return cls(tuple(vals[:3]), dict(zip(slots, vals[3:])), seed)


def _distinct_rationals(rng: random.Random, k: int, bound: int) -> list:
    seen: set = set()
    out = []
    while len(out) < k:
        x = Fraction(rng.randint(1, bound), rng.randint(1, bound))
        if x == 1 or abs(x) in seen:
            continue
        seen.add(abs(x))
        out.append(x if rng.random() < 0.5 else -x)
    return out
