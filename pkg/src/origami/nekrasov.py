"""The characters attached to a fixed point of the origami moduli space.

Every function takes the fixed point as a :class:`PartitionTuple` (which
carries its rank vector) and returns a canonical :class:`Character`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

from .kchar import Character, character_sum
from .partitions import (
    LABELS,
    SIX_MINUS_THREE,
    THREE,
    PartitionTuple,
    RankVector,
    complement,
    k_char,
    phi,
    psi,
)


def t(a: int, exp: int = 1) -> Character:
    return Character.t(a, exp)


def t_set(label: str, exp: int = 1) -> Character:
    """t_A = t_a t_b (power ``exp``)."""
    return t(int(label[0]), exp) * t(int(label[1]), exp)


def p_const(kind: str) -> Character:
    """P_a, P_A, P_1234 or t_A by name, e.g. ``"P1"``, ``"P34"``, ``"P1234"``, ``"t34"``."""
    if kind.startswith("t"):
        return t_set(kind[1:])
    digits = kind[1:]
    out = Character.const(1)
    for d in digits:
        out = out * (1 - t(int(d)))
    return out


@lru_cache(maxsize=None)
def _P(digits: str) -> Character:
    return p_const("P" + digits)


P1234 = _P("1234")


@dataclass(frozen=True)
class NekContext:
    """Framing and tautological characters N_A, K_A of one fixed point."""

    tuple_: PartitionTuple

    @property
    def ranks(self) -> RankVector:
        return self.tuple_.ranks

    @cached_property
    def N(self) -> dict:
        return {
            a: character_sum(Character.w((a, alpha)) for alpha in range(1, self.ranks[a] + 1))
            for a in LABELS
        }

    @cached_property
    def K(self) -> dict:
        out = {a: Character() for a in LABELS}
        for (a, alpha), lam in self.tuple_.items():
            out[a] = out[a] + k_char(lam, a, alpha)
        return out

    @cached_property
    def Kd(self) -> dict:
        return {a: k.dual() for a, k in self.K.items()}

    @cached_property
    def Nd(self) -> dict:
        return {a: n.dual() for a, n in self.N.items()}

    @cached_property
    def V(self) -> Character:
        return character_sum(self.K.values())


def _ctx(x) -> NekContext:
    return x if isinstance(x, NekContext) else NekContext(x)


def big_T(x, label: str) -> Character:
    """T_A = N_A K_A^* + t_A N_A^* K_A - P_A K_A K_A^*."""
    c = _ctx(x)
    N, K, Kd, Nd = c.N[label], c.K[label], c.Kd[label], c.Nd[label]
    return N * Kd + t_set(label) * Nd * K - _P(label) * K * Kd


@lru_cache(maxsize=4096)
def v_char(tup: PartitionTuple) -> Character:
    """Nekrasov's half of the virtual tangent space at a fixed point."""
    c = NekContext(tup)
    parts = []
    for a in LABELS:
        if not c.K[a] and not c.N[a]:
            continue
        parts.append(_P(str(phi(a))) * big_T(c, a))
        other = character_sum(c.Kd[b] for b in LABELS if b != a)
        if c.N[a] and other:
            parts.append(_P(complement(a)) * c.N[a] * other)
    cross = character_sum(
        c.K[a] * c.Kd[b] for i, a in enumerate(LABELS) for b in LABELS[i + 1:] if c.K[a] and c.K[b]
    )
    parts.append(-(P1234 * cross))
    v = character_sum(parts)
    if v.fixed_part("TT"):
        raise ArithmeticError(f"v has torus-fixed terms at {tup}: {v.fixed_part('TT')}")
    return v


def tangent_ambient(x) -> Character:
    """Tangent space of the smooth ambient space of unconstrained quiver data."""
    c = _ctx(x)
    V, Vd = c.V, c.V.dual()
    inv = character_sum(t(a, -1) for a in (1, 2, 3, 4)) - 1
    framing_in = character_sum(c.Nd.values()) * V
    framing_out = Vd * character_sum(c.N[b] * t_set(b, -1) for b in LABELS if c.N[b])
    return inv * Vd * V + framing_in + framing_out


def c_norm_char(ranks_or_ctx) -> Character:
    """Sum over A in {12,13,23} of N_A^* N_{A-bar} t_{A-bar}^{-1}."""
    if isinstance(ranks_or_ctx, RankVector):
        c = NekContext(PartitionTuple(ranks_or_ctx))
    else:
        c = _ctx(ranks_or_ctx)
    return character_sum(
        c.Nd[a] * c.N[complement(a)] * t_set(complement(a), -1) for a in THREE
    )


def lambda_char(x) -> Character:
    """Character of the maximal isotropic subbundle at a fixed point."""
    c = _ctx(x)
    V, Vd = c.V, c.V.dual()
    pair = t_set("12", -1) + t_set("13", -1) + t_set("23", -1)
    tail = character_sum(
        c.N[a] * t_set(a, -1) * character_sum(t(int(d), -1) for d in complement(a))
        for a in LABELS if c.N[a]
    )
    return pair * Vd * V + c_norm_char(c) + Vd * tail


def g_4d(x) -> Character:
    """The class G with v - (T_amb - Lambda + C) = G - G^*."""
    c = _ctx(x)
    K, Kd, Nd = c.K, c.Kd, c.Nd
    t1, t2, t3, t4 = (t(a) for a in (1, 2, 3, 4))
    parts = []
    diag3 = t1 + t2 + t3 - t1 * t2 - t1 * t3 - t2 * t3
    for a in THREE:
        parts.append(diag3 * Kd[a] * K[a])
    for a in SIX_MINUS_THREE:
        p = psi(a)
        coeff = character_sum(t(b) for b in (1, 2, 3, 4) if b != p)
        coeff = coeff - character_sum(t_set(b) for b in THREE if str(p) not in b)
        parts.append(coeff * Kd[a] * K[a])
    for a in LABELS:
        ta = t_set(a)
        parts.append(-((1 - ta + t(phi(a)) * ta) * Nd[a] * K[a]))
    for a in LABELS:
        for b in LABELS:
            if a != b:
                parts.append(-(Nd[a] * K[b]))
    off = 1 - t(1, -1) - t(2, -1) - t(3, -1) - t(4, -1) + t1 * t4 + t2 * t4 + t3 * t4
    for i, a in enumerate(LABELS):
        for b in LABELS[i + 1:]:
            parts.append(off * Kd[a] * K[b])
    return character_sum(parts)


def _check_3d(ranks: RankVector) -> None:
    if any(ranks[a] for a in SIX_MINUS_THREE):
        raise ValueError(f"3D reduction needs r_14 = r_24 = r_34 = 0, got {ranks}")


def tangent_ambient_3d(x) -> Character:
    c = _ctx(x)
    _check_3d(c.ranks)
    V, Vd = c.V, c.V.dual()
    inv = t(1, -1) + t(2, -1) + t(3, -1) - 1
    framing_in = character_sum(c.Nd[a] for a in THREE) * V
    framing_out = Vd * character_sum(c.N[b] * t_set(b, -1) for b in THREE if c.N[b])
    return inv * Vd * V + framing_in + framing_out


def g_3d(x) -> Character:
    """The class G with v - (T_amb - T_amb^* (t1 t2 t3)^{-1}) = G - G^* when r_a4 = 0."""
    c = _ctx(x)
    _check_3d(c.ranks)
    K, Kd, N, Nd = c.K, c.Kd, c.N, c.Nd
    t1, t2, t3 = t(1), t(2), t(3)
    t123 = t1 * t2 * t3
    parts = []
    diag = t1 + t2 + t3 + t_set("12", -1) + t_set("13", -1) + t_set("23", -1) + t123
    parts.append(diag * character_sum(K[a] * Kd[a] for a in THREE))
    for a in THREE:
        cc = int(next(d for d in "123" if d not in a))
        parts.append((t_set(a) - t123 - 1 + t(cc, -1)) * Nd[a] * K[a])
    off = -1 + t1 + t2 + t3 - t1 * t2 - t1 * t3 - t2 * t3 + t123
    parts.append(off * character_sum(K[a] * Kd[b] for i, a in enumerate(THREE) for b in THREE[i + 1:]))
    for a in THREE:
        cc = int(next(d for d in "123" if d not in a))
        for b in THREE:
            if a != b:
                parts.append((1 - t(cc)) * N[a] * Kd[b])
    return character_sum(parts)


def framing_pairing(x) -> Character:
    """Sum over all six A of N_A N_{A-bar}^* t_{A-bar}."""
    c = _ctx(x)
    return character_sum(
        c.N[a] * c.Nd[complement(a)] * t_set(complement(a)) for a in LABELS if c.N[a]
    )


def sheaf_tangent(x) -> Character:
    """Virtual tangent space of the framed-sheaf model at the fixed point."""
    c = _ctx(x)
    parts = [-framing_pairing(c)]
    for a in LABELS:
        abar = complement(a)
        pa = _P(abar)
        if c.N[a]:
            parts.append(pa * c.N[a] * c.V.dual())
            parts.append(pa.dual() * c.Nd[a] * c.V)
    parts.append(-(P1234 * c.V * c.V.dual()))
    return character_sum(parts)


def quiver_tangent(x) -> Character:
    """-sum N_A N_{A-bar}^* t_{A-bar} + v + v^*."""
    c = _ctx(x)
    v = v_char(c.tuple_)
    return -framing_pairing(c) + v + v.dual()


def dump_char(kind: str, tup: PartitionTuple, label: str | None = None) -> Character:
    """Look up a named character by the CLI ``--kind`` name."""
    c = NekContext(tup)
    table = {
        "v": lambda: v_char(tup),
        "tangent": lambda: tangent_ambient(c),
        "lambda": lambda: lambda_char(c),
        "cnorm": lambda: c_norm_char(c),
        "g4d": lambda: g_4d(c),
        "g3d": lambda: g_3d(c),
        "tangent3d": lambda: tangent_ambient_3d(c),
        "sheaf": lambda: sheaf_tangent(c),
        "T": lambda: big_T(c, label or "12"),
        "K": lambda: c.K[label or "12"],
        "N": lambda: c.N[label or "12"],
    }
    if kind in table:
        return table[kind]()
    if kind.startswith("P") or kind.startswith("t"):
        return p_const(kind)
    raise KeyError(f"unknown character kind {kind!r}")
