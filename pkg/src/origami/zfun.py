"""Origami partition functions as sums of fixed-point contributions."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .euler import (
    CohPoint,
    PoleError,
    bracket,
    euler_coh,
    eval_coh,
    eval_coh_laurent,
    eval_k,
)
from .kchar import EvalPoint
from .nekrasov import v_char
from .partitions import RankVector, enumerate_tuples
from .qseries import QSeries, eta_bar, modular_rhs

RETRIES = 8


def _seed_stream(seed: int):
    """Deterministic sequence of seeds used when a draw lands on a pole."""
    rng = random.Random(seed)
    yield seed
    while True:
        yield rng.randrange(1 << 30)


def zk_coeffs(ranks: RankVector, N: int, p: EvalPoint, costable: bool = False) -> QSeries:
    """sum over tuples of q^n [-v] evaluated exactly at p."""
    out = []
    for n in range(N + 1):
        total = Fraction(0)
        for tup in enumerate_tuples(ranks, n):
            v = v_char(tup)
            if costable:
                v = v.subst_costable()
            total += eval_k(bracket(-v), p)
        out.append(total)
    return QSeries(out, N)


def zk_costable_coeffs(ranks: RankVector, N: int, p: EvalPoint) -> QSeries:
    return zk_coeffs(ranks, N, p, costable=True)


def z_coeffs(ranks: RankVector, N: int, p: CohPoint) -> QSeries:
    out = []
    for n in range(N + 1):
        total = Fraction(0)
        for tup in enumerate_tuples(ranks, n):
            total += eval_coh(euler_coh(-v_char(tup)), p)
        out.append(total)
    return QSeries(out, N)


def with_retry(fn, ranks: RankVector, seed: int, point_kind: str = "k"):
    """Call fn(point) at a seeded random point, redrawing on poles."""
    last = None
    for _, s in zip(range(RETRIES), _seed_stream(seed)):
        p = EvalPoint.random(ranks.slots(), s) if point_kind == "k" else CohPoint.random(ranks.slots(), s)
        try:
            return fn(p), p
        except PoleError as err:
            last = err
    raise last  # type: ignore[misc]


# limits onto special loci ----------------------------------------------


class LimitError(ArithmeticError):
    pass


def z_limit_coeffs(ranks: RankVector, N: int, base: CohPoint, direction: CohPoint) -> QSeries:
    """Coefficients of the cohomological series at a point where factors vanish.

    Each fixed point contributes a Laurent series in eps along base + eps*direction.
    The sum over fixed points of a given size must have no pole; its eps^0
    coefficient is the value of the (regular) total at the base point.
    """
    out = []
    for n in range(N + 1):
        acc: dict = {}
        for tup in enumerate_tuples(ranks, n):
            for k, c in eval_coh_laurent(euler_coh(-v_char(tup)), base, direction, 0).items():
                acc[k] = acc.get(k, 0) + c
        bad = {k: c for k, c in acc.items() if k < 0 and c}
        if bad:
            raise LimitError(f"q^{n}: total has a pole along the perturbation: {bad}")
        out.append(Fraction(acc.get(0, 0)))
    return QSeries(out, N)


def cy3_point(slots, seed: int) -> tuple:
    """A point with s1+s2+s3 = 0 and a generic perturbation direction."""
    p = CohPoint.random(slots, seed)
    s1, s2, _ = p.s
    base = CohPoint((s1, s2, -s1 - s2), dict(p.v), seed)
    return base, CohPoint.random(slots, seed + 10007)


def diagonal_point(slots, seed: int) -> tuple:
    """s1 = s2 = s3 = s and v_{12,1} = v_{13,1}, plus a generic perturbation direction."""
    p = CohPoint.random(slots, seed)
    s = p.s[0]
    v = dict(p.v)
    v[("13", 1)] = v[("12", 1)]
    return CohPoint((s, s, s), v, seed), CohPoint.random(slots, seed + 10007)


def z_cy3_coeffs(ranks: RankVector, N: int, seed: int) -> QSeries:
    if any(ranks[a] for a in ("14", "24", "34")):
        raise ValueError("cy3 specialization needs r_14 = r_24 = r_34 = 0")
    base, direction = cy3_point(ranks.slots(), seed)
    return z_limit_coeffs(ranks, N, base, direction)


def z_diagonal_coeffs(N: int, seed: int) -> QSeries:
    ranks = RankVector({"12": 1, "13": 1})
    base, direction = diagonal_point(ranks.slots(), seed)
    return z_limit_coeffs(ranks, N, base, direction)


@dataclass
class ModularResult:
    ok: bool
    lhs: QSeries
    rhs: QSeries
    per_seed: list


def z_modular_check(N: int = 4, seeds=(7, 8, 9)) -> ModularResult:
    """Z * eta_bar^8 against eta(q^4)^2 / (eta(q^2) eta(q)^6) up to q^N."""
    runs = [z_diagonal_coeffs(N, s) for s in seeds]
    if any(r != runs[0] for r in runs[1:]):
        raise ArithmeticError("diagonal specialization depends on the point")
    lhs = runs[0] * eta_bar(N) ** 8
    rhs = modular_rhs(N)
    return ModularResult(lhs == rhs, lhs, rhs, runs)
