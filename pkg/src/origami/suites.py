"""Verification suites: each returns a list of named checks with the compared values."""

from __future__ import annotations

import re
import time
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from . import dyson, nekrasov, signs
from .adhm2d import framed_tangent_12
from .euler import CohPoint, PoleError, bracket, euler_coh, eval_coh, eval_k, eval_k_exponential
from .kchar import Character, EvalPoint
from .partitions import LABELS, RankVector, complement, enumerate_tuples, partitions_of, phi
from .qseries import QSeries, crossed_rhs, eta_bar, g_closed, rank1_rhs
from .zfun import z_cy3_coeffs, z_modular_check, zk_coeffs, zk_costable_coeffs

SCHEMA = 1


class UsageError(ValueError):
    pass


def parse_ranks(text: str) -> RankVector:
    """Parse ``12=1,34=2``; errors report the character offset of the bad entry."""
    ranks: dict = {}
    pos = 0
    if not text.strip():
        return RankVector()
    for chunk in text.split(","):
        start = pos
        pos += len(chunk) + 1
        m = re.fullmatch(r"\s*(\d+)\s*=\s*(-?\d+)\s*", chunk)
        if not m:
            raise UsageError(f"bad rank entry {chunk!r} at position {start}")
        label, val = m.group(1), int(m.group(2))
        if label not in LABELS:
            raise UsageError(f"unknown label {label!r} at position {start}")
        if label in ranks:
            raise UsageError(f"duplicate label {label!r} at position {start}")
        if val < 0:
            raise UsageError(f"negative rank for {label} at position {start}")
        ranks[label] = val
    return RankVector(ranks)


@dataclass
class Check:
    name: str
    ok: bool
    lhs: object = None
    rhs: object = None

    def to_json(self) -> dict:
        return {"name": self.name, "pass": bool(self.ok), "lhs": _js(self.lhs), "rhs": _js(self.rhs)}


@dataclass
class Config:
    ranks: RankVector | None = None
    nmax: int | None = None
    qorder: int | None = None
    seed: int = 7
    trials: int = 3
    x_mode: str = "first"


@dataclass
class Report:
    suite: str
    cfg: Config
    checks: list = field(default_factory=list)
    elapsed_ms: int = 0
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None and all(c.ok for c in self.checks)

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "schema": SCHEMA,
            "suite": self.suite,
            "ranks": str(self.cfg.ranks) if self.cfg.ranks is not None else None,
            "seed": self.cfg.seed,
            "trials": self.cfg.trials,
            "checks": [c.to_json() for c in self.checks],
        }
        if self.error:
            out["error"] = self.error
        if timing:
            out["elapsed_ms"] = self.elapsed_ms
        return out


def _js(x):
    if isinstance(x, QSeries):
        return x.to_json()
    if isinstance(x, (Fraction, Character, RankVector)):
        return str(x)
    if isinstance(x, (list, tuple)):
        return [_js(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _js(v) for k, v in x.items()}
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    return str(x)


def _seeds(cfg: Config) -> list:
    return [cfg.seed + k for k in range(max(cfg.trials, 1))]


def _kpoint(ranks: RankVector, seed: int, fn):
    """fn(point) at the first pole-free seeded point derived from seed."""
    for k in range(8):
        p = EvalPoint.random(ranks.slots(), seed * 1009 + k)
        try:
            return p, fn(p)
        except PoleError:
            continue
    raise PoleError("no pole-free point found", seed)


def _cpoint(ranks: RankVector, seed: int, fn):
    for k in range(8):
        p = CohPoint.random(ranks.slots(), seed * 1009 + k)
        try:
            return p, fn(p)
        except PoleError:
            continue
    raise PoleError("no pole-free point found", seed)


def _ranks(cfg: Config, default: dict) -> RankVector:
    return cfg.ranks if cfg.ranks is not None else RankVector(default)


def _opt(value, default):
    return default if value is None else value


# suites -----------------------------------------------------------------


def suite_crossed(cfg: Config) -> list:
    ranks = RankVector({"12": 1, "34": 1})
    N = _opt(cfg.qorder, 4)
    out = []
    for s in _seeds(cfg):
        p, lhs = _kpoint(ranks, s, lambda p: zk_coeffs(ranks, N, p))
        out.append(Check(f"zk = Exp-product closed form (seed {s})", lhs == crossed_rhs(p, N), lhs, crossed_rhs(p, N)))
        # framing independence: move y_{34,1} only
        y = dict(p.y)
        y[("34", 1)] = y[("34", 1)] * 3 + 1
        moved = zk_coeffs(ranks, N, p.replace(y=y))
        out.append(Check(f"independent of w34 (seed {s})", moved == lhs, moved, lhs))
    out += rationality_checks(ranks, min(N, 3), cfg)
    return out


def rationality_checks(ranks: RankVector, N: int, cfg: Config) -> list:
    """Sign flips of each u_i, y and a common rescaling of all y leave zk unchanged."""
    out = []
    for s in _seeds(cfg):
        p, base = _kpoint(ranks, s, lambda p: zk_coeffs(ranks, N, p))
        for i in range(3):
            u = list(p.u)
            u[i] = -u[i]
            val = zk_coeffs(ranks, N, p.replace(u=u))
            out.append(Check(f"flip u{i + 1} (seed {s})", val == base, val, base))
        for slot in ranks.slots():
            y = dict(p.y)
            y[slot] = -y[slot]
            val = zk_coeffs(ranks, N, p.replace(y=y))
            out.append(Check(f"flip y{slot[0]}.{slot[1]} (seed {s})", val == base, val, base))
        scaled = zk_coeffs(ranks, N, p.replace(y={k: v * Fraction(5, 3) for k, v in p.y.items()}))
        out.append(Check(f"common y scaling (seed {s})", scaled == base, scaled, base))
    return out


def suite_rank1(cfg: Config) -> list:
    ranks = RankVector({"12": 1})
    N = _opt(cfg.qorder, 6)
    out = []
    for s in _seeds(cfg):
        p, lhs = _kpoint(ranks, s, lambda p: zk_coeffs(ranks, N, p))
        rhs = rank1_rhs(p, N)
        out.append(Check(f"zk = Exp closed form (seed {s})", lhs == rhs, lhs, rhs))
    return out


def suite_cy3(cfg: Config) -> list:
    ranks = _ranks(cfg, {"12": 1, "13": 1})
    N = _opt(cfg.qorder, 4)
    expected = eta_bar(N) ** (-ranks.total)
    runs = []
    out = []
    for s in _seeds(cfg):
        z = z_cy3_coeffs(ranks, N, s)
        runs.append(z)
        out.append(Check(f"Z at s1+s2+s3=0 equals eta_bar^-{ranks.total} (seed {s})", z == expected, z, expected))
    out.append(Check("point independence", all(r == runs[0] for r in runs), runs, None))
    return out


def suite_modular(cfg: Config) -> list:
    N = _opt(cfg.qorder, 4)
    res = z_modular_check(N, tuple(_seeds(cfg)))
    return [
        Check("Z * eta_bar^8 = eta(q^4)^2/(eta(q^2) eta(q)^6)", res.ok, res.lhs, res.rhs),
        Check("point independence", all(r == res.per_seed[0] for r in res.per_seed), res.per_seed, None),
    ]


COSTABLE_CASES = (
    ({"12": 2}, 4),
    ({"12": 1, "34": 1}, 4),
    ({"12": 1, "23": 1, "34": 1}, 2),
    ({"12": 1, "13": 1, "24": 1, "34": 1}, 1),
)


def suite_costable(cfg: Config) -> list:
    cases = [(cfg.ranks, _opt(cfg.nmax, 2))] if cfg.ranks is not None else [(RankVector(r), n) for r, n in COSTABLE_CASES]
    out = []
    for ranks, N in cases:
        for s in _seeds(cfg):
            p, lhs = _kpoint(ranks, s, lambda p: zk_coeffs(ranks, N, p))
            rhs = zk_costable_coeffs(ranks, N, p)
            out.append(Check(f"{ranks} n<={N} (seed {s})", lhs == rhs, lhs, rhs))
    return out


SIGN_GRID = tuple({a: 1} for a in LABELS) + ({"12": 1, "34": 1},)


def suite_signs(cfg: Config) -> list:
    nmax = _opt(cfg.nmax, 4)
    grid = [cfg.ranks] if cfg.ranks is not None else [RankVector(r) for r in SIGN_GRID]
    out = []
    for ranks in grid:
        for n in range(nmax + 1):
            for tup in enumerate_tuples(ranks, n):
                cok = signs.xi_cok_dim(tup)
                hp = signs.hook_parity(tup)
                gm = signs.g_moving_rank(tup)
                total = ((ranks.total - 1) * n + cok + gm) % 2
                out.append(Check(f"parity {ranks} {tup}", cok % 2 == hp, {"cok": cok}, {"hook_parity": hp}))
                out.append(Check(f"total sign {ranks} {tup}", total == 0, {"cok": cok, "rkGm": gm}, 0))
    return out


def suite_comb(cfg: Config) -> list:
    nmax = _opt(cfg.nmax, 6)
    out = []
    for n in range(nmax + 1):
        for lam in partitions_of(n):
            got, want = signs.comb_dims(lam), signs.comb_expected(lam)
            out.append(Check(f"{lam}", got == want, got, want))
    return out


def suite_tvir(cfg: Config) -> list:
    """Character identities: quiver/sheaf match, the 4D comparison identity, P-identities."""
    nmax = _opt(cfg.nmax, 3)
    out = []
    for rd in ({"12": 1, "34": 1}, {"12": 1, "23": 1}):
        ranks = RankVector(rd)
        vd = -sum(ranks[a] * ranks[complement(a)] for a in ("12", "13", "23"))
        for n in range(nmax + 1):
            for tup in enumerate_tuples(ranks, n):
                sh, qv = nekrasov.sheaf_tangent(tup), nekrasov.quiver_tangent(tup)
                out.append(Check(f"sheaf = quiver {ranks} {tup}", sh == qv, sh, qv))
                out.append(Check(f"rank {ranks} {tup}", sh.rank() == 2 * vd, sh.rank(), 2 * vd))
    ranks = RankVector({"12": 1, "34": 1})
    for n in range(nmax + 1):
        for tup in enumerate_tuples(ranks, n):
            lhs = nekrasov.v_char(tup) - (
                nekrasov.tangent_ambient(tup) - nekrasov.lambda_char(tup) + nekrasov.c_norm_char(tup)
            )
            g = nekrasov.g_4d(tup)
            out.append(Check(f"4D comparison {tup}", lhs == g - g.dual(), lhs, g - g.dual()))
    for a in LABELS:
        pa = nekrasov.p_const(f"P{phi(a)}")
        first = pa + pa.dual() * nekrasov.t_set(a, -1)
        out.append(Check(f"P identity 1 for {a}", first == nekrasov.p_const("P" + complement(a)), first, None))
        pA = nekrasov.p_const("P" + a)
        second = pa * pA + pa.dual() * pA.dual()
        out.append(Check(f"P identity 2 for {a}", second == nekrasov.P1234, second, nekrasov.P1234))
    return out


def suite_reduction2d(cfg: Config) -> list:
    nmax = _opt(cfg.nmax, 4)
    out = []
    t3 = Character.t(3)
    for r in (1, 2):
        ranks = RankVector({"12": r})
        for n in range(nmax + 1):
            for tup in enumerate_tuples(ranks, n):
                v = nekrasov.v_char(tup)
                rhs = (1 - t3) * nekrasov.big_T(tup, "12")
                out.append(Check(f"v = (1-t3) T12 {tup}", v == rhs, v, rhs))

        def genus(p, ranks=ranks):
            coeffs = []
            for n in range(nmax + 1):
                tot = Fraction(0)
                for tup in enumerate_tuples(ranks, n):
                    lams = [tup.get(s) for s in ranks.slots()]
                    tot += eval_k(bracket(-((1 - t3) * framed_tangent_12(lams))), p)
                coeffs.append(tot)
            return QSeries(coeffs, nmax)

        for s in _seeds(cfg):
            p, lhs = _kpoint(ranks, s, lambda p: zk_coeffs(ranks, nmax, p))
            rhs = genus(p)
            out.append(Check(f"rank {r} series = arm/leg genus (seed {s})", lhs == rhs, lhs, rhs))
    return out


def suite_reduction3d(cfg: Config) -> list:
    nmax = _opt(cfg.nmax, 3)
    out = []
    t123inv = Character.t(1, -1) * Character.t(2, -1) * Character.t(3, -1)
    for rd in ({"12": 1, "13": 1}, {"12": 1}, {"12": 1, "13": 1, "23": 1}):
        ranks = RankVector(rd)
        for n in range(nmax + 1):
            for tup in enumerate_tuples(ranks, n):
                T = nekrasov.tangent_ambient_3d(tup)
                lhs = nekrasov.v_char(tup) - (T - T.dual() * t123inv)
                g = nekrasov.g_3d(tup)
                out.append(Check(f"3D comparison {tup}", lhs == g - g.dual(), lhs, g - g.dual()))
                gm = g.moving_part("TT").rank()
                out.append(Check(f"rk G^m even {tup}", gm % 2 == 0, gm, 0))
                tm = T.moving_part("TT0").rank()
                out.append(Check(f"T0-moving ambient rank even {tup}", tm % 2 == 0, tm, 0))
    return out


def suite_ds_poly(cfg: Config) -> list:
    ranks = _ranks(cfg, {"12": 1, "34": 1})
    nmax = _opt(cfg.nmax, 3)
    experimental = ranks["12"] > 1
    out = []
    for s in _seeds(cfg):
        for n in range(nmax + 1):
            cp, f = _cpoint(ranks, s, lambda cp: dyson.cz_in_x(ranks, n, cp, cfg.x_mode))
            tag = " [experimental]" if experimental else ""
            out.append(Check(f"C*Z q^{n} polynomial in x (seed {s}){tag}", f.is_polynomial(), repr(f), None))
            if not experimental:
                for tup in enumerate_tuples(ranks, n):
                    c = dyson.contribution_in_x(tup, cp, cfg.x_mode).x_coeff(-1)
                    out.append(Check(f"[x^-1] e(-v) = 0 at {tup} (seed {s})", c == 0, c, 0))
    return out


def _spoint(seed: int, avoid):
    """Three rationals s1, s2, s3 at which ``avoid`` does not raise PoleError."""
    for k in range(16):
        cp = CohPoint.random([], seed * 1009 + k)
        try:
            return cp.s, avoid(*cp.s)
        except PoleError:
            continue
    raise PoleError("no pole-free point found", seed)


def suite_ds_ode(cfg: Config) -> list:
    N = _opt(cfg.qorder, 4)
    out = []
    for s in _seeds(cfg):
        pt, res = _spoint(s, lambda a, b, c: dyson.ds_ode_residual(a, b, c, N + 1))
        res = res.truncate(N)
        out.append(Check(f"ODE residual = 0 mod q^{N + 1} at {_js(list(pt))}", all(x == 0 for x in res), res, None))
    return out


def suite_g_closed(cfg: Config) -> list:
    N = _opt(cfg.qorder, 6)
    out = []
    for s in _seeds(cfg):
        pt, g = _spoint(s, lambda a, b, c: dyson.g_series(a, b, c, N))
        rhs = g_closed(pt, N)
        out.append(Check(f"G series = closed product at {_js(list(pt))}", g == rhs, g, rhs))
    return out


def suite_limit(cfg: Config) -> list:
    """K-theoretic contributions at t = exp(b s) against cohomological ones."""
    import random

    ranks = _ranks(cfg, {"12": 1, "34": 1})
    nmax = _opt(cfg.nmax, 3)
    pool = [t for n in range(1, nmax + 1) for t in enumerate_tuples(ranks, n)]
    rng = random.Random(cfg.seed)
    picks = rng.sample(pool, min(10, len(pool)))
    out = []
    for tup in picks:
        v = nekrasov.v_char(tup)
        cp, coh = _cpoint(ranks, cfg.seed, lambda cp: eval_coh(euler_coh(-v), cp))
        errs = []
        with mpmath.workdps(100):
            ref = mpmath.mpf(coh.numerator) / coh.denominator
            for b in ("1e-3", "1e-4", "1e-5"):
                k = eval_k_exponential(bracket(-v), cp, b)
                errs.append(abs(k - ref) / abs(ref))
            ok = errs[-1] < mpmath.mpf("1e-6") and errs[2] < errs[1] < errs[0]
        out.append(Check(f"b -> 0 limit {tup}", ok, [mpmath.nstr(e, 5) for e in errs], "rel err < 1e-6 at b=1e-5"))
    return out


SUITES = {
    "crossed": suite_crossed,
    "rank1": suite_rank1,
    "cy3": suite_cy3,
    "modular": suite_modular,
    "costable": suite_costable,
    "signs": suite_signs,
    "comb": suite_comb,
    "tvir": suite_tvir,
    "reduction2d": suite_reduction2d,
    "reduction3d": suite_reduction3d,
    "ds-poly": suite_ds_poly,
    "ds-ode": suite_ds_ode,
    "g-closed": suite_g_closed,
    "limit": suite_limit,
}


def run_suite(name: str, cfg: Config) -> Report:
    if name not in SUITES:
        raise UsageError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    start = time.perf_counter()
    rep = Report(name, cfg)
    try:
        rep.checks = SUITES[name](cfg)
    except (ValueError, ArithmeticError) as err:
        rep.error = f"{type(err).__name__}: {err}"
    rep.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return rep


def exit_code(reports: list) -> int:
    """0 if everything passed, else 10 + index of the first failing suite."""
    names = list(SUITES)
    for rep in reports:
        if not rep.ok:
            return 10 + names.index(rep.suite)
    return 0
