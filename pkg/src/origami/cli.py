"""Command-line front end."""

from __future__ import annotations

import json
import sys

import click

from .euler import CohPoint
from .kchar import EvalPoint
from .nekrasov import dump_char
from .partitions import PartitionTuple
from .suites import SUITES, Config, UsageError, exit_code, parse_ranks, run_suite
from .zfun import z_coeffs, z_cy3_coeffs, z_diagonal_coeffs, zk_coeffs, zk_costable_coeffs


def _ranks_arg(ctx, param, value):
    if value is None:
        return None
    try:
        return parse_ranks(value)
    except UsageError as err:
        raise click.BadParameter(str(err)) from err


def _emit(payload, as_json: bool, out: str | None, text: str) -> None:
    body = json.dumps(payload, indent=2, sort_keys=True) if as_json else text
    if out:
        with open(out, "w") as fh:
            fh.write(body + "\n")
    else:
        click.echo(body)


def _nonneg(ctx, param, value):
    if value is not None and value < 0:
        raise click.BadParameter("must be nonnegative")
    return value


ranks_opt = click.option("--ranks", callback=_ranks_arg, help="Rank vector such as 12=1,34=1.")
seed_opt = click.option("--seed", default=7, show_default=True, type=int)
json_opt = click.option("--json", "as_json", is_flag=True, help="Emit JSON.")
out_opt = click.option("--out", type=click.Path(dir_okay=False), help="Write output to FILE.")


@click.group()
def main():
    """Exact origami partition functions and their checks."""


@main.command()
@ranks_opt
@click.option("--qorder", default=4, show_default=True, type=int, callback=_nonneg)
@seed_opt
@click.option("--costable", is_flag=True, help="Apply w -> t_A / w before bracketing.")
@json_opt
@out_opt
def zk(ranks, qorder, seed, costable, as_json, out):
    """K-theoretic series at a seeded rational point."""
    ranks = ranks if ranks is not None else parse_ranks("12=1")
    p = EvalPoint.random(ranks.slots(), seed)
    fn = zk_costable_coeffs if costable else zk_coeffs
    series = fn(ranks, qorder, p)
    payload = {
        "ranks": str(ranks),
        "mode": "costable" if costable else "Ktheory",
        "N": qorder,
        "seed": seed,
        "point": {"u": [str(x) for x in p.u], "y": {f"{a}.{b}": str(v) for (a, b), v in p.y.items()}},
        "coefficients": series.to_json(),
    }
    _emit(payload, as_json, out, " ".join(series.to_json()))


@main.command()
@ranks_opt
@click.option("--qorder", default=4, show_default=True, type=int, callback=_nonneg)
@seed_opt
@click.option("--mode", type=click.Choice(["cohomological", "cy3", "diagonal"]), default="cohomological", show_default=True)
@json_opt
@out_opt
def z(ranks, qorder, seed, mode, as_json, out):
    """Cohomological series; cy3 and diagonal take the limit onto the special locus."""
    ranks = ranks if ranks is not None else parse_ranks("12=1,13=1")
    try:
        if mode == "cy3":
            series = z_cy3_coeffs(ranks, qorder, seed)
        elif mode == "diagonal":
            if ranks != parse_ranks("12=1,13=1"):
                raise click.UsageError("diagonal mode is defined for --ranks 12=1,13=1 (v_{12,1} = v_{13,1})")
            series = z_diagonal_coeffs(qorder, seed)
        else:
            series = z_coeffs(ranks, qorder, CohPoint.random(ranks.slots(), seed))
    except (ValueError, ArithmeticError) as err:
        raise click.ClickException(str(err)) from err
    payload = {"ranks": str(ranks), "mode": mode, "N": qorder, "seed": seed, "coefficients": series.to_json()}
    _emit(payload, as_json, out, " ".join(series.to_json()))


@main.command("dump-char")
@click.option("--kind", required=True, help="v, tangent, lambda, cnorm, g4d, g3d, tangent3d, sheaf, T, K, N, P1, P34, t12, ...")
@ranks_opt
@click.option("--tuple", "tuple_", default="{}", show_default=True, help="Partition tuple such as {12.1:(2), 34.1:(1,1)}.")
@click.option("--label", default=None, help="Label for T, K, N.")
@json_opt
@out_opt
def dump_char_cmd(kind, ranks, tuple_, label, as_json, out):
    """Print a named character in canonical text form."""
    ranks = ranks if ranks is not None else parse_ranks("")
    try:
        tup = PartitionTuple.parse(ranks, tuple_)
        chi = dump_char(kind, tup, label)
    except (KeyError, ValueError) as err:
        raise click.ClickException(str(err)) from err
    _emit({"kind": kind, "ranks": str(ranks), "tuple": str(tup), "character": str(chi)}, as_json, out, str(chi))


@main.command()
@click.argument("suite", type=click.Choice(list(SUITES) + ["all"]))
@ranks_opt
@click.option("--nmax", "--max-n", type=int, default=None, callback=_nonneg)
@click.option("--qorder", type=int, default=None, callback=_nonneg)
@seed_opt
@click.option("--trials", default=3, show_default=True, type=int, callback=_nonneg)
@click.option("--x-mode", type=click.Choice(["first", "sum"]), default="first", show_default=True,
              help="ds-poly: x on v_{12,1} only, or added to every v_{12,alpha}.")
@json_opt
@out_opt
def verify(suite, ranks, nmax, qorder, seed, trials, x_mode, as_json, out):
    """Run a verification suite (or all of them, in order)."""
    cfg = Config(ranks=ranks, nmax=nmax, qorder=qorder, seed=seed, trials=trials, x_mode=x_mode)
    names = list(SUITES) if suite == "all" else [suite]
    reports = [run_suite(name, cfg) for name in names]
    if as_json:
        payload = reports[0].to_json() if len(reports) == 1 else {"schema": 1, "reports": [r.to_json() for r in reports]}
        _emit(payload, True, out, "")
    else:
        lines = []
        for rep in reports:
            failed = [c for c in rep.checks if not c.ok]
            status = "PASS" if rep.ok else "FAIL"
            lines.append(f"{status} {rep.suite}: {len(rep.checks) - len(failed)}/{len(rep.checks)} checks, {rep.elapsed_ms} ms")
            if rep.error:
                lines.append(f"  error: {rep.error}")
            for c in failed[:10]:
                lines.append(f"  failed: {c.name}  lhs={c.to_json()['lhs']}  rhs={c.to_json()['rhs']}")
        _emit(None, False, out, "\n".join(lines))
    sys.exit(exit_code(reports))


if __name__ == "__main__":
    main()
