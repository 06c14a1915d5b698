#!/usr/bin/env python3
"""
zslab command-line interface.

Every command prints one payload on stdout ({"command", "run_id", "config",
"result"}); diagnostics and logs go to stderr.

Exit codes: 0 success, 1 usage or domain error, 2 cap exceeded, 3 a
verification check failed.
"""

import inspect
import sys
from functools import wraps
from typing import Any, Dict, List, Optional, Type

import click
from pydantic import BaseModel

from zslab import SERVICE_NAME, SERVICE_VERSION
from zslab.cli.output import render
from zslab.cli.schemas import (
    CheckReportPayload,
    CommandPayload,
    DensePayload,
    FormulaPayload,
    SolveResultPayload,
    SuitePayload,
    WidenessPayload,
)
from zslab.config import Config, get_log_level
from zslab.constants import (
    EXIT_CAP,
    EXIT_CHECK_FAILED,
    EXIT_OK,
    EXIT_USAGE,
    OUTPUT_FORMATS,
)
from zslab.exceptions import CapExceededError, ZeroSumError
from zslab.groups.group import parse_group
from zslab.invariants.formulas import (
    K1_star,
    K1_star_weighted,
    K_star,
    davenport_lower,
    k_star,
    k_star_weighted,
)
from zslab.invariants.solvers import DenseKind
from zslab.invariants.wideness import (
    WideVariant,
    is_2wide,
    is_2wide_integer,
    is_wide,
    is_wide_integer,
)
from zslab.observability.context import get_run_id, run_scope
from zslab.observability.logger import configure_logging, get_logger
from zslab.sequences.sequence import order_histogram, to_literal
from zslab.sequences.weights import parse_weight
from zslab.services.solver_service import INVARIANTS, WEIGHTED_INVARIANTS, get_solver_service
from zslab.verify.checks import CHECKS
from zslab.verify.suite import run_suite

logger = get_logger(__name__)

WEIGHTS = ("cross", "length", "dyadic")
FORMULAS = ("kstar", "Kstar", "K1star")


class ZslabGroup(click.Group):
    """Click group mapping usage errors to exit code 1"""

    def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra):
        try:
            rv = super().main(args, prog_name, complete_var, standalone_mode=False, **extra)
        except click.exceptions.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(EXIT_USAGE)
        except click.ClickException as e:
            e.show()
            sys.exit(EXIT_USAGE)
        sys.exit(rv if isinstance(rv, int) else EXIT_OK)


def handle_errors(fn):
    """Map domain exceptions to exit codes with a one-line diagnostic"""
    @wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except CapExceededError as e:
            logger.warning("command_failed", error=type(e).__name__, cap=e.cap_name)
            click.echo(f"Error: {e}", err=True)
            return EXIT_CAP
        except ZeroSumError as e:
            logger.warning("command_failed", error=type(e).__name__)
            click.echo(f"Error: {e}", err=True)
            return EXIT_USAGE
    return wrapper


def _config(ctx: click.Context) -> Config:
    config = Config.from_env(**ctx.obj["overrides"])
    get_solver_service().configure(config)
    return config


def _emit(command: str, config: Config, schema: Type[BaseModel], result: Dict[str, Any]) -> None:
    schema.model_validate(result)
    payload = CommandPayload(
        command=command,
        run_id=get_run_id(),
        config=config.model_dump(),
        result=result,
    ).model_dump()
    click.echo(render(payload, config.output))


@click.group(cls=ZslabGroup)
@click.version_option(version=SERVICE_VERSION, prog_name=SERVICE_NAME)
@click.option("--group-cap", type=int, default=None, help="Largest group order the solvers accept")
@click.option("--oracle-len-cap", type=int, default=None, help="Longest sequence the factorization counter accepts")
@click.option("--threads", type=int, default=None, help="Worker threads for the search (0 = all cores)")
@click.option("--output", type=click.Choice(OUTPUT_FORMATS), default=None, help="Payload format")
@click.option("--seed", type=int, default=None, help="Seed for sampled checks")
@click.option("--log-level", default=None, help="Log level for stderr diagnostics")
@click.pass_context
def cli(ctx, group_cap, oracle_len_cap, threads, output, seed, log_level):
    """
    zslab - exact zero-sum invariants of finite abelian groups.

    Groups are given as comma-separated cyclic orders, e.g. 4,3 or 2,2,2.
    """
    configure_logging(get_log_level(log_level))
    ctx.ensure_object(dict)
    ctx.obj["run_id"] = ctx.with_resource(run_scope())
    ctx.obj["overrides"] = {
        "group_cap": group_cap,
        "oracle_len_cap": oracle_len_cap,
        "threads": threads,
        "output": output,
        "seed": seed,
    }


# ==================== INVARIANTS ====================

@cli.command()
@click.option("--group", "group_text", required=True, help="Cyclic orders, e.g. 4,3")
@click.option("--which", type=click.Choice(INVARIANTS), required=True)
@click.option("--weight", type=click.Choice(WEIGHTS), default="cross", show_default=True)
@click.pass_context
@handle_errors
def invariant(ctx, group_text, which, weight):
    """Solve k, K, K1, D or N1 exactly, with a witness"""
    if weight != "cross" and which not in WEIGHTED_INVARIANTS:
        raise click.BadParameter(f"{which} has no weighted form", param_hint="--weight")
    config = _config(ctx)
    group = parse_group(group_text)
    result = get_solver_service().solve(which, group, parse_weight(weight))

    payload = result.to_dict()
    if which == "D":
        payload["davenport_lower"] = davenport_lower(group)
    _emit("invariant", config, SolveResultPayload, payload)
    return EXIT_OK


@cli.command()
@click.option("--group", "group_text", required=True, help="Cyclic orders, e.g. 4,3")
@click.option("--which", type=click.Choice(FORMULAS), required=True)
@click.option("--weight", type=click.Choice(WEIGHTS), default="cross", show_default=True)
@click.pass_context
@handle_errors
def formula(ctx, group_text, which, weight):
    """Evaluate the closed forms k*, K* and K1*"""
    config = _config(ctx)
    group = parse_group(group_text)
    w = parse_weight(weight)

    if which == "Kstar":
        if weight != "cross":
            raise click.BadParameter("Kstar has no weighted form", param_hint="--weight")
        value = K_star(group)
    elif which == "kstar":
        value = k_star(group) if weight == "cross" else k_star_weighted(group, w)
    else:
        value = K1_star(group) if weight == "cross" else K1_star_weighted(group, w)

    _emit("formula", config, FormulaPayload, {
        "formula": which,
        "group": list(group.components),
        "weight": w.to_dict(),
        "value": {"num": value.numerator, "den": value.denominator},
    })
    return EXIT_OK


@cli.command()
@click.option("--p", type=int, default=None, help="Prime; omit to test n itself")
@click.option("--n", type=int, required=True)
@click.option("--two", is_flag=True, help="Test the 2-wide variant")
@click.pass_context
@handle_errors
def wide(ctx, p, n, two):
    """Wideness predicates p ≺ n, p ≺₂ n and wide integers"""
    config = _config(ctx)
    if p is not None:
        report = is_2wide(p, n) if two else is_wide(p, n)
        result = report.to_dict()
    else:
        holds = is_2wide_integer(n) if two else is_wide_integer(n)
        variant = WideVariant.TWO_WIDE if two else WideVariant.WIDE
        result = {"p": None, "n": n, "variant": variant.value, "lhs": None, "rhs": None, "holds": holds}
    _emit("wide", config, WidenessPayload, result)
    return EXIT_OK


@cli.command()
@click.option("--group", "group_text", required=True, help="Cyclic orders, e.g. 4,3")
@click.option("--kind", type=click.Choice([k.value for k in DenseKind]), default="zsf", show_default=True)
@click.option("--all", "show_all", is_flag=True, help="List every dense sequence")
@click.pass_context
@handle_errors
def dense(ctx, group_text, kind, show_all):
    """Dense witness: maximal cross number, then shortest, then canonical"""
    config = _config(ctx)
    group = parse_group(group_text)
    result = get_solver_service().dense(group, DenseKind(kind))

    payload: Dict[str, Any] = {
        "kind": kind,
        "group": list(group.components),
        "value": {"num": result.value.numerator, "den": result.value.denominator},
        "witness": to_literal(result.witness),
        "order_histogram": {str(k): v for k, v in order_histogram(result.witness).items()},
        "dense_count": len(result.optima),
    }
    if show_all:
        payload["optima"] = [to_literal(S) for S in result.optima]
    _emit("dense", config, DensePayload, payload)
    return EXIT_OK


# ==================== VERIFICATION ====================

def _parse_ints(text: str, name: str) -> List[int]:
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {text!r}", param_hint=f"--{name}")


def _check_kwargs(check_id: str, options: Dict[str, Any], config: Config) -> Dict[str, Any]:
    """Bind CLI options to the parameters of the check, converting groups"""
    kwargs: Dict[str, Any] = {}
    for name, param in inspect.signature(CHECKS[check_id]).parameters.items():
        value = options.get(name)
        if name == "seed" and value is None:
            value = config.seed
        if value is None:
            if param.default is inspect.Parameter.empty:
                flag = "--" + name.replace("_", "-")
                raise click.UsageError(f"{flag} is required for check {check_id}")
            continue
        if name == "group":
            value = parse_group(value)
        elif name == "alphas":
            value = _parse_ints(value, name)
        kwargs[name] = value
    return kwargs


@cli.command()
@click.option("--check", "check_id", type=click.Choice(sorted(CHECKS)), required=True)
@click.option("--group", default=None, help="Cyclic orders, e.g. 3")
@click.option("--ell", type=int, default=None)
@click.option("--p", type=int, default=None)
@click.option("--alpha", type=int, default=None)
@click.option("--alphas", default=None, help="Comma-separated exponents, largest first")
@click.option("--n", type=int, default=None)
@click.option("--k", type=int, default=None)
@click.option("--q", type=int, default=None)
@click.option("--beta", type=int, default=None)
@click.option("--len-cap", type=int, default=None)
@click.option("--samples", type=int, default=None)
@click.option("--kind", type=click.Choice(["zsf", "ufis", "both"]), default=None)
@click.option("--max-order", type=int, default=None)
@click.option("--max-len", type=int, default=None)
@click.pass_context
@handle_errors
def verify(ctx, check_id, **options):
    """Run one verification check"""
    config = _config(ctx)
    kwargs = _check_kwargs(check_id, options, config)
    report = CHECKS[check_id](**kwargs)
    _emit("verify", config, CheckReportPayload, report.to_dict())
    return EXIT_CHECK_FAILED if report.failed else EXIT_OK


@cli.command()
@click.option("--slow", is_flag=True, help="Include the heavier instances")
@click.pass_context
@handle_errors
def suite(ctx, slow):
    """Run the verification battery"""
    config = _config(ctx)
    report = run_suite(config, slow=slow)
    _emit("suite", config, SuitePayload, report.to_dict())
    return EXIT_CHECK_FAILED if report.failed else EXIT_OK


def main(argv: Optional[List[str]] = None) -> None:
    cli.main(args=argv, prog_name=SERVICE_NAME)


if __name__ == "__main__":
    main()
