"""
Command-line entry point: exact tiling counts, correlation functions, their
asymptotics and the acceptance suites.
"""
import json
import sys
from fractions import Fraction
from typing import Any, Dict, List, Optional

import click
import numpy as np
import pandas as pd
from pydantic import ValidationError

from src.models.exceptions import HoleyTilingError
from src.models.service import Service
from src.models.validators import (
    CorrelationRequest,
    CorrelationResult,
    CountRequest,
    CountResult,
    Family,
    Interaction,
    Method,
    RegionSpec,
    VerifyRequest,
)
from src.models.verification import SUITES

FORMATS = ("json", "csv", "plain")
COUNT_COLUMNS = ["family", "n", "b", "k", "method", "value", "verdict"]
RESULT_FIELDS = [
    "which",
    "k",
    "xi",
    "exact_value",
    "factor_label",
    "float_value",
    "float_value_with_e",
    "asymptote",
    "ratio",
    "adjudicated",
]


def _int_list(ctx, param, value: Optional[str]) -> List[int]:
    if value is None or not value.strip():
        return []
    try:
        return [int(item) for item in value.split(",") if item.strip()]
    except ValueError as error:
        raise click.BadParameter(f"expected comma-separated integers, received {value!r}") from error


def _name_list(ctx, param, value: Optional[str]) -> List[str]:
    if value is None:
        return list(SUITES)
    names = [item.strip() for item in value.split(",") if item.strip()]
    unknown = sorted(set(names) - set(SUITES))
    if unknown:
        raise click.BadParameter(f"unknown suites {', '.join(unknown)}; choose from {', '.join(SUITES)}")
    return names


def _json(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True)


def _csv(frame: pd.DataFrame) -> str:
    return frame.to_csv(index=False, lineterminator="\n")


def _scalar(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, np.generic):
        return value.item()
    if hasattr(value, "value"):
        return value.value
    return value


def _fail(error: Exception):
    click.echo(f"{type(error).__name__}: {error}", err=True)
    sys.exit(1)


def _count_frame(result: CountResult) -> pd.DataFrame:
    region = result.region
    rows = [
        {
            "family": region.family.value,
            "n": region.n,
            "b": region.b,
            "k": region.k,
            "method": method.value,
            "value": str(value),
            "verdict": result.verdict or "",
        }
        for method, value in result.counts.items()
    ]
    return pd.DataFrame(rows, columns=COUNT_COLUMNS)


def _result_fields(result: CorrelationResult) -> Dict[str, Any]:
    return {field: _scalar(getattr(result, field)) for field in RESULT_FIELDS}


def _report_records(report: Optional[pd.DataFrame]) -> List[Dict[str, Any]]:
    if report is None:
        return []
    return [{key: _scalar(value) for key, value in row.items()} for row in report.to_dict(orient="records")]


@click.group()
@click.option("--verbose", is_flag=True, help="Log progress at INFO level.")
@click.pass_context
def cli(ctx, verbose: bool):
    """Exact lozenge tilings of hexagons with two triangular holes."""
    ctx.obj = {"verbose": verbose}


@cli.command()
@click.option("--family", type=click.Choice([family.value for family in Family]), required=True)
@click.option("--n", "n", type=int, required=True)
@click.option("--b", "b", type=int, required=True)
@click.option("--c", "c", type=int, default=None, help="Third side of a plain hexagon.")
@click.option("--k", "k", type=int, default=0)
@click.option("--method", type=click.Choice([method.value for method in Method]), default=Method.FORMULA.value)
@click.option("--format", "output_format", type=click.Choice(FORMATS), default="plain")
@click.pass_context
def count(ctx, family: str, n: int, b: int, c: Optional[int], k: int, method: str, output_format: str):
    """Count the tilings of a region."""
    try:
        region = RegionSpec(family=family, n=n, b=b, k=k, c=c)
        result = Service(verbose=ctx.obj["verbose"]).count(CountRequest(region=region, method=method))
    except (HoleyTilingError, ValidationError) as error:
        _fail(error)

    if output_format == "json":
        payload = {
            "region": {"family": family, "n": n, "b": b, "k": k, "c": c},
            "counts": {method.value: str(value) for method, value in result.counts.items()},
            "verdict": result.verdict,
        }
        click.echo(_json(payload))
    elif output_format == "csv":
        click.echo(_csv(_count_frame(result)), nl=False)
    elif result.verdict is None:
        click.echo(next(iter(result.counts.values())))
    else:
        for method, value in result.counts.items():
            click.echo(f"{method.value}: {value}")
        click.echo(result.verdict)

    if result.verdict == "MISMATCH":
        sys.exit(1)


@cli.command()
@click.option("--max-n", type=int, default=6, show_default=True)
@click.option("--max-m", type=int, default=3, show_default=True)
@click.option("--suites", default=None, callback=_name_list, help="Comma-separated suite names.")
@click.option("--format", "output_format", type=click.Choice(FORMATS), default="csv")
@click.pass_context
def verify(ctx, max_n: int, max_m: int, suites: List[str], output_format: str):
    """Run the acceptance suites and print a summary."""
    try:
        service = Service(verbose=ctx.obj["verbose"])
        summary = service.verify(VerifyRequest(max_n=max_n, max_m=max_m, suites=suites))
    except (HoleyTilingError, ValidationError) as error:
        _fail(error)

    if output_format == "json":
        click.echo(_json(_report_records(summary)))
    elif output_format == "csv":
        click.echo(_csv(summary), nl=False)
    else:
        click.echo(summary.to_string(index=False))

    if not Service.suites_passed(summary):
        sys.exit(1)


@cli.command()
@click.option("--which", type=click.Choice([which.value for which in Interaction]), required=True)
@click.option("--k", "k", type=int, required=True)
@click.option("--xi", default="1", show_default=True, help="Aspect ratio, e.g. 1 or 3/2.")
@click.option("--n-grid", default=None, callback=_int_list, help="Comma-separated sizes.")
@click.option("--format", "output_format", type=click.Choice(FORMATS), default="plain")
@click.pass_context
def correlate(ctx, which: str, k: int, xi: str, n_grid: List[int], output_format: str):
    """Limit correlation of the two holes, optionally with a convergence table."""
    try:
        request = CorrelationRequest(which=which, k=k, xi=xi, n_grid=n_grid)
        result, report = Service(verbose=ctx.obj["verbose"]).correlate(request)
    except (HoleyTilingError, ValidationError, ValueError) as error:
        _fail(error)

    fields = _result_fields(result)
    if output_format == "json":
        click.echo(_json({"result": fields, "report": _report_records(report)}))
        return
    if output_format == "csv":
        click.echo(_csv(pd.DataFrame([fields], columns=RESULT_FIELDS)), nl=False)
    else:
        for name in RESULT_FIELDS:
            click.echo(f"{name}: {fields[name]}")
    if report is not None:
        click.echo("")
        click.echo(_csv(report), nl=False)


@cli.command()
@click.option("--which", type=click.Choice([which.value for which in Interaction]), required=True)
@click.option("--xi", default="1", show_default=True)
@click.option("--k-list", default=None, callback=_int_list, help="Comma-separated hole distances.")
@click.option("--format", "output_format", type=click.Choice(("json", "csv")), default="csv")
@click.pass_context
def asymptote(ctx, which: str, xi: str, k_list: List[int], output_format: str):
    """Exact limit against the large-k asymptote for each k."""
    try:
        table = Service(verbose=ctx.obj["verbose"]).asymptote(Interaction(which), xi, k_list)
    except (HoleyTilingError, ValueError) as error:
        _fail(error)

    if output_format == "json":
        click.echo(_json(_report_records(table)))
    else:
        click.echo(_csv(table), nl=False)


if __name__ == "__main__":
    cli()
