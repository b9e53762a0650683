"""Command-line front end.

Subcommands mirror the library pipelines: analyze (full report),
transpose (analyze the dual), homology and obstruct (focused sections),
family (parametric constructions), verify-tables (embedded regression
data), and oracle (brute-force expansion cross-check).

Every subcommand accepts --json; without it the same payload is printed
as indented key: value text.  Exit codes: 0 success, 1 table-row check
failure, 2 input or parameter error, 3 resource cap exceeded.
"""

from __future__ import annotations

import functools
import json
import sys

import click

from .alexander import DEGREE_CAP_DEFAULT
from .errors import DegreeCapError, LinkInvError
from .poly import parse_polynomial
from .report import (
    FAMILY_SELECTORS,
    family_payload,
    full_report,
    json_safe,
    oracle_report,
)
from .tables import DEFAULT_ORACLE_CAP, verify_table


def _scalar(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, dict)):
        return "[]" if isinstance(value, list) else "{}"
    return str(value)


def _render(value, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines: list[str] = []
    if isinstance(value, dict):
        for key, item in value.items():
            if isinstance(item, (dict, list)) and item:
                lines.append(f"{pad}{key}:")
                lines.extend(_render(item, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar(item)}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(_render(item, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(item)}")
    else:
        lines.append(f"{pad}{_scalar(value)}")
    return lines


def _emit(payload: dict, as_json: bool) -> None:
    if as_json:
        click.echo(json.dumps(json_safe(payload), indent=2))
    else:
        for line in _render(payload):
            click.echo(line)


def _guarded(fn):
    """Map library errors onto the documented exit codes."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except DegreeCapError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(3)
        except LinkInvError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(2)

    return wrapper


json_flag = click.option("--json", "as_json", is_flag=True, help="Emit JSON instead of text.")


@click.group()
@click.version_option(package_name="linkinv")
def main() -> None:
    """Exact invariants of weighted-homogeneous links."""


@main.command()
@click.argument("polynomial")
@click.option("--transpose", is_flag=True, help="Analyze the transposed polynomial.")
@json_flag
@_guarded
def analyze(polynomial: str, transpose: bool, as_json: bool) -> None:
    """Full report: weights, dual, homology, obstructions."""
    _emit(full_report(parse_polynomial(polynomial), transpose=transpose), as_json)


@main.command()
@click.argument("polynomial")
@json_flag
@_guarded
def transpose(polynomial: str, as_json: bool) -> None:
    """Shorthand for analyze --transpose."""
    _emit(full_report(parse_polynomial(polynomial), transpose=True), as_json)


@main.command()
@click.argument("polynomial")
@json_flag
@_guarded
def homology(polynomial: str, as_json: bool) -> None:
    """Homology section only."""
    report = full_report(parse_polynomial(polynomial))
    _emit({k: report[k] for k in ("polynomial", "weights", "homology")}, as_json)


@main.command()
@click.argument("polynomial")
@json_flag
@_guarded
def obstruct(polynomial: str, as_json: bool) -> None:
    """Obstruction section only."""
    report = full_report(parse_polynomial(polynomial))
    _emit({k: report[k] for k in ("polynomial", "weights", "obstructions")}, as_json)


def _parse_k_range(spec: str) -> list[int]:
    lo, sep, hi = spec.partition("..")
    try:
        values = list(range(int(lo), int(hi) + 1)) if sep else [int(lo)]
    except ValueError:
        raise click.BadParameter(f"bad k range {spec!r}; use N or A..B")
    if not values:
        raise click.BadParameter(f"empty k range {spec!r}")
    return values


@main.command()
@click.argument("selector", type=click.Choice(list(FAMILY_SELECTORS)))
@click.argument("params", nargs=-1, type=int)
@click.option("--squares", default=0, show_default=True,
              help="Squares appended to the chain-cycle dual.")
@click.option("--k", "k_spec", default=None,
              help="k value or range A..B for the k-indexed families.")
@json_flag
@_guarded
def family(selector: str, params: tuple[int, ...], squares: int,
           k_spec: str | None, as_json: bool) -> None:
    """Build a parametric family member and print its asserted verdict.

    chain-cycle takes five exponents, lemma45 and lemma48 three;
    example43/44 take --k, example45 takes three primes plus optional
    --k as the common prime power.
    """
    k_values = _parse_k_range(k_spec) if k_spec else None
    _emit(family_payload(selector, params, squares=squares, k_values=k_values), as_json)


@main.command("verify-tables")
@click.option("--table", "which", type=click.Choice(["1", "2", "all"]),
              default="all", show_default=True)
@click.option("--rows", default=None, help="Row selection like 1,3,5-9 (1-based).")
@click.option("--oracle-cap", default=DEFAULT_ORACLE_CAP, show_default=True,
              help="Expand Delta(t) for rows with degree up to this bound.")
@json_flag
@_guarded
def verify_tables(which: str, rows: str | None, oracle_cap: int, as_json: bool) -> None:
    """Re-derive every embedded table row and compare with the print."""
    tables = [1, 2] if which == "all" else [int(which)]
    try:
        results = [verify_table(t, rows=rows, oracle_cap=oracle_cap) for t in tables]
    except ValueError as exc:
        raise click.BadParameter(str(exc))
    passed = all(r.passed for r in results)
    if as_json:
        _emit({"passed": passed, "tables": [r.as_dict() for r in results]}, True)
    else:
        for result in results:
            for report in result.reports:
                status = "pass" if report.passed else "FAIL"
                click.echo(f"table {result.table} row {report.row.index:>2}: {status}")
                if not report.passed:
                    for check in report.checks:
                        if not check.passed:
                            click.echo(f"    {check.name}: {check.detail}")
        click.echo("all rows pass" if passed else "some rows FAILED")
    if not passed:
        sys.exit(1)


@main.command()
@click.argument("polynomial")
@click.option("--oracle-cap", default=DEGREE_CAP_DEFAULT, show_default=True,
              help="Abort if the expansion degree would exceed this bound.")
@json_flag
@_guarded
def oracle(polynomial: str, oracle_cap: int, as_json: bool) -> None:
    """Expand Delta(t) and cross-check the closed-form evaluations."""
    _emit(oracle_report(parse_polynomial(polynomial), max_degree=oracle_cap), as_json)


if __name__ == "__main__":
    main()
