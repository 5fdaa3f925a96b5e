import json
from collections.abc import Iterator
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any

import click
import pandas as pd

from commands import (
    LAWS,
    GenConfig,
    check_homomorphic_relation,
    check_inverse_pair,
    get_law,
    inverse_report_to_json,
    invert,
    is_pseudo_unit,
    iter_law,
    law_report_to_json,
    summarize,
    verdict_to_json,
)
from semiring import det, det_fast, det_naive, det_result_to_json, eval_poly, format_scalar, load_matrix, load_poly
from semiring.errors import (
    ArityMismatchError,
    EmptyBoxError,
    IndexOutOfRangeError,
    NotSquareError,
    ParseError,
    PreconditionFailedError,
    ShapeMismatchError,
    SingularMatrixError,
    SingularNegInfError,
    SizeLimitError,
    TooSmallError,
    TropicalError,
    UnknownLawError,
    UnsupportedArityError,
)
from semiring.io import load_series
from semiring.matrix import DEFAULT_NAIVE_MAX_N
from semiring.poly import corner_locus_grid, in_zero_set
from semiring.scalar import is_real, parse_scalar
from semiring.valuation import val

EXIT_LAW_FAILED = 1
EXIT_PARSE = 2
EXIT_SHAPE = 3
EXIT_DISAGREEMENT = 4
EXIT_SINGULAR = 5

SHAPE_ERRORS = (
    ShapeMismatchError,
    NotSquareError,
    TooSmallError,
    IndexOutOfRangeError,
    SizeLimitError,
    ArityMismatchError,
    UnsupportedArityError,
    EmptyBoxError,
    PreconditionFailedError,
)

FILE_ARGUMENT = click.Path(exists=True, dir_okay=False, path_type=Path)


@dataclass(frozen=True, slots=True)
class Settings:
    """Options of the `extrop` group shared with every subcommand."""

    verbose: bool
    naive_max_n: int


def log(ctx: click.Context, message: str) -> None:
    """Write a progress message to standard error when `--verbose` is set."""
    if ctx.obj.verbose:
        click.echo(message, err=True)


def emit(data: Any) -> None:
    """Write one JSON document on standard output."""
    click.echo(json.dumps(data))


def fail(ctx: click.Context, message: str, code: int) -> None:
    """Report an error on standard error and exit with `code`."""
    click.echo(f"Error: {message}", err=True)
    ctx.exit(code)


@contextmanager
def exit_codes(ctx: click.Context) -> Iterator[None]:
    """Translate domain errors into the exit codes of the command line."""
    try:
        yield
    except (ParseError, UnknownLawError) as e:
        fail(ctx, str(e), EXIT_PARSE)
    except SHAPE_ERRORS as e:
        fail(ctx, str(e), EXIT_SHAPE)
    except (SingularMatrixError, SingularNegInfError) as e:
        fail(ctx, str(e), EXIT_SINGULAR)
    except TropicalError as e:
        fail(ctx, str(e), EXIT_PARSE)


def parse_range(_ctx: click.Context, _param: click.Parameter, value: str | None) -> tuple[Fraction, Fraction] | None:
    """Parse `low,high` into a pair of rationals."""
    if value is None:
        return None
    try:
        low, high = (Fraction(part.strip()) for part in value.split(","))
    except (ValueError, ZeroDivisionError) as e:
        raise click.BadParameter(f"expected 'low,high', got {value!r}") from e
    return low, high


def parse_ranges(
    ctx: click.Context, param: click.Parameter, values: tuple[str, ...]
) -> tuple[tuple[Fraction, Fraction], ...]:
    """Parse every `low,high` value of a repeated option."""
    return tuple(parse_range(ctx, param, value) for value in values)


@click.group()
@click.option(
    "--verbose",
    "-v",
    is_flag=True,
    default=False,
    help="If set, write progress messages to standard error.",
)
@click.option(
    "--naive-max-n",
    type=click.IntRange(min=1),
    default=DEFAULT_NAIVE_MAX_N,
    envvar="EXTROP_NAIVE_MAX_N",
    show_default=True,
    help="Largest matrix size accepted by the brute-force determinant.",
)
@click.pass_context
def extrop(ctx: click.Context, verbose: bool, naive_max_n: int) -> None:
    """Exact computations and theorem checks in the extended tropical semiring."""
    ctx.obj = Settings(verbose=verbose, naive_max_n=naive_max_n)


@extrop.command("det")
@click.argument("matrix_file", type=FILE_ARGUMENT)
@click.option(
    "--method",
    "-m",
    type=click.Choice(["auto", "naive", "fast", "both"], case_sensitive=False),
    default="auto",
    show_default=True,
    help="Determinant algorithm; 'both' runs brute force and assignment and requires them to agree.",
)
@click.pass_context
def det_command(ctx: click.Context, matrix_file: Path, method: str) -> None:
    """Compute the tropical determinant of a matrix.

    MATRIX_FILE: JSON matrix file, e.g. {"rows": [["1", "1"], ["2", "3"]]}.
    """
    with exit_codes(ctx):
        matrix = load_matrix(matrix_file)
        log(ctx, f"Loaded a {matrix.rows}x{matrix.cols} matrix from {matrix_file}")
        if method == "both":
            result = det_naive(matrix, max_n=ctx.obj.naive_max_n)
            fast = det_fast(matrix)
            if fast != result:
                fail(ctx, f"Determinant methods disagree: naive {result}, fast {fast}.", EXIT_DISAGREEMENT)
        else:
            result = det(matrix, method, max_n=ctx.obj.naive_max_n)
        emit(det_result_to_json(result))


@extrop.command("inv")
@click.argument("matrix_file", type=FILE_ARGUMENT)
@click.option(
    "--strict",
    "-s",
    is_flag=True,
    default=False,
    help="If set, refuse tropically singular matrices instead of reporting the failed pseudo units.",
)
@click.pass_context
def inv_command(ctx: click.Context, matrix_file: Path, strict: bool) -> None:
    """Compute the pseudo inverse Adj(A)/|A| and both pseudo-unit products.

    MATRIX_FILE: JSON matrix file.
    """
    with exit_codes(ctx):
        matrix = load_matrix(matrix_file)
        report = invert(matrix, strict=strict)
        log(ctx, f"right unit ok: {report.right_ok}, left unit ok: {report.left_ok}")
        emit(inverse_report_to_json(report))


@extrop.command("check-pair")
@click.argument("a_file", type=FILE_ARGUMENT)
@click.argument("b_file", type=FILE_ARGUMENT)
@click.pass_context
def check_pair_command(ctx: click.Context, a_file: Path, b_file: Path) -> None:
    """Decide whether B is a pseudo inverse of A, i.e. AB and BA are pseudo units.

    A_FILE, B_FILE: JSON matrix files of the same square shape.
    """
    with exit_codes(ctx):
        emit({"pseudo_inverse": check_inverse_pair(load_matrix(a_file), load_matrix(b_file))})


@extrop.command("pseudo-unit")
@click.argument("matrix_file", type=FILE_ARGUMENT)
@click.pass_context
def pseudo_unit_command(ctx: click.Context, matrix_file: Path) -> None:
    """Decide whether a matrix is a pseudo unit and whether it is idempotent.

    MATRIX_FILE: JSON matrix file.
    """
    with exit_codes(ctx):
        emit(verdict_to_json(is_pseudo_unit(load_matrix(matrix_file))))


@extrop.command("regular")
@click.argument("matrix_file", type=FILE_ARGUMENT)
@click.pass_context
def regular_command(ctx: click.Context, matrix_file: Path) -> None:
    """Decide whether a matrix is tropically regular.

    MATRIX_FILE: JSON matrix file.
    """
    with exit_codes(ctx):
        result = det(load_matrix(matrix_file), max_n=ctx.obj.naive_max_n)
        emit({"regular": is_real(result.value), "det": det_result_to_json(result)})


@extrop.command("laws")
@click.option(
    "--law",
    "-l",
    "law_ids",
    type=str,
    multiple=True,
    default=("all",),
    show_default=True,
    help="Law identifier to check, or 'all'. Can be repeated.",
)
@click.option("--seed", type=click.IntRange(min=0), default=0, show_default=True, help="Base seed of the run.")
@click.option(
    "--count",
    "-n",
    type=click.IntRange(min=0),
    default=GenConfig().count,
    show_default=True,
    help="Random instances per law, on top of the pinned ones.",
)
@click.option(
    "--dims",
    callback=parse_range,
    default="2,5",
    show_default=True,
    help="Inclusive range of matrix sizes, as 'low,high'.",
)
@click.option(
    "--duplicate-rows",
    is_flag=True,
    default=False,
    help="If set, generic random matrices get two identical rows or columns.",
)
@click.option(
    "--workers",
    "-w",
    type=click.IntRange(min=1),
    default=1,
    show_default=True,
    help="Number of processes checking instances.",
)
@click.option(
    "--list",
    "list_only",
    is_flag=True,
    default=False,
    help="If set, list the registered laws and exit.",
)
@click.pass_context
def laws_command(
    ctx: click.Context,
    law_ids: tuple[str, ...],
    seed: int,
    count: int,
    dims: tuple[Fraction, Fraction],
    duplicate_rows: bool,
    workers: int,
    list_only: bool,
) -> None:
    """Check theorems of the extended tropical semiring on pinned and random instances.

    Writes one JSON report per instance, then a summary line. Exits with status 1 if any instance fails.
    """
    if list_only:
        for law in LAWS.values():
            emit({"law_id": law.law_id, "statement": law.statement})
        return
    with exit_codes(ctx):
        selected = list(LAWS) if "all" in law_ids else [get_law(law_id).law_id for law_id in law_ids]
        if any(d.denominator != 1 for d in dims):
            raise click.BadParameter("sizes must be integers", param_hint="--dims")
        try:
            config = GenConfig(
                seed=seed, count=count, dims=(int(dims[0]), int(dims[1])), duplicate_row_mode=duplicate_rows
            )
        except ValueError as e:
            raise click.BadParameter(str(e), param_hint="--dims") from e
        reports = []
        for law_id in selected:
            log(ctx, f"Checking {law_id} on {count} random instances...")
            for report in iter_law(law_id, config, workers=workers):
                emit(law_report_to_json(report))
                reports.append(report)
    table = summarize(reports)
    summary = {law_id: {"pass": int(row["pass"]), "fail": int(row["fail"])} for law_id, row in table.iterrows()}
    passed = int(table["fail"].sum()) == 0
    emit({"summary": summary, "passed": passed})
    if not passed:
        fail(ctx, f"{int(table['fail'].sum())} instance(s) failed.", EXIT_LAW_FAILED)


@extrop.command("poly-eval")
@click.argument("poly_file", type=FILE_ARGUMENT)
@click.option(
    "--point",
    "-p",
    "coordinates",
    type=str,
    multiple=True,
    required=True,
    help="Coordinate as a scalar literal, e.g. '2', '-1/2', '3v' or '-inf'. Repeat once per variable.",
)
@click.pass_context
def poly_eval_command(ctx: click.Context, poly_file: Path, coordinates: tuple[str, ...]) -> None:
    """Evaluate a tropical polynomial at a point and test zero-set membership.

    POLY_FILE: JSON polynomial file, e.g. {"vars": 1, "monomials": [{"exp": [1], "coef": "0"}]}.
    """
    with exit_codes(ctx):
        poly = load_poly(poly_file)
        point = [parse_scalar(c) for c in coordinates]
        emit({"value": format_scalar(eval_poly(poly, point)), "in_zero_set": in_zero_set(poly, point)})


@extrop.command("locus")
@click.argument("poly_file", type=FILE_ARGUMENT)
@click.option(
    "--box",
    "-b",
    type=str,
    multiple=True,
    required=True,
    callback=parse_ranges,
    help="Closed range 'low,high' of one axis. Repeat once per variable.",
)
@click.option("--step", "-s", type=str, default="1", show_default=True, help="Grid spacing, a positive rational.")
@click.option(
    "--format",
    "-f",
    "output_format",
    type=click.Choice(["csv", "json"], case_sensitive=False),
    default="csv",
    show_default=True,
    help="Output format of the grid classification.",
)
@click.pass_context
def locus_command(
    ctx: click.Context, poly_file: Path, box: tuple[tuple[Fraction, Fraction], ...], step: str, output_format: str
) -> None:
    """Sample the corner locus of a polynomial in one or two variables on a regular grid.

    POLY_FILE: JSON polynomial file.
    """
    with exit_codes(ctx):
        poly = load_poly(poly_file)
        try:
            spacing = Fraction(step)
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"Invalid grid step {step!r}.") from e
        if spacing <= 0:
            raise click.BadParameter("the grid step must be positive", param_hint="--step")
        points = corner_locus_grid(poly, box, spacing)
    axes = ["x", "y"][: poly.num_vars]
    frame = pd.DataFrame(
        [[str(c) for c in p.point] + [p.in_locus] for p in points],
        columns=[*axes, "in_locus"],
    )
    log(ctx, f"{int(frame['in_locus'].sum())} of {len(frame)} grid points lie in the corner locus")
    if output_format == "csv":
        click.echo(frame.to_csv(index=False), nl=False)
    else:
        click.echo(frame.to_json(orient="records"))


@extrop.command("val-demo")
@click.argument("f_file", type=FILE_ARGUMENT)
@click.argument("g_file", type=FILE_ARGUMENT)
@click.pass_context
def val_demo_command(ctx: click.Context, f_file: Path, g_file: Path) -> None:
    """Show the valuations of two Puiseux polynomials and check the homomorphic relation on them.

    F_FILE, G_FILE: JSON series files, e.g. {"terms": [{"exp": "-2", "coef": "1"}]}.
    """
    with exit_codes(ctx):
        f, g = load_series(f_file), load_series(g_file)
    report = check_homomorphic_relation(f, g)
    emit(
        {
            "val_f": format_scalar(val(f)),
            "val_g": format_scalar(val(g)),
            "val_product": format_scalar(val(f * g)),
            "val_sum": format_scalar(val(f + g)),
            "report": law_report_to_json(report),
        }
    )
    if not report.passed:
        fail(ctx, "The valuation relation does not hold on this pair.", EXIT_LAW_FAILED)
