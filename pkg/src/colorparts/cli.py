"""Command-line verifier and sweep harness.

Exit codes: 0 success (or every comparison verified), 1 mismatch, 2 usage or
parse errors.  The cache directory may also be set through the
COLORPARTS_CACHE_DIR environment variable.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Optional

import click

from .cache import CountCache, cached_count
from .congruence import ResidueSpecError, parse_residue_spec, residue_class_text
from .counting import dimension
from .lattice import WeightVector
from .verify import (
    STATUS_VERIFIED,
    VerificationReport,
    fit_weight,
    run_sweep,
    verify_weight,
)

CACHE_ENV_VAR = "COLORPARTS_CACHE_DIR"


def _parse_int_tuple(text: str, label: str) -> tuple[int, ...]:
    try:
        return tuple(int(part.strip()) for part in text.split(","))
    except ValueError:
        raise click.UsageError(f"{label} must be a comma-separated integer list")


def _weight_vector(
    odd: Optional[str], even: Optional[str], bracket: Optional[str]
) -> WeightVector:
    given = [x for x in (odd, even, bracket) if x is not None]
    if len(given) != 1:
        raise click.UsageError("pass exactly one of --odd, --even, --bracket")
    try:
        if odd is not None:
            return WeightVector.from_odd(_parse_int_tuple(odd, "--odd"))
        if even is not None:
            return WeightVector.from_even(_parse_int_tuple(even, "--even"))
        return WeightVector(_parse_int_tuple(bracket, "--bracket"))
    except ValueError as exc:
        raise click.UsageError(str(exc))


def _cache(cache_dir: Optional[str]) -> Optional[CountCache]:
    return CountCache(cache_dir) if cache_dir else None


weight_options = [
    click.option("--odd", default=None, help="Odd-width sugar k0,...,kl."),
    click.option("--even", default=None, help="Even-width sugar k0,...,kl."),
    click.option("--bracket", default=None, help="Raw bracket k1,...,kw."),
]


def add_options(options):
    def wrap(fn):
        for option in reversed(options):
            fn = option(fn)
        return fn

    return wrap


format_option = click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "json", "csv"]),
    default="text",
    show_default=True,
)
cache_option = click.option(
    "--cache-dir",
    envvar=CACHE_ENV_VAR,
    default=None,
    help=f"Count-table cache directory (or ${CACHE_ENV_VAR}).",
)
n_option = click.option("-N", "n_max", type=int, required=True, help="Top degree.")


@click.group()
@click.version_option(package_name="colorparts")
def main():
    """Count admissible colored partitions on staircase arrays and check
    them against periodic product formulas."""


def _echo_weight_header(wv: WeightVector) -> None:
    click.echo(f"highest_weight = {list(wv.bracket)}")
    click.echo(f"k = {wv.k_total}  w = {wv.width}")


def _csv_text(header: list[str], rows: list[list]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue().rstrip("\n")


@main.command()
@add_options(weight_options)
@n_option
@format_option
@cache_option
def count(odd, even, bracket, n_max, fmt, cache_dir):
    """Print P(n) for 1 <= n <= N."""
    wv = _weight_vector(odd, even, bracket)
    if n_max < 1:
        raise click.UsageError("-N must be >= 1")
    table = cached_count(wv, n_max, _cache(cache_dir))
    if fmt == "text":
        _echo_weight_header(wv)
        click.echo(str(table.pairs()))
    elif fmt == "json":
        click.echo(
            json.dumps(
                {
                    "bracket": list(wv.bracket),
                    "sugar": wv.sugar_label(),
                    "n_max": n_max,
                    "counts": list(table.counts),
                },
                sort_keys=True,
            )
        )
    else:
        click.echo(_csv_text(["n", "count"], table.pairs()))


def _report_text(report: VerificationReport) -> str:
    lines = [
        f"bracket = {list(report.bracket)}",
        f"sugar = {report.sugar or '(none)'}",
        f"product = modulus {report.product.modulus}, source {report.product_source}",
        f"status = {report.status}",
    ]
    if report.first_mismatch:
        n, count_value, coefficient = report.first_mismatch
        lines.append(
            f"first mismatch at n = {n}: count {count_value} != coefficient {coefficient}"
        )
    lines.append(f"runtime = {report.runtime_seconds:.3f}s")
    return "\n".join(lines)


def _emit_report(report: VerificationReport, fmt: str) -> None:
    if fmt == "text":
        click.echo(_report_text(report))
    elif fmt == "json":
        click.echo(json.dumps(report.to_dict(), sort_keys=True))
    else:
        rows = [
            [n, report.counts[n], report.coefficients[n - 1]]
            for n in range(1, report.n_max + 1)
        ]
        click.echo(_csv_text(["n", "count", "coefficient"], rows))


@main.command()
@add_options(weight_options)
@n_option
@click.option("--auto", is_flag=True, help="Use the conjectured product.")
@click.option("--spec", "spec_text", default=None, help="Residue-spec text.")
@format_option
@cache_option
@click.pass_context
def verify(ctx, odd, even, bracket, n_max, auto, spec_text, fmt, cache_dir):
    """Compare counts against a product; exit 0 iff verified."""
    wv = _weight_vector(odd, even, bracket)
    if n_max < 1:
        raise click.UsageError("-N must be >= 1")
    if auto == (spec_text is not None):
        raise click.UsageError("pass exactly one of --auto or --spec")
    product = None
    source = "conjecture"
    if spec_text is not None:
        try:
            product = parse_residue_spec(spec_text)
        except ResidueSpecError as exc:
            raise click.UsageError(str(exc))
        source = f"spec: {spec_text}"
    try:
        report = verify_weight(
            wv, n_max, product=product, product_source=source, cache=_cache(cache_dir)
        )
    except ValueError as exc:
        raise click.UsageError(str(exc))
    _emit_report(report, fmt)
    if report.status != STATUS_VERIFIED:
        ctx.exit(1)


@main.command()
@click.option("-w", "width", type=int, required=True, help="Array width.")
@click.option("-k", "k_total", type=int, required=True, help="Total level.")
@n_option
@click.option("--jobs", type=int, default=1, show_default=True)
@format_option
@cache_option
@click.pass_context
def sweep(ctx, width, k_total, n_max, jobs, fmt, cache_dir):
    """Verify every weight of a conjecture family; exit 0 iff all verify."""
    if n_max < 1 or jobs < 1:
        raise click.UsageError("-N and --jobs must be >= 1")
    try:
        reports = run_sweep(width, k_total, n_max, jobs=jobs, cache_dir=cache_dir)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    verified = sum(1 for r in reports if r.status == STATUS_VERIFIED)
    if fmt == "text":
        for report in reports:
            line = (
                f"{report.sugar or list(report.bracket)}  "
                f"mod {report.product.modulus}  {report.status}"
            )
            if report.first_mismatch:
                line += f"  (first mismatch at n = {report.first_mismatch[0]})"
            click.echo(line)
        click.echo(f"{verified}/{len(reports)} verified")
    elif fmt == "json":
        click.echo(json.dumps([r.to_dict() for r in reports], sort_keys=True))
    else:
        rows = [
            [
                report.sugar or ",".join(str(x) for x in report.bracket),
                report.product.modulus,
                report.status,
                report.first_mismatch[0] if report.first_mismatch else "",
            ]
            for report in reports
        ]
        click.echo(_csv_text(["weight", "modulus", "status", "first_mismatch_n"], rows))
    if verified != len(reports):
        ctx.exit(1)


@main.command()
@add_options(weight_options)
@n_option
@click.option("--max-modulus", type=int, default=64, show_default=True)
@format_option
@cache_option
def fit(odd, even, bracket, n_max, max_modulus, fmt, cache_dir):
    """Fit a product exponent sequence to the count table."""
    wv = _weight_vector(odd, even, bracket)
    if n_max < 1 or max_modulus < 1:
        raise click.UsageError("-N and --max-modulus must be >= 1")
    table, fitted = fit_weight(wv, n_max, max_modulus, cache=_cache(cache_dir))
    classes = None
    if fitted.detected_period is not None:
        multiplicities = fitted.class_multiplicities(fitted.detected_period)
        if all(m >= 0 for m in multiplicities):
            classes = residue_class_text(fitted.detected_period, multiplicities)
    if fmt == "text":
        _echo_weight_header(wv)
        click.echo(f"exponents (j = 1..{n_max}): {list(fitted.exponents)}")
        if fitted.detected_period is not None:
            click.echo(f"period = {fitted.detected_period}")
        elif fitted.candidate_period is not None:
            click.echo(
                f"period = none (period {fitted.candidate_period} consistent "
                f"but insufficient evidence: needs N >= {2 * fitted.candidate_period})"
            )
        else:
            click.echo(f"period = none (no period <= {max_modulus})")
        if classes is not None:
            click.echo(f"classes = {classes}")
    elif fmt == "json":
        click.echo(
            json.dumps(
                {
                    "bracket": list(wv.bracket),
                    "sugar": wv.sugar_label(),
                    "n_max": n_max,
                    "counts": list(table.counts),
                    "exponents": list(fitted.exponents),
                    "detected_period": fitted.detected_period,
                    "candidate_period": fitted.candidate_period,
                    "classes": classes,
                },
                sort_keys=True,
            )
        )
    else:
        rows = [[j, fitted.exponents[j - 1]] for j in range(1, n_max + 1)]
        click.echo(_csv_text(["j", "exponent"], rows))


@main.command()
@click.argument("weights")
@format_option
def dim(weights, fmt):
    """Dimension count for finite weights K1,...,KL."""
    values = _parse_int_tuple(weights, "weights")
    try:
        result = dimension(values)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    if fmt == "text":
        click.echo(f"dimension {list(values)} = {result}")
    elif fmt == "json":
        click.echo(
            json.dumps({"weights": list(values), "dimension": result}, sort_keys=True)
        )
    else:
        click.echo(_csv_text(["weights", "dimension"], [[",".join(map(str, values)), result]]))


if __name__ == "__main__":
    main()
