"""CLI interface for the verification suites."""

import sys
from pathlib import Path
from typing import Optional

import click

from shared.cli import (
    ExitCode,
    TautCommand,
    emit_rows,
    error,
    handle_errors,
    run_options,
    start_run,
    success,
)
from shared.config import OutputFormat
from shared.logger import get_logger

from .suites import SuiteName, SuiteOptions, run_suite

logger = get_logger(__name__)

COLUMNS = ["suite", "check", "status", "detail"]


@click.command(cls=TautCommand)
@click.option(
    "--suite",
    type=click.Choice([s.value for s in SuiteName]),
    default=SuiteName.ALL.value,
    show_default=True,
    help="Suite to run",
)
@click.option(
    "--max-r", type=int, default=4, show_default=True, help="Largest r of randomized tensors"
)
@click.option("--samples", type=int, default=None, help="Override the per-check sample count")
@run_options
@handle_errors
def main(
    suite: str,
    max_r: int,
    samples: Optional[int],
    output_format: Optional[str],
    jobs: Optional[int],
    seed: Optional[int],
    config_file: Optional[Path],
    verbose: bool,
) -> None:
    """
    Verification - golden values, oracle agreement and closed-form identities.

    Exits 0 when every check passes and 3 otherwise.

    Examples:

        \b
        # Everything
        taut verify

        \b
        # Engine against brute force, reproducibly, on 4 workers
        taut verify --suite oracle-arithmetic --seed 7 --jobs 4

        \b
        # Machine-readable report
        taut verify --suite table1 --format tsv
    """
    if max_r < 1:
        raise click.BadParameter("must be at least 1", param_hint="--max-r")
    if samples is not None and samples < 1:
        raise click.BadParameter("must be at least 1", param_hint="--samples")
    config = start_run(
        __name__, config_file, verbose, output_format=output_format, jobs=jobs, seed=seed
    )
    options = SuiteOptions(max_r=max_r, seed=config.seed, jobs=config.jobs, samples=samples)
    logger.info(f"Running {suite} with {options}")

    results = run_suite(suite, options)
    emit_rows(
        [result.to_fields() for result in results],
        COLUMNS,
        config.output_format,
        title="Verification",
    )

    failed = [result for result in results if not result.passed]
    if config.output_format == OutputFormat.TABLE:
        if failed:
            error(f"{len(failed)} of {len(results)} checks failed")
        else:
            success(f"All {len(results)} checks passed")
    if failed:
        sys.exit(int(ExitCode.CROSS_CHECK))


if __name__ == "__main__":
    main()
