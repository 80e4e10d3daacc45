"""Common CLI utilities and helpers."""

import functools
import json
import sys
from enum import IntEnum
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

import click
from pydantic import ValidationError
from rich.console import Console
from rich.table import Table

from shared.config import OutputFormat, RunConfig, load_run_config
from shared.errors import CrossCheckError, TautologicalError
from shared.logger import setup_logger

# Results only; messages go to stderr.
console = Console()
err_console = Console(stderr=True)


class ExitCode(IntEnum):
    """Process exit codes of every command."""

    OK = 0
    USAGE = 1
    VALIDATION = 2
    CROSS_CHECK = 3


def success(message: str) -> None:
    """Print success message."""
    err_console.print(f"✅ {message}", style="bold green")


def error(message: str) -> None:
    """Print error message."""
    err_console.print(f"❌ {message}", style="bold red")


def warning(message: str) -> None:
    """Print warning message."""
    err_console.print(f"⚠️  {message}", style="bold yellow")


def info(message: str) -> None:
    """Print info message."""
    err_console.print(f"ℹ️  {message}", style="bold blue")


def create_table(title: Optional[str] = None) -> Table:
    """
    Create a rich table with consistent styling.

    Args:
        title: Optional table title

    Returns:
        Configured Table instance
    """
    return Table(title=title, show_header=True, header_style="bold cyan")


def print_table(table: Table) -> None:
    """Print a table to console."""
    console.print(table)


def emit_record(
    fields: Dict[str, str], output_format: OutputFormat, title: Optional[str] = None
) -> None:
    """
    Print a single result record.

    Args:
        fields: Ordered field name -> rendered value
        output_format: table, json or tsv
        title: Table title (table format only)
    """
    if output_format == OutputFormat.JSON:
        click.echo(json.dumps(fields, indent=2))
    elif output_format == OutputFormat.TSV:
        click.echo("\t".join(fields.keys()))
        click.echo("\t".join(fields.values()))
    else:
        table = create_table(title=title)
        table.add_column("Field", style="bold yellow")
        table.add_column("Value", style="cyan", justify="right")
        for name, value in fields.items():
            table.add_row(name, value)
        print_table(table)


def emit_rows(
    rows: Sequence[Dict[str, str]],
    columns: List[str],
    output_format: OutputFormat,
    title: Optional[str] = None,
) -> None:
    """
    Print several result records sharing the same columns.

    Args:
        rows: Records to print
        columns: Column order
        output_format: table, json or tsv
        title: Table title (table format only)
    """
    if output_format == OutputFormat.JSON:
        click.echo(json.dumps([{c: row[c] for c in columns} for row in rows], indent=2))
    elif output_format == OutputFormat.TSV:
        click.echo("\t".join(columns))
        for row in rows:
            click.echo("\t".join(row[c] for c in columns))
    else:
        table = create_table(title=title)
        for column in columns:
            table.add_column(column)
        for row in rows:
            table.add_row(*(row[c] for c in columns))
        print_table(table)


def handle_errors(func: Callable[..., Any]) -> Callable[..., Any]:
    """
    Decorator mapping domain errors to exit codes.

    Input and precondition failures exit with ExitCode.VALIDATION, oracle
    disagreements with ExitCode.CROSS_CHECK.

    Usage:
        @click.command(cls=TautCommand)
        @handle_errors
        def my_command():
            ...
    """

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return func(*args, **kwargs)
        except KeyboardInterrupt:
            warning("Operation cancelled by user")
            raise click.Abort()
        except CrossCheckError as e:
            error(f"Cross-check failed: {e}")
            sys.exit(int(ExitCode.CROSS_CHECK))
        except (TautologicalError, ValidationError, ValueError, OSError) as e:
            error(str(e))
            if kwargs.get("verbose"):
                err_console.print_exception()
            sys.exit(int(ExitCode.VALIDATION))

    return wrapper


class _UsageExitMixin:
    """Run click in non-standalone mode so usage errors exit with ExitCode.USAGE."""

    def main(self, *args: Any, standalone_mode: bool = True, **extra: Any) -> Any:
        parent = super()
        if not standalone_mode:
            return parent.main(*args, standalone_mode=False, **extra)  # type: ignore[misc]
        try:
            rv = parent.main(*args, standalone_mode=False, **extra)  # type: ignore[misc]
        except click.UsageError as exc:
            exc.show()
            sys.exit(int(ExitCode.USAGE))
        except click.ClickException as exc:
            exc.show()
            sys.exit(exc.exit_code)
        except click.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(int(ExitCode.USAGE))
        sys.exit(rv if isinstance(rv, int) else int(ExitCode.OK))


class TautCommand(_UsageExitMixin, click.Command):
    """click.Command with the project's exit-code convention."""


class TautGroup(_UsageExitMixin, click.Group):
    """click.Group with the project's exit-code convention."""


def run_options(func: Callable[..., Any]) -> Callable[..., Any]:
    """Attach the options every command shares (format, jobs, seed, config, verbose)."""
    options = [
        click.option(
            "--format",
            "output_format",
            type=click.Choice([f.value for f in OutputFormat], case_sensitive=False),
            default=None,
            help="Output format (default: table)",
        ),
        click.option("--jobs", "-j", type=int, default=None, help="Parallel worker processes"),
        click.option("--seed", type=int, default=None, help="Seed for randomized checks"),
        click.option(
            "--config",
            "config_file",
            type=click.Path(dir_okay=False, path_type=Path),
            default=None,
            help="JSON/YAML file with run options",
        ),
        click.option("--verbose", "-v", is_flag=True, help="Verbose output"),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def start_run(
    name: str, config_file: Optional[Path], verbose: bool, **flags: Any
) -> RunConfig:
    """
    Resolve the run configuration of a command and configure logging.

    Args:
        name: Logger name of the calling command
        config_file: Optional --config file
        verbose: Switch logging to DEBUG
        **flags: Shared command-line flags (None when not given)

    Returns:
        Validated RunConfig
    """
    config = load_run_config(config_file, **flags)
    if verbose:
        config = config.model_copy(update={"debug": True, "log_level": "DEBUG"})
    setup_logger(name, level=config.log_level)
    return config
