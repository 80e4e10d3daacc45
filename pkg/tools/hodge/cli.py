"""CLI interface for Hodge-index bounds."""

from pathlib import Path
from typing import Dict, List, Optional, Union

import click
from pydantic import BaseModel, ConfigDict, Field, StrictInt

from shared.cli import TautCommand, emit_record, handle_errors, run_options, start_run
from shared.config import parse_record_file
from shared.logger import get_logger
from tools.combinatorics.rational import format_fraction, parse_fraction
from tools.heights.formulas import PullbackSpec

from .bounds import BoundMatrix, HodgeBounds

logger = get_logger(__name__)


class MatrixFile(BaseModel):
    """Bound matrix record: r and the row-major entries as integers or fraction texts."""

    model_config = ConfigDict(extra="forbid")

    r: StrictInt = Field(ge=1)
    t: List[List[Union[StrictInt, str]]]

    def to_matrix(self) -> BoundMatrix:
        return BoundMatrix(self.r, tuple(tuple(row) for row in self.t))  # type: ignore[arg-type]


def load_matrix(matrix_file: Path) -> BoundMatrix:
    """Read and validate a bound matrix file."""
    return MatrixFile(**parse_record_file(matrix_file)).to_matrix()


@click.command(cls=TautCommand)
@click.argument(
    "matrix_file", required=False, type=click.Path(dir_okay=False, path_type=Path)
)
@click.option("--m", "m_text", required=True, help="Comma-separated nonzero integers m_1..m_r")
@click.option("--genus", "-g", required=True, help="Genus as an exact fraction")
@click.option("--alternating", is_flag=True, help="Use the signed r-cycle matrix (even r >= 4)")
@click.option("--grid", help="Search every symmetric matrix with entries from this list")
@run_options
@handle_errors
def main(
    matrix_file: Optional[Path],
    m_text: str,
    genus: str,
    alternating: bool,
    grid: Optional[str],
    output_format: Optional[str],
    jobs: Optional[int],
    seed: Optional[int],
    config_file: Optional[Path],
    verbose: bool,
) -> None:
    """
    Hodge Bound - lower bound omega^2 >= ratio * phi(X) from a coefficient matrix.

    Takes the matrix from MATRIX_FILE, from --alternating, or searches a
    --grid of entries and reports the best constraint-satisfying matrix.

    Examples:

        \b
        # The r = 2 matrix [[1, g], [g, 1]] at genus 3
        taut bound matrix.json --m 1,1 --genus 3

        \b
        # Alternating 4-cycle at genus 4
        taut bound --m 1,1,1,1 --genus 4 --alternating

        \b
        # Grid search
        taut bound --m 1,1 --genus 5 --grid=-1,-1/2,0,1/2,1,5 --jobs 4
    """
    sources = sum([matrix_file is not None, alternating, grid is not None])
    if sources != 1:
        raise click.UsageError("Give exactly one of MATRIX_FILE, --alternating or --grid")
    config = start_run(
        __name__, config_file, verbose, output_format=output_format, jobs=jobs, seed=seed
    )
    bounds = HodgeBounds(PullbackSpec.parse(m_text), parse_fraction(genus), jobs=config.jobs)

    fields: Dict[str, str] = {}
    if grid is not None:
        result = bounds.search(parse_fraction(part) for part in grid.split(","))
        if result is None:
            fields["ratio"] = "none"
            emit_record(fields, config.output_format, title="Bound")
            return
        logger.info(f"Best matrix {result.matrix.to_rows()}")
        fields["ratio"] = format_fraction(result.ratio)
        fields["matrix"] = ";".join(",".join(row) for row in result.matrix.to_rows())
        fields.update(result.value.to_fields())
        emit_record(fields, config.output_format, title="Bound")
        return

    matrix = bounds.alternating() if alternating else load_matrix(matrix_file)
    ratio, value = bounds.evaluate(matrix)
    fields["ratio"] = format_fraction(ratio) if ratio is not None else "none"
    fields.update(value.to_fields())
    emit_record(fields, config.output_format, title="Bound")


if __name__ == "__main__":
    main()
