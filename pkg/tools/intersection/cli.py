"""CLI interface for the intersection engines."""

from pathlib import Path
from typing import List, Optional, Union

import click
from pydantic import BaseModel, ConfigDict, Field, StrictInt

from shared.cli import TautCommand, emit_record, handle_errors, run_options, start_run
from shared.config import parse_record_file
from shared.logger import get_logger
from tools.combinatorics.rational import parse_fraction
from tools.symbolic.values import SymbolicValue

from .engine import IntersectionEngine
from .tensor import CoefficientTensor

logger = get_logger(__name__)


class TensorEntry(BaseModel):
    """One coefficient t_{l,j,k}; t is an integer or fraction text such as "-3/4"."""

    model_config = ConfigDict(extra="forbid")

    l: StrictInt
    j: StrictInt
    k: StrictInt
    t: Union[StrictInt, str]


class TensorFile(BaseModel):
    """Tensor input record: r, the factor count and the nonzero entries."""

    model_config = ConfigDict(extra="forbid")

    r: StrictInt = Field(ge=1)
    factors: StrictInt = Field(ge=1)
    entries: List[TensorEntry] = Field(default_factory=list)

    def to_tensor(self) -> CoefficientTensor:
        return CoefficientTensor.from_entries(
            self.r, self.factors, ((e.l, e.j, e.k, e.t) for e in self.entries)
        )


def load_tensor(tensor_file: Path) -> CoefficientTensor:
    """Read and validate a tensor file."""
    return TensorFile(**parse_record_file(tensor_file)).to_tensor()


def intersect(
    tensor: CoefficientTensor, g: str, oracle: bool = False, jobs: int = 1
) -> SymbolicValue:
    """Closed-form intersection number of a tensor at a genus given as fraction text."""
    return IntersectionEngine(parse_fraction(g), jobs).intersect(tensor, oracle=oracle)


@click.command(cls=TautCommand)
@click.argument("tensor_file", type=click.Path(dir_okay=False, path_type=Path))
@click.option("--genus", "-g", required=True, help="Genus as an exact fraction")
@click.option("--oracle", is_flag=True, help="Cross-check with the brute-force expansion")
@run_options
@handle_errors
def main(
    tensor_file: Path,
    genus: str,
    oracle: bool,
    output_format: Optional[str],
    jobs: Optional[int],
    seed: Optional[int],
    config_file: Optional[Path],
    verbose: bool,
) -> None:
    """
    Intersection Engine - intersection number of 1/2 sum t_{l,j,k} Delta_{jk} bundles.

    Uses the geometric formula for n = r factors and the arithmetic one for
    n = r + 1.

    Examples:

        \b
        # Pullback tensor at genus 3
        taut intersect pullback.json --genus 3

        \b
        # Check against brute force with 4 workers
        taut intersect tensor.yaml --genus 5 --oracle --jobs 4 --format json
    """
    config = start_run(
        __name__, config_file, verbose, output_format=output_format, jobs=jobs, seed=seed
    )
    tensor = load_tensor(tensor_file)
    logger.info(f"Loaded tensor with r={tensor.r}, n={tensor.n}")

    value = intersect(tensor, genus, oracle=oracle, jobs=config.jobs)
    emit_record(value.to_fields(), config.output_format, title="Intersection number")


if __name__ == "__main__":
    main()
