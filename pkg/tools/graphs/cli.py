"""CLI interface for the graph evaluator."""

import random
from pathlib import Path
from typing import List, Optional, Tuple

import click
from pydantic import BaseModel, ConfigDict, Field, StrictInt

from shared.cli import TautCommand, emit_record, handle_errors, run_options, start_run
from shared.config import parse_record_file
from shared.logger import get_logger
from tools.combinatorics.rational import parse_fraction

from .calculus import (
    IntersectionGraph,
    canonical_signature,
    check_contraction_order,
    evaluate_graph,
)

logger = get_logger(__name__)


class GraphFile(BaseModel):
    """Graph input record: {"vertices": r, "edges": [[j, k], ...]}; loops as [j, j]."""

    model_config = ConfigDict(extra="forbid")

    vertices: StrictInt = Field(ge=1)
    edges: List[Tuple[StrictInt, StrictInt]] = Field(default_factory=list)

    def to_graph(self) -> IntersectionGraph:
        return IntersectionGraph.from_edges(self.vertices, self.edges)


def load_graph(graph_file: Path) -> IntersectionGraph:
    """Read and validate a graph file."""
    return GraphFile(**parse_record_file(graph_file)).to_graph()


@click.command(cls=TautCommand)
@click.argument("graph_file", type=click.Path(dir_okay=False, path_type=Path))
@click.option("--genus", "-g", required=True, help="Genus as an exact fraction, e.g. 3 or 5/2")
@click.option(
    "--oracle",
    is_flag=True,
    help="Also contract in random orders and fail (exit 3) on disagreement",
)
@run_options
@handle_errors
def main(
    graph_file: Path,
    genus: str,
    oracle: bool,
    output_format: Optional[str],
    jobs: Optional[int],
    seed: Optional[int],
    config_file: Optional[Path],
    verbose: bool,
) -> None:
    """
    Graph Evaluator - intersection number of the bundle product a graph encodes.

    Prints the coefficients of 1, omega^2, phi and h_NT.

    Examples:

        \b
        # Single loop at genus 2
        taut graph loop.json --genus 2

        \b
        # Theta graph as JSON, checking contraction order
        taut graph theta.yaml --genus 2 --oracle --format json
    """
    config = start_run(
        __name__, config_file, verbose, output_format=output_format, jobs=jobs, seed=seed
    )
    g = parse_fraction(genus)
    graph = load_graph(graph_file)
    logger.info(f"Evaluating graph with {graph.num_vertices} vertices, {graph.num_edges} edges")

    if oracle:
        check_contraction_order(graph, random.Random(config.seed))
    logger.debug(f"Signature: {canonical_signature(graph)}")

    value = evaluate_graph(graph, g)
    emit_record(value.to_fields(), config.output_format, title="Graph value")


if __name__ == "__main__":
    main()
