"""The taut command: every tool as a subcommand."""

import click

from shared import __version__
from shared.cli import TautGroup
from tools.graphs.cli import main as graph
from tools.heights.cli import main as height
from tools.hodge.cli import main as bound
from tools.intersection.cli import main as intersect
from tools.verify.cli import main as verify


@click.group(cls=TautGroup)
@click.version_option(__version__, prog_name="taut")
def main() -> None:
    """
    Tautological intersection numbers on X^r, exact over the rationals.

    Values are printed as coefficients of 1, omega^2, phi(X) and h_NT.
    Exit codes: 0 success, 1 usage error, 2 invalid input, 3 failed cross-check.
    """


main.add_command(graph, name="graph")
main.add_command(intersect, name="intersect")
main.add_command(height, name="height")
main.add_command(bound, name="bound")
main.add_command(verify, name="verify")


if __name__ == "__main__":
    main()
