"""CLI interface for tautological heights."""

from pathlib import Path
from typing import Dict, List, Optional, Tuple

import click

from shared.cli import TautCommand, emit_record, handle_errors, run_options, start_run
from shared.errors import InvalidArgumentError
from shared.logger import get_logger
from tools.combinatorics.rational import format_fraction, parse_fraction
from tools.symbolic.values import InvariantValues

from .formulas import (
    CurveParams,
    PullbackSpec,
    bogomolov_bound,
    height_coefficients,
    neron_tate_height,
    phi_local_lower_bound,
)

logger = get_logger(__name__)


def parse_deltas(items: Tuple[str, ...]) -> List[str]:
    """Turn ("1=2", "3=1/2") into ["2", "0", "1/2"] (delta_1, delta_2, delta_3)."""
    given: Dict[int, str] = {}
    for item in items:
        index, sep, value = item.partition("=")
        try:
            j = int(index)
        except ValueError:
            raise InvalidArgumentError(f"Expected j=value, got {item!r}") from None
        if not sep or j < 1:
            raise InvalidArgumentError(f"Expected j=value with j >= 1, got {item!r}")
        if j in given:
            raise InvalidArgumentError(f"delta_{j} given twice")
        given[j] = value
    return [given.get(j, "0") for j in range(1, max(given, default=0) + 1)]


@click.command(cls=TautCommand)
@click.option("--m", "m_text", required=True, help="Comma-separated nonzero integers m_1..m_r")
@click.option("--genus", "-g", type=int, required=True, help="Genus g of the curve")
@click.option(
    "--dK", "d_k", type=int, default=1, show_default=True, help="Degree of the number field"
)
@click.option("--eval", "eval_text", help="Numeric invariants, e.g. omega2=16,phi=1,hnt=0")
@click.option("--bogomolov", is_flag=True, help="Print the effective Bogomolov bound instead")
@click.option("--delta0", help="Non-separating double points at a place (adds the local phi bound)")
@click.option("--delta", "delta_items", multiple=True, help="Separating double points as j=value")
@run_options
@handle_errors
def main(
    m_text: str,
    genus: int,
    d_k: int,
    eval_text: Optional[str],
    bogomolov: bool,
    delta0: Optional[str],
    delta_items: Tuple[str, ...],
    output_format: Optional[str],
    jobs: Optional[int],
    seed: Optional[int],
    config_file: Optional[Path],
    verbose: bool,
) -> None:
    """
    Tautological Heights - Neron-Tate height of Z_{m,alpha} and Bogomolov bounds.

    Without --eval prints (prefactor, a, b, c) with
    h' = prefactor (a omega^2 + b phi + c h_NT).

    Examples:

        \b
        # Height coefficients of the curve itself
        taut height --m 1 --genus 3

        \b
        # Exact height for given invariants
        taut height --m 1,-1 --genus 4 --eval omega2=1,phi=1/2

        \b
        # Bogomolov bound plus a local phi bound
        taut height --m 1,-1 --genus 4 --bogomolov --delta0 3 --delta 1=1
    """
    if eval_text is not None and bogomolov:
        raise click.UsageError("--eval and --bogomolov are mutually exclusive")
    config = start_run(
        __name__, config_file, verbose, output_format=output_format, jobs=jobs, seed=seed
    )
    spec = PullbackSpec.parse(m_text)
    params = CurveParams(genus, d_k)
    logger.info(f"Cycle Z_m for m={list(spec.m)}, g={params.g}, d_K={params.d_K}")

    fields: Dict[str, str] = {}
    if bogomolov:
        fields["phi_coefficient"] = format_fraction(bogomolov_bound(spec, params))
    else:
        coefficients = height_coefficients(spec, params)
        if eval_text is not None:
            height = neron_tate_height(spec, params, InvariantValues.parse(eval_text))
            fields["height"] = format_fraction(height)
        else:
            fields["prefactor"] = format_fraction(coefficients.prefactor)
            fields["a"] = format_fraction(coefficients.a)
            fields["b"] = format_fraction(coefficients.b)
            fields["c"] = format_fraction(coefficients.c)

    if delta0 is not None or delta_items:
        deltas = [parse_fraction(d) for d in parse_deltas(delta_items)]
        base = parse_fraction(delta0) if delta0 is not None else 0
        fields["phi_local_bound"] = format_fraction(phi_local_lower_bound(genus, base, deltas))

    emit_record(fields, config.output_format, title="Height")


if __name__ == "__main__":
    main()
