"""Command line front end.

The matrix goes to stdout; the verification report, ``--dump-chain`` output
and errors go to stderr. Exit status: 0 success, 1 bad input, 2 failed
verification, 3 unsupported option combination.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
import sys
from typing import TYPE_CHECKING, Annotated

import click
from pydantic import ValidationError
import typer
from typer.core import TyperCommand

from detrep.config import RunConfig
from detrep.exceptions import INPUT_ERROR, DetRepError
from detrep.log import configure_cli_logging
from detrep.parsing import parse_polynomial
from detrep.pipeline import represent_verified
from detrep.poly import format_polynomial
from detrep.render import render
from detrep.schema import ChainFormDocument, PolynomialDocument, dump_json


if TYPE_CHECKING:
    from detrep.poly import Polynomial


logger = logging.getLogger(__name__)


class _InputErrorCommand(TyperCommand):
    """Reports usage errors with the input-error exit status."""

    def parse_args(self, ctx: click.Context, args: list[str]) -> list[str]:
        try:
            return super().parse_args(ctx, args)
        except click.UsageError as error:
            error.exit_code = INPUT_ERROR
            raise


app = typer.Typer(
    add_completion=False, help="Determinantal representations of polynomials."
)


def _read_source(config: RunConfig) -> str:
    if config.reads_stdin:
        return sys.stdin.read()
    assert config.source is not None
    try:
        return config.source.read_text(encoding="utf-8")
    except OSError as error:
        msg = f"cannot read {config.source}: {error.strerror}"
        raise DetRepError.degenerate_input(msg) from error


def _load_polynomial(text: str, config: RunConfig) -> Polynomial:
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            document = PolynomialDocument.model_validate_json(stripped)
        except ValidationError as error:
            msg = f"invalid polynomial document: {error.error_count()} errors"
            raise DetRepError.degenerate_input(msg) from error
        return document.to_polynomial()
    return parse_polynomial(stripped, config.var_order)


def run(config: RunConfig) -> int:
    """Execute one configured run and return the exit status."""
    configure_cli_logging(config.verbose)
    try:
        p = _load_polynomial(_read_source(config), config)
        result, check = represent_verified(
            p,
            config.form,
            chain=config.chain,
            strategy=config.strategy,
            carrier=config.carrier,
            mode=config.verify,
            trials=config.trials,
            seed=config.seed,
        )
    except DetRepError as error:
        logger.debug("Run failed", exc_info=True)
        typer.echo(json.dumps(error.to_error_obj()), err=True)
        return error.code
    except Exception as error:
        logger.exception("Unexpected failure")
        wrapped = DetRepError.internal_error(error)
        typer.echo(json.dumps(wrapped.to_error_obj()), err=True)
        return wrapped.code
    typer.echo(render(result.pencil, config.output))
    report = {
        "polynomial": format_polynomial(p),
        "form": result.pencil.form,
        "dimension": str(result.dimension),
        "chain length": "-" if result.chain_form is None else str(len(result.chain_form)),
        "verified": check.describe(),
    }
    for key, value in report.items():
        typer.echo(f"{key}: {value}", err=True)
    if config.dump_chain and result.chain_form is not None:
        document = ChainFormDocument.from_chain_form(result.chain_form)
        typer.echo(dump_json(document), err=True)
    return 0


@app.command(cls=_InputErrorCommand)
def main(
    source: Annotated[
        Path | None,
        typer.Option("--input", "-i", help="Polynomial file, '-' for stdin."),
    ] = None,
    form: Annotated[
        str, typer.Option(help="Representation to build: ndr, tdr, rdr or udr.")
    ] = "rdr",
    chain: Annotated[
        str, typer.Option(help="Chain-form construction: plain or improved.")
    ] = "improved",
    output: Annotated[
        str, typer.Option(help="Matrix output format: text, json or latex.")
    ] = "text",
    verify: Annotated[
        str,
        typer.Option(
            help="Determinant check: auto, symbolic, eval or none. "
            "auto is symbolic up to 9x9."
        ),
    ] = "auto",
    trials: Annotated[int, typer.Option(help="Random points for eval checks.")] = 20,
    seed: Annotated[
        int, typer.Option(envvar="DETREP_SEED", help="Seed for eval checks.")
    ] = 0,
    dump_chain: Annotated[
        bool, typer.Option("--dump-chain", help="Write the chain-form JSON to stderr.")
    ] = False,
    strategy: Annotated[
        str, typer.Option(help="Improved chain-form descent: lookahead or lowest.")
    ] = "lookahead",
    carrier: Annotated[
        str,
        typer.Option(help="Carrier of lifted coefficients: shared, lowest or factor."),
    ] = "shared",
    var_order: Annotated[
        str | None,
        typer.Option(help="Comma-separated variable order, e.g. 'x1,x2,x3'."),
    ] = None,
    verbose: Annotated[
        bool, typer.Option("--verbose", "-v", help="Debug logging on stderr.")
    ] = False,
) -> None:
    """Compile a polynomial into a matrix whose determinant equals it."""
    try:
        config = RunConfig(
            source=source,
            form=form,
            chain=chain,
            output=output,
            verify=verify,
            trials=trials,
            seed=seed,
            dump_chain=dump_chain,
            strategy=strategy,
            carrier=carrier,
            var_order=None if var_order is None else _split_names(var_order),
            verbose=verbose,
        )
    except DetRepError as error:
        typer.echo(json.dumps(error.to_error_obj()), err=True)
        raise typer.Exit(error.code) from error
    except ValidationError as error:
        typer.echo(str(error), err=True)
        raise typer.Exit(INPUT_ERROR) from error
    raise typer.Exit(run(config))


def _split_names(text: str) -> list[str]:
    return [name.strip() for name in text.split(",") if name.strip()]


if __name__ == "__main__":
    app()
