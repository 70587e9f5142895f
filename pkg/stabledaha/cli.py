"""Command-line front end.

Reports go to stdout in the requested format; logs go to stderr.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import sys
from contextlib import contextmanager
from typing import Iterator, Sequence

import click
from pydantic import ValidationError

from . import config
from .asymfunc import (
    AsymFn,
    LimitReconstructionError,
    limit_macdonald,
    tilde_E,
    to_mas_basis,
)
from .coeffring import CoefficientError, render_ratqt
from .daharep import apply_word, check_eigen, macdonald_E
from .models import SUITES, AsymTermRecord, PBWTermRecord, RunConfig
from .pbw import (
    PBWElem,
    WordSyntaxError,
    ev0_normal_form,
    parse_word,
    pbw_records,
    straighten,
)
from .polyring import LaurentPoly
from .symfunc import DegreeOverflowError
from .verify import run_suite
from .weyl import GuardError, RankError, bruhat_leq, is_partition, strict_part

logger = logging.getLogger(__name__)

DOMAIN_ERRORS = (
    CoefficientError,
    DegreeOverflowError,
    GuardError,
    LimitReconstructionError,
    RankError,
    WordSyntaxError,
    ValidationError,
    ValueError,
)

FORMAT_OPTION = click.option(
    "--format",
    "output_format",
    type=click.Choice(config.OUTPUT_FORMATS),
    default=config.OUTPUT_FORMAT,
    show_default=True,
    help="Output format",
)


@contextmanager
def _reporting_failures(command: str) -> Iterator[None]:
    try:
        yield
    except DOMAIN_ERRORS as error:
        click.echo(f"{command} failed: {error}", err=True)
        raise SystemExit(1)


def parse_weight(text: str) -> tuple[int, ...]:
    """Parse "2,0,1"; the empty string is the empty weight."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise click.BadParameter(f"'{text}' is not a comma-separated weight") from None


def parse_index(text: str) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Parse "lambda|mu", for example "2,1|1,1" or "|2"."""
    if text.count("|") != 1:
        raise click.BadParameter(f"'{text}' must have the form lambda|mu")
    left, right = text.split("|")
    lam, mu = parse_weight(left), parse_weight(right)
    if lam and not lam[-1]:
        raise click.BadParameter(f"{lam} must end in a nonzero part")
    if not is_partition(mu):
        raise click.BadParameter(f"{mu} is not a partition")
    return lam, mu


def _emit_rows(header: Sequence[str], rows: Sequence[Sequence[object]]) -> None:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    click.echo(buffer.getvalue(), nl=False)


def _emit_poly(f: LaurentPoly, output_format: str, **extra: object) -> None:
    terms = [(list(exps), render_ratqt(coeff)) for exps, coeff in f.sorted_terms()]
    if output_format == "json":
        payload = dict(extra)
        payload["polynomial"] = str(f)
        payload["terms"] = [{"exps": exps, "coeff": coeff} for exps, coeff in terms]
        click.echo(json.dumps(payload, indent=2))
    elif output_format == "csv":
        _emit_rows(["exps", "coeff"], [(" ".join(map(str, e)), c) for e, c in terms])
    else:
        click.echo(str(f))


def _emit_asym(F: AsymFn, output_format: str, **extra: object) -> None:
    records = [
        AsymTermRecord(lambda_=list(lam), mu=list(mu), coeff=render_ratqt(coeff))
        for (lam, mu), coeff in sorted(to_mas_basis(F).items())
    ]
    if output_format == "json":
        payload = dict(extra)
        payload["function"] = str(F)
        payload["terms"] = [record.model_dump(by_alias=True) for record in records]
        click.echo(json.dumps(payload, indent=2))
    elif output_format == "csv":
        _emit_rows(
            ["lambda", "mu", "coeff"],
            [
                (" ".join(map(str, r.lambda_)), " ".join(map(str, r.mu)), r.coeff)
                for r in records
            ],
        )
    else:
        click.echo(str(F))


def _emit_pbw(element: PBWElem, output_format: str, **extra: object) -> None:
    records = [PBWTermRecord(**record) for record in pbw_records(element)]
    if output_format == "json":
        payload = dict(extra)
        payload["element"] = str(element)
        payload["terms"] = [record.model_dump() for record in records]
        click.echo(json.dumps(payload, indent=2))
    elif output_format == "csv":
        _emit_rows(
            ["mu", "nu", "w", "coeff"],
            [
                (
                    " ".join(map(str, r.mu)),
                    " ".join(map(str, r.nu)),
                    " ".join(map(str, r.w)),
                    r.coeff,
                )
                for r in records
            ],
        )
    else:
        click.echo(str(element))


def _padded(weight: tuple[int, ...], k: int | None) -> tuple[int, ...]:
    if k is None:
        return weight
    if len(weight) > k:
        raise RankError(f"Weight {weight} does not fit in rank {k}")
    return weight + (0,) * (k - len(weight))


@click.group()
@click.option(
    "--log-level",
    default=config.LOG_LEVEL,
    show_default=True,
    help="Logging level for messages on stderr",
)
def cli(log_level: str) -> None:
    """Exact computations with the GL_k DAHA, its stable limit and PBW bases."""
    logging.basicConfig(
        level=getattr(logging, log_level.upper(), logging.INFO),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
        force=True,
    )


@cli.command()
@click.option("--weight", required=True, help="Weight lambda, e.g. 0,1")
@click.option("--k", "k", type=int, default=None, help="Rank; pads with zeros")
@FORMAT_OPTION
def macdonald(weight: str, k: int | None, output_format: str) -> None:
    """Nonsymmetric Macdonald polynomial E_lambda."""
    with _reporting_failures("macdonald"):
        lam = _padded(parse_weight(weight), k)
        E = macdonald_E(lam)
        if not check_eigen(lam):
            raise RankError(f"E_{lam} failed its eigenvalue check")
        _emit_poly(E, output_format, weight=list(lam))


@cli.command("limit-macdonald")
@click.option("--weight", required=True, help="Weight lambda, e.g. 2,0,1")
@FORMAT_OPTION
def limit_macdonald_command(weight: str, output_format: str) -> None:
    """Limit nonsymmetric Macdonald function of a weight."""
    with _reporting_failures("limit-macdonald"):
        lam = strict_part(parse_weight(weight))
        _emit_asym(limit_macdonald(lam), output_format, weight=list(lam))


@cli.command("tilde-e")
@click.option("--index", "index", required=True, help='Index "lambda|mu"')
@FORMAT_OPTION
def tilde_e_command(index: str, output_format: str) -> None:
    """Eigenfunction E~ of the limit Cherednik operators."""
    with _reporting_failures("tilde-e"):
        lam, mu = parse_index(index)
        _emit_asym(
            tilde_E(lam, mu), output_format, index={"lambda": list(lam), "mu": list(mu)}
        )


@cli.command()
@click.option("--word", required=True, help='Operator word, e.g. "Y1 T1^-1 X2"')
@click.option("--weight", required=True, help="Exponent of the input monomial")
@click.option("--k", "k", type=int, default=None, help="Rank; pads with zeros")
@FORMAT_OPTION
def act(word: str, weight: str, k: int | None, output_format: str) -> None:
    """Apply an operator word to x^weight; the rightmost letter acts first."""
    with _reporting_failures("act"):
        exps = _padded(parse_weight(weight), k)
        letters = parse_word(word)
        for _, index in letters:
            if index > len(exps):
                raise RankError(f"Generator index {index} exceeds rank {len(exps)}")
        result = apply_word(list(letters), LaurentPoly.monomial(exps))
        _emit_poly(result, output_format, word=word, weight=list(exps))


@cli.command("straighten")
@click.option("--word", required=True, help='Generator word, e.g. "Y1 X1"')
@click.option("--k", "k", type=int, required=True, help="Rank")
@click.option("--mod-h", is_flag=True, help="Print the h = 0 normal form instead")
@FORMAT_OPTION
def straighten_command(word: str, k: int, mod_h: bool, output_format: str) -> None:
    """Expand a word in the basis X_mu Y_nu T_w."""
    with _reporting_failures("straighten"):
        letters = parse_word(word)
        element = ev0_normal_form(letters, k) if mod_h else straighten(letters, k)
        _emit_pbw(element, output_format, word=word, k=k)


@cli.command()
@click.argument("lam")
@click.argument("mu")
@FORMAT_OPTION
def bruhat(lam: str, mu: str, output_format: str) -> None:
    """Compare two weights in the Bruhat order."""
    with _reporting_failures("bruhat"):
        left, right = parse_weight(lam), parse_weight(mu)
        result = bruhat_leq(left, right)
        if output_format == "json":
            click.echo(json.dumps({"lambda": left, "mu": right, "leq": result}))
        elif output_format == "csv":
            _emit_rows(["lambda", "mu", "leq"], [(lam, mu, result)])
        else:
            click.echo("true" if result else "false")


@cli.command()
@click.option("--suite", type=click.Choice(SUITES), required=True)
@click.option("--max-rank", type=int, default=config.MAX_RANK, show_default=True)
@click.option("--max-degree", type=int, default=config.MAX_DEGREE, show_default=True)
@click.option("--seed", type=int, default=config.SEED, show_default=True)
@FORMAT_OPTION
def verify(
    suite: str, max_rank: int, max_degree: int, seed: int, output_format: str
) -> None:
    """Run a verification suite; exits 1 when any check fails."""
    with _reporting_failures("verify"):
        run_config = RunConfig(
            suite=suite,  # type: ignore[arg-type]
            max_rank=max_rank,
            max_degree=max_degree,
            seed=seed,
            output_format=output_format,
        )
        report = run_suite(run_config)
    if output_format == "json":
        click.echo(report.to_json())
    elif output_format == "csv":
        _emit_rows(
            ["name", "instance", "passed", "detail"],
            [(r.name, r.instance, r.passed, r.detail) for r in report.results],
        )
    else:
        for result in report.results:
            status = "PASS" if result.passed else "FAIL"
            line = f"{status} {result.name}: {result.instance}"
            click.echo(f"{line} ({result.detail})" if result.detail else line)
        summary = report.summary
        click.echo(f"{summary['checked']} checks, {summary['failed']} failed")
    if not report.passed:
        raise SystemExit(1)


def main() -> None:
    """Console entry point."""
    try:
        config.validate_runtime_config()
    except RuntimeError as error:
        print(f"Configuration failed: {error}", file=sys.stderr)
        raise SystemExit(1)
    cli()


if __name__ == "__main__":
    main()
