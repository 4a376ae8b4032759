"""``nanotop``: classify maps between finite nano spaces and verify the
continuity hierarchy over bounded instance sweeps.
"""

from __future__ import annotations

import logging
import sys
from collections.abc import Callable, Iterator, Sequence
from contextlib import contextmanager
from pathlib import Path

import click
from pydantic import ValidationError
from ska_ser_logging import configure_logging

from nano_continuity.continuity import (
    ContinuityClass,
    classify,
    n_continuity_by_interior,
    nsalpha_characterizations,
)
from nano_continuity.core.config import config
from nano_continuity.core.exceptions import NanoContinuityError
from nano_continuity.verifier import (
    CheckReport,
    InstanceBounds,
    SpaceMode,
    check_compositions,
    check_conditional_theorems,
    check_equivalences,
    check_set_hierarchy,
    find_witness,
    implication_matrix,
    replay_corpus,
    replay_witness,
)
from nano_continuity.verifier.instances import describe_space
from nano_continuity.verifier.models import (
    Discrepancy,
    DiscrepancyStatus,
    ReproStatus,
)

from .parser import load_map, load_space
from .report import (
    JsonReport,
    check_text,
    dumps,
    families_text,
    matrix_text,
    profile_text,
    repro_text,
    space_families,
    witness_text,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2

CHECKS: dict[str, Callable[[InstanceBounds], CheckReport]] = {
    "equivalences": check_equivalences,
    "theorems": check_conditional_theorems,
    "compositions": check_compositions,
    "families": check_set_hierarchy,
}


class InputError(click.ClickException):
    """Unreadable or invalid input, reported with exit code 2."""

    exit_code = EXIT_INPUT


@contextmanager
def input_errors() -> Iterator[None]:
    """Turn input and bounds errors into ``InputError``."""
    try:
        yield
    except (NanoContinuityError, ValidationError, OSError) as exc:
        raise InputError(str(exc)) from exc


def _status(passed: bool) -> str:
    return "ok" if passed else "failed"


def _finish(ctx: click.Context, passed: bool) -> None:
    ctx.exit(EXIT_OK if passed else EXIT_FAILED)


def bounds_options(func: Callable) -> Callable:
    """Flags shared by every sweep command."""
    options = [
        click.option("--max-size", type=int, help="Largest universe per side."),
        click.option("--seed", type=int, help="Seed for sampled scans."),
        click.option(
            "--mode",
            type=click.Choice([m.value for m in SpaceMode]),
            help="Draw nano-derived spaces, explicit topologies or both.",
        ),
        click.option(
            "--sample-count",
            type=int,
            help="Sampled instances beyond exhaustive reach.",
        ),
        click.option("--workers", type=int, help="Scan threads."),
        click.option("--json", "as_json", is_flag=True, help="Emit JSON."),
    ]
    for option in reversed(options):
        func = option(func)
    return func


@click.group()
@click.option("--verbose", is_flag=True, help="Log progress at INFO.")
def cli(verbose: bool) -> None:
    """Finite nano topology toolkit."""
    configure_logging(logging.INFO if verbose else config.log_level)


@cli.group()
def space() -> None:
    """Inspect space files."""


@space.command("families")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--json", "as_json", is_flag=True, help="Emit JSON.")
def space_families_command(file: str, as_json: bool) -> None:
    """Print the open and closed families of a space file."""
    path = Path(file)
    with input_errors():
        s = load_space(path.parent, path.name)

    if as_json:
        report = JsonReport(
            command="space families",
            status="ok",
            spaces={"space": describe_space(s)},
            families={"space": space_families(s)},
        )
        click.echo(dumps(report))
    else:
        click.echo(families_text(s))


@cli.group("map")
def map_group() -> None:
    """Inspect map files."""


@map_group.command("classify")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--json", "as_json", is_flag=True, help="Emit JSON.")
def map_classify(file: str, as_json: bool) -> None:
    """Print the continuity profile of a map file.

    Space references in the map file resolve relative to its directory.
    """
    path = Path(file)
    with input_errors():
        h, s_u, s_v = load_map(path.parent, path.name)
        profile = classify(h, s_u, s_v)
        characterizations = nsalpha_characterizations(h, s_u, s_v)
        by_interior = n_continuity_by_interior(h, s_u, s_v)

    if as_json:
        report = JsonReport(
            command="map classify",
            status="ok",
            spaces={"domain": describe_space(s_u), "codomain": describe_space(s_v)},
            profile=profile,
            details={
                "nsa_characterisations": characterizations.model_dump(mode="json"),
                "n_continuity_by_interior": by_interior,
            },
        )
        click.echo(dumps(report))
    else:
        click.echo(profile_text(profile, characterizations))


@cli.group()
def verify() -> None:
    """Sweep bounded instances and check the hierarchy claims."""


def _bounds(**overrides: object) -> InstanceBounds:
    with input_errors():
        return InstanceBounds.from_config(**overrides)


@verify.command("implications")
@bounds_options
@click.pass_context
def verify_implications(
    ctx: click.Context,
    as_json: bool,
    **overrides: object,
) -> None:
    """Compute the implication matrix among the seven classes."""
    bounds = _bounds(**overrides)
    with input_errors():
        matrix = implication_matrix(bounds)

    if as_json:
        report = JsonReport(
            command="verify implications",
            status=_status(matrix.passed),
            witnesses=[c.witness for c in matrix.cells if c.witness is not None],
            discrepancies=matrix.discrepancies,
            details=matrix.model_dump(
                mode="json",
                by_alias=True,
                exclude={"discrepancies"},
            ),
        )
        click.echo(dumps(report))
    else:
        click.echo(matrix_text(matrix))
    _finish(ctx, matrix.passed)


def _check_command(name: str) -> click.Command:
    check = CHECKS[name]

    @bounds_options
    @click.pass_context
    def command(ctx: click.Context, as_json: bool, **overrides: object) -> None:
        bounds = _bounds(**overrides)
        with input_errors():
            result = check(bounds)

        if as_json:
            report = JsonReport(
                command=f"verify {name}",
                status=_status(result.passed),
                witnesses=result.witnesses,
                discrepancies=result.discrepancies,
                details=result.model_dump(
                    mode="json",
                    by_alias=True,
                    exclude={"witnesses", "discrepancies"},
                ),
            )
            click.echo(dumps(report))
        else:
            click.echo(check_text(result))
        _finish(ctx, result.passed)

    command.__doc__ = f"Run the {name} sweep."
    return verify.command(name)(command)


for _name in CHECKS:
    _check_command(_name)


@cli.command()
@click.option("--holds", required=True, help="Class the map must be in.")
@click.option("--fails", required=True, help="Class the map must not be in.")
@click.option("--max-size", type=int, help="Largest universe per side.")
@click.option("--seed", type=int, help="Seed for sampled scans.")
@click.option(
    "--mode",
    type=click.Choice([m.value for m in SpaceMode]),
    help="Draw nano-derived spaces, explicit topologies or both.",
)
@click.option("--json", "as_json", is_flag=True, help="Emit JSON.")
@click.pass_context
def search(  # noqa: PLR0913
    ctx: click.Context,
    holds: str,
    fails: str,
    max_size: int | None,
    seed: int | None,
    mode: str | None,
    as_json: bool,
) -> None:
    """Find the first map in one class but not another."""
    with input_errors():
        holds_ = ContinuityClass.parse(holds)
        fails_ = ContinuityClass.parse(fails)
    bounds = _bounds(max_size=max_size, seed=seed, mode=mode)

    if holds_ == fails_:
        message = "no witness (vacuous)"
        witness = None
    else:
        with input_errors():
            witness = find_witness(holds_, fails_, bounds)
        message = "no witness within bounds"

    discrepancies = []
    if witness is not None and not replay_witness(witness):
        discrepancies.append(
            Discrepancy(
                check="search",
                detail="witness does not replay",
                witness=witness,
            ),
        )
    passed = witness is not None and not discrepancies

    if as_json:
        report = JsonReport(
            command="search",
            status=_status(passed),
            witnesses=[] if witness is None else [witness],
            discrepancies=discrepancies,
            details={
                "holds": holds_.value,
                "fails": fails_.value,
                "bounds": bounds.model_dump(mode="json"),
                "message": None if witness is not None else message,
            },
        )
        click.echo(dumps(report))
    elif witness is None:
        click.echo(message)
    else:
        click.echo(witness_text(witness))
        if discrepancies:
            click.echo("witness does not replay")
    _finish(ctx, passed)


@cli.group()
def repro() -> None:
    """Replay the bundled corpus of worked examples."""


@repro.command("paper")
@click.option("--json", "as_json", is_flag=True, help="Emit JSON.")
@click.pass_context
def repro_paper(ctx: click.Context, as_json: bool) -> None:
    """Rebuild every corpus case and check its stated outcomes."""
    result = replay_corpus()

    if as_json:
        discrepancies = [
            Discrepancy(
                check=f"{e.case}: {e.check}",
                detail=e.detail or "",
                status=DiscrepancyStatus.FAILURE
                if e.status == ReproStatus.FAIL
                else DiscrepancyStatus.KNOWN,
                data={"expected": e.expected, "actual": e.actual},
            )
            for e in result.entries
            if e.status != ReproStatus.PASS
        ]
        report = JsonReport(
            command="repro paper",
            status=_status(result.passed),
            spaces=result.spaces,
            discrepancies=discrepancies,
            details={
                "entries": [e.model_dump(mode="json") for e in result.entries],
            },
        )
        click.echo(dumps(report))
    else:
        click.echo(repro_text(result))
    _finish(ctx, result.passed)


repro.add_command(repro_paper, name="corpus")


def run_command(argv: Sequence[str]) -> int:
    """Run one ``nanotop`` invocation and return its exit code.

    Args:
        argv (Sequence[str]): Arguments after the program name.

    Returns:
        int: 0 on success, 1 for a failed check or missing witness and 2
            for unreadable input.

    """
    try:
        code = cli.main(
            args=list(argv),
            prog_name="nanotop",
            standalone_mode=False,
        )
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.Abort:
        click.echo("Aborted!", err=True)
        return EXIT_FAILED
    return code if isinstance(code, int) else EXIT_OK


def main() -> None:
    """Console script entry point."""
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
