import argparse
import logging
from collections.abc import Sequence

from pydantic import ValidationError
from pydantic_settings import BaseSettings

from singular_ldg.core.application_error import ApplicationError
from singular_ldg.core.experiment.constraints.log_level import LogLevel
from singular_ldg.entrypoints.cli.arguments import _positive_int
from singular_ldg.entrypoints.cli.commands import coercivity, minimize, potential, verify
from singular_ldg.entrypoints.cli.exit_codes import ExitCode
from singular_ldg.entrypoints.cli.output import _write_error
from singular_ldg.infrastructure.logging.configurator import LoggingSettings
from singular_ldg.infrastructure.parallel.block_executor import ParallelSettings
from singular_ldg.infrastructure.settings import ApplicationSettings
from singular_ldg.ioc.container import get_container

logger = logging.getLogger(__name__)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="singular-ldg",
        description=(
            "Minimize and verify Landau-de Gennes Q-tensor energies "
            "with the singular Maier-Saupe bulk potential."
        ),
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"%(prog)s {ApplicationSettings().version}",
    )
    parser.add_argument(
        "--threads",
        type=_positive_int,
        default=None,
        help="Worker threads for energy assembly. Defaults to PARALLEL_THREADS.",
    )
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=list(LogLevel),
        default=None,
        help="Log verbosity. Defaults to the run configuration, then LOGGING_LEVEL.",
    )
    commands = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    potential.register(
        commands.add_parser("potential", help="Evaluate the Maier-Saupe potential."),
    )
    minimize.register(
        commands.add_parser("minimize", help="Minimize the energy of a run configuration."),
    )
    verify.register(
        commands.add_parser("verify", help="Check a stored field or run a numerical probe."),
    )
    coercivity.register(
        commands.add_parser("coercivity", help="Audit elastic coercivity conditions."),
    )
    return parser


def dispatch(argv: Sequence[str]) -> int:
    """Parse ``argv`` and run the selected command.

    Args:
        argv: Command-line arguments without the program name.

    Returns:
        0 on success, 1 when a check fails or a computation cannot complete,
        2 on usage and configuration errors.
    """
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_request:
        return _exit_status(exit_request)

    container = get_container(settings_overrides=_settings_overrides(args))
    try:
        return args.handler(args=args, container=container)
    except (OSError, ValidationError, *args.usage_errors) as error:
        _write_error(str(error))
        return ExitCode.USAGE
    except ApplicationError as error:
        logger.debug("Command %s failed", args.command, exc_info=True)
        _write_error(str(error))
        return ExitCode.FAILURE


def _settings_overrides(args: argparse.Namespace) -> list[BaseSettings]:
    overrides: list[BaseSettings] = []
    if args.threads is not None:
        overrides.append(ParallelSettings(threads=args.threads))
    if args.log_level is not None:
        overrides.append(LoggingSettings(level=args.log_level))

    return overrides


def _exit_status(exit_request: SystemExit) -> int:
    if exit_request.code is None:
        return ExitCode.SUCCESS
    if isinstance(exit_request.code, int):
        return exit_request.code

    return ExitCode.USAGE
