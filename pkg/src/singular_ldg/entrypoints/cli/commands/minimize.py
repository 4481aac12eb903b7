import argparse
from pathlib import Path

from diwire import Container

from singular_ldg.core.experiment.services.run_config_parser import RunConfigParserService
from singular_ldg.core.experiment.use_cases.prepare_initial_field import (
    PrepareInitialFieldUseCase,
)
from singular_ldg.core.field.services.field_csv import FieldCsvService
from singular_ldg.core.minimizer.entities.solve_report import SolveReport
from singular_ldg.core.minimizer.use_cases.minimize_field import MinimizeFieldUseCase
from singular_ldg.entrypoints.cli.exit_codes import ExitCode
from singular_ldg.entrypoints.cli.output import _write_error, _write_labeled, _write_table
from singular_ldg.entrypoints.cli.run_config import load_run_config

_TRACE_HEADER = ("iter", "energy", "grad_norm", "step", "margin")


def register(parser: argparse.ArgumentParser) -> None:
    """Add the ``minimize`` arguments."""
    parser.add_argument("--config", type=Path, required=True, help="JSON run configuration.")
    parser.add_argument("--init", type=Path, default=None, help="Initial field CSV.")
    parser.add_argument("--out", type=Path, default=None, help="Final field CSV.")
    parser.add_argument("--trace", type=Path, default=None, help="Solver trace CSV.")
    parser.add_argument("--seed", type=int, default=None, help="Override solver.seed.")
    parser.set_defaults(
        handler=_run_minimize,
        usage_errors=(
            RunConfigParserService.CONFIGURATION_ERROR,
            PrepareInitialFieldUseCase.GRID_MISMATCH_ERROR,
            PrepareInitialFieldUseCase.FIELD_FORMAT_ERROR,
            PrepareInitialFieldUseCase.INFEASIBLE_BOUNDARY_ERROR,
            MinimizeFieldUseCase.INFEASIBLE_INITIAL_FIELD_ERROR,
        ),
    )


def _run_minimize(*, args: argparse.Namespace, container: Container) -> ExitCode:
    """Relax the configured field and store the result.

    Returns:
        Success when the solver converged, failure otherwise.
    """
    config = load_run_config(args=args, container=container)
    out = args.out or config.output.field
    if out is None:
        _write_error("no output path: pass --out or set output.field in the configuration")
        return ExitCode.USAGE

    field = container.resolve(PrepareInitialFieldUseCase).execute(
        config=config,
        init_path=args.init,
    )
    result = container.resolve(MinimizeFieldUseCase).execute(
        field=field,
        bulk=config.bulk,
        constants=config.elastic,
        options=config.solver,
    )
    container.resolve(FieldCsvService).save_csv(field=result.field, path=out)

    trace = args.trace or config.output.trace
    if trace is not None:
        _write_trace(report=result.report, path=trace)

    report = result.report
    _write_labeled(
        [
            ("termination", report.termination),
            ("iterations", report.iterations),
            ("energy", report.final_energy),
            ("grad_norm", report.final_grad_norm),
            ("margin", report.final_margin),
            ("field", out),
        ],
    )
    return ExitCode.SUCCESS if report.converged else ExitCode.FAILURE


def _write_trace(*, report: SolveReport, path: Path) -> None:
    _write_table(
        header=_TRACE_HEADER,
        rows=(
            [iteration, energy, grad_norm, step, margin]
            for iteration, (energy, grad_norm, step, margin) in enumerate(
                zip(
                    report.energy_trace,
                    report.grad_norm_trace,
                    report.step_trace,
                    report.margin_trace,
                    strict=True,
                ),
            )
        ),
        path=path,
    )
