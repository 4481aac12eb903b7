import argparse
from pathlib import Path

import numpy as np
from diwire import Container

from singular_ldg.core.energy.entities.field_verification import FieldVerification
from singular_ldg.core.energy.use_cases.verify_field import VerifyFieldUseCase
from singular_ldg.core.experiment.services.run_config_parser import RunConfigParserService
from singular_ldg.core.field.entities.field import Field
from singular_ldg.core.field.services.field_csv import FieldCsvService
from singular_ldg.core.verification.constraints.blowup_path import BlowupPath
from singular_ldg.core.verification.constraints.thresholds import (
    DEFAULT_MARGIN_FLOOR,
    DEFAULT_MIN_GROWTH,
)
from singular_ldg.core.verification.use_cases.probe_convexity import ProbeConvexityUseCase
from singular_ldg.core.verification.use_cases.profile_margins import ProfileMarginsUseCase
from singular_ldg.core.verification.use_cases.run_refinement_study import (
    RunRefinementStudyUseCase,
)
from singular_ldg.core.verification.use_cases.scan_blowup import ScanBlowupUseCase
from singular_ldg.entrypoints.cli.arguments import (
    _add_bulk_arguments,
    _bulk_params,
    _positive_int,
)
from singular_ldg.entrypoints.cli.exit_codes import ExitCode
from singular_ldg.entrypoints.cli.output import (
    _write_error,
    _write_labeled,
    _write_table,
    _write_verdict,
)
from singular_ldg.entrypoints.cli.run_config import load_run_config

_DEFAULT_SIZES = (17, 33)
_DEFAULT_CONVEXITY_SAMPLES = 1000


def register(parser: argparse.ArgumentParser) -> None:
    """Add the field check and the ``margins``, ``convexity``, ``blowup`` and ``refine`` probes."""
    parser.add_argument("--field", type=Path, default=None, help="Field CSV to check.")
    parser.add_argument("--config", type=Path, default=None, help="JSON run configuration.")
    parser.add_argument("--inset", type=float, default=0.0, help="Residual inset distance.")
    parser.add_argument("--residual-out", type=Path, default=None, help="Per-node residual CSV.")
    parser.set_defaults(
        handler=_run_field_check,
        seed=None,
        usage_errors=(
            RunConfigParserService.CONFIGURATION_ERROR,
            FieldCsvService.FIELD_FORMAT_ERROR,
            FieldCsvService.GRID_MISMATCH_ERROR,
            VerifyFieldUseCase.EMPTY_INSET_ERROR,
        ),
    )
    probes = parser.add_subparsers(dest="probe", metavar="PROBE")

    margins = probes.add_parser("margins", help="Minimum margin over nested interior regions.")
    margins.add_argument("--field", type=Path, required=True)
    margins.add_argument("--insets", type=float, nargs="+", required=True)
    margins.add_argument("--out", type=Path, default=None, help="CSV destination (stdout).")
    margins.set_defaults(
        handler=_run_margins,
        usage_errors=(
            FieldCsvService.FIELD_FORMAT_ERROR,
            ProfileMarginsUseCase.EMPTY_INSET_ERROR,
            ProfileMarginsUseCase.INVALID_PROBE_ERROR,
        ),
    )

    convexity = probes.add_parser("convexity", help="Randomized midpoint convexity test.")
    convexity.add_argument("--samples", type=_positive_int, default=_DEFAULT_CONVEXITY_SAMPLES)
    convexity.add_argument("--margin-floor", type=float, default=DEFAULT_MARGIN_FLOOR)
    convexity.add_argument("--seed", type=int, default=0)
    convexity.add_argument("--out", type=Path, default=None, help="CSV destination (stdout).")
    _add_bulk_arguments(convexity)
    convexity.set_defaults(
        handler=_run_convexity,
        usage_errors=(ProbeConvexityUseCase.INVALID_PROBE_ERROR,),
    )

    blowup = probes.add_parser("blowup", help="Potential along a uniaxial ray to the boundary.")
    blowup.add_argument("--path", type=BlowupPath, choices=list(BlowupPath), required=True)
    blowup.add_argument("--s", dest="s_values", type=float, nargs="+", required=True)
    blowup.add_argument("--min-growth", type=float, default=DEFAULT_MIN_GROWTH)
    blowup.add_argument("--out", type=Path, default=None, help="CSV destination (stdout).")
    _add_bulk_arguments(blowup)
    blowup.set_defaults(
        handler=_run_blowup,
        usage_errors=(
            ScanBlowupUseCase.NEAR_BOUNDARY_ERROR,
            ScanBlowupUseCase.INVALID_PROBE_ERROR,
        ),
    )

    refine = probes.add_parser("refine", help="Solve on increasingly fine grids.")
    refine.add_argument("--config", type=Path, required=True)
    refine.add_argument("--sizes", type=int, nargs="+", default=list(_DEFAULT_SIZES))
    refine.add_argument("--seed", type=int, default=None, help="Override solver.seed.")
    refine.add_argument("--out", type=Path, default=None, help="CSV destination (stdout).")
    refine.set_defaults(
        handler=_run_refine,
        usage_errors=(
            RunConfigParserService.CONFIGURATION_ERROR,
            RunRefinementStudyUseCase.INVALID_PROBE_ERROR,
        ),
    )


def _run_field_check(*, args: argparse.Namespace, container: Container) -> ExitCode:
    """Print the energy breakdown and residuals of ``--field`` under ``--config``.

    Returns:
        Success when the field is feasible with a strictly physical interior.
    """
    if args.field is None or args.config is None:
        _write_error("verify needs --field and --config, or one of the probes")
        return ExitCode.USAGE

    config = load_run_config(args=args, container=container)
    field = container.resolve(FieldCsvService).load_csv(
        path=args.field,
        expected_grid=config.grid,
    )
    verification = container.resolve(VerifyFieldUseCase).execute(
        field=field,
        bulk=config.bulk,
        constants=config.elastic,
        inset=args.inset,
    )
    _print_verification(verification)
    if args.residual_out is not None and verification.el_residual is not None:
        _write_residuals(field=field, verification=verification, path=args.residual_out)

    _write_verdict(
        check="field",
        passed=verification.passed,
        details=f"interior margin {verification.interior_margin:.6g}",
    )
    return _status(passed=verification.passed)


def _run_margins(*, args: argparse.Namespace, container: Container) -> ExitCode:
    """Tabulate the margin profile of ``--field``.

    Returns:
        Success when margins are positive and non-decreasing with the inset.
    """
    field = container.resolve(FieldCsvService).load_csv(path=args.field)
    profile = container.resolve(ProfileMarginsUseCase).execute(field=field, insets=args.insets)
    _write_table(
        header=("inset", "margin"),
        rows=zip(profile.insets, profile.margins, strict=True),
        path=args.out,
    )
    _write_verdict(
        check="margins",
        passed=profile.passed,
        details=f"monotone={profile.is_monotone} positive={profile.is_positive}",
    )
    return _status(passed=profile.passed)


def _run_convexity(*, args: argparse.Namespace, container: Container) -> ExitCode:
    """Midpoint-test ``f_ms`` and its semiconvex shift, then print the verdict.

    Returns:
        Success when every violation is within tolerance.
    """
    report = container.resolve(ProbeConvexityUseCase).execute(
        samples=args.samples,
        margin_floor=args.margin_floor,
        seed=args.seed,
        bulk=_bulk_params(args),
    )
    _write_table(
        header=("check", "worst_violation"),
        rows=[
            ("midpoint", report.worst_midpoint),
            ("semiconvex", report.worst_semiconvex),
            ("divided_difference", report.worst_divided_difference),
        ],
        path=args.out,
    )
    _write_verdict(
        check="convexity",
        passed=report.passed,
        details=f"worst violation {report.worst:.3e} over {report.samples} pairs",
    )
    return _status(passed=report.passed)


def _run_blowup(*, args: argparse.Namespace, container: Container) -> ExitCode:
    """Sample ``f_ms`` along the requested uniaxial ray and print the table.

    Returns:
        Success when the potential increases strictly and grows enough.
    """
    table = container.resolve(ScanBlowupUseCase).execute(
        path=args.path,
        s_values=args.s_values,
        bulk=_bulk_params(args),
        min_growth=args.min_growth,
    )
    _write_table(
        header=("s", "f_ms", "psi_b", "margin", "quadrature_order"),
        rows=(
            (sample.s, sample.f_ms, sample.psi_b, sample.margin, sample.quadrature_order)
            for sample in table.samples
        ),
        path=args.out,
    )
    _write_verdict(
        check="blowup",
        passed=table.passed,
        details=f"monotone={table.is_monotone} growth={table.growth:.6g}",
    )
    return _status(passed=table.passed)


def _run_refine(*, args: argparse.Namespace, container: Container) -> ExitCode:
    """Solve on each ``--sizes`` grid and print the convergence table.

    Returns:
        Success when the strong-form residual decreases and margin and energy are stable.
    """
    config = load_run_config(args=args, container=container)
    study = container.resolve(RunRefinementStudyUseCase).execute(config=config, sizes=args.sizes)
    _write_table(
        header=(
            "nodes",
            "energy",
            "el_residual_l2",
            "strong_residual_l2",
            "interior_margin",
            "iterations",
        ),
        rows=(
            (
                row.nodes,
                row.energy,
                row.el_residual_l2,
                row.strong_residual_l2,
                row.interior_margin,
                row.iterations,
            )
            for row in study.rows
        ),
        path=args.out,
    )
    _write_verdict(
        check="refine",
        passed=study.passed,
        details=(
            f"residual decreases={study.residual_decreases} "
            f"el residual decreases={study.el_residual_decreases} "
            f"margin stable={study.margin_stable} energy stable={study.energy_stable}"
        ),
    )
    return _status(passed=study.passed)


def _print_verification(verification: FieldVerification) -> None:
    breakdown = verification.breakdown
    labeled: list[tuple[str, object]] = [
        *((f"elastic_I{index}", term) for index, term in enumerate(breakdown.elastic_terms, 1)),
        ("elastic", breakdown.elastic),
        ("entropy", breakdown.entropy_term),
        ("quadratic", breakdown.quadratic_term),
        ("total", breakdown.total),
        ("feasible", breakdown.is_feasible),
    ]
    if breakdown.infeasible_cell is not None:
        labeled.append(("infeasible_cell", breakdown.infeasible_cell))

    for name, report in (
        ("el_residual", verification.el_residual),
        ("strong_residual", verification.strong_residual),
    ):
        if report is not None:
            labeled.extend(
                [
                    (f"{name}_l2", report.l2_norm),
                    (f"{name}_linf", report.linf_norm),
                    (f"{name}_nodes", report.nodes),
                ],
            )

    labeled.append(("interior_margin", verification.interior_margin))
    _write_labeled(labeled)


def _write_residuals(*, field: Field, verification: FieldVerification, path: Path) -> None:
    el_residual = verification.el_residual
    strong_residual = verification.strong_residual
    if el_residual is None or strong_residual is None:
        return

    x, y = field.node_coordinates()
    table = np.concatenate(
        [
            x[..., np.newaxis],
            y[..., np.newaxis],
            el_residual.residual,
            strong_residual.residual,
        ],
        axis=-1,
    ).transpose(1, 0, 2)
    _write_table(
        header=(
            "x",
            "y",
            *(f"el_r{index}" for index in range(1, 6)),
            *(f"strong_r{index}" for index in range(1, 6)),
        ),
        rows=table.reshape(-1, table.shape[-1]).tolist(),
        path=path,
    )


def _status(*, passed: bool) -> ExitCode:
    return ExitCode.SUCCESS if passed else ExitCode.FAILURE