import argparse
from pathlib import Path

from diwire import Container

from singular_ldg.core.bulk.use_cases.evaluate_potential import EvaluatePotentialUseCase
from singular_ldg.core.bulk.use_cases.sweep_potential import SweepPotentialUseCase
from singular_ldg.entrypoints.cli.arguments import (
    _add_bulk_arguments,
    _bulk_params,
    _positive_int,
)
from singular_ldg.entrypoints.cli.exit_codes import ExitCode
from singular_ldg.entrypoints.cli.output import _write_labeled, _write_table

_SWEEP_HEADER = ("s", "f_ms", "psi_b", "margin")


def register(parser: argparse.ArgumentParser) -> None:
    """Add the ``eval`` and ``sweep`` actions to the ``potential`` parser."""
    actions = parser.add_subparsers(dest="potential_command", required=True, metavar="ACTION")

    evaluate = actions.add_parser("eval", help="Evaluate at one uniaxial order parameter.")
    evaluate.add_argument("--s", type=float, required=True, help="Scalar order parameter.")
    _add_bulk_arguments(evaluate)
    evaluate.set_defaults(
        handler=_run_eval,
        usage_errors=(EvaluatePotentialUseCase.NEAR_BOUNDARY_ERROR,),
    )

    sweep = actions.add_parser("sweep", help="Tabulate along evenly spaced order parameters.")
    sweep.add_argument("--s-min", type=float, required=True)
    sweep.add_argument("--s-max", type=float, required=True)
    sweep.add_argument("--steps", type=_positive_int, required=True)
    sweep.add_argument("--out", type=Path, default=None, help="CSV destination (stdout).")
    _add_bulk_arguments(sweep)
    sweep.set_defaults(handler=_run_sweep, usage_errors=())


def _run_eval(*, args: argparse.Namespace, container: Container) -> ExitCode:
    """Print the potential, margin and multipliers at ``--s``.

    Returns:
        Success.
    """
    use_case = container.resolve(EvaluatePotentialUseCase)
    sample = use_case.execute(s=args.s, params=_bulk_params(args))
    _write_labeled(
        [
            ("s", sample.s),
            ("f_ms", sample.f_ms),
            ("psi_b", sample.psi_b),
            ("margin", sample.margin),
            *((f"lambda_{index}", float(value)) for index, value in enumerate(sample.lambdas, 1)),
            ("quadrature_order", sample.quadrature_order),
        ],
    )
    return ExitCode.SUCCESS


def _run_sweep(*, args: argparse.Namespace, container: Container) -> ExitCode:
    """Write the ``s,f_ms,psi_b,margin`` table.

    Returns:
        Success.
    """
    use_case = container.resolve(SweepPotentialUseCase)
    samples = use_case.execute(
        s_min=args.s_min,
        s_max=args.s_max,
        steps=args.steps,
        params=_bulk_params(args),
    )
    _write_table(
        header=_SWEEP_HEADER,
        rows=([sample.s, sample.f_ms, sample.psi_b, sample.margin] for sample in samples),
        path=args.out,
    )
    return ExitCode.SUCCESS
