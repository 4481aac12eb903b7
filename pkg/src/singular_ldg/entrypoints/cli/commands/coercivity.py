import argparse

from diwire import Container

from singular_ldg.core.elastic.dtos.elastic_constants import ElasticConstants
from singular_ldg.core.elastic.use_cases.audit_coercivity import AuditCoercivityUseCase
from singular_ldg.entrypoints.cli.exit_codes import ExitCode
from singular_ldg.entrypoints.cli.output import _write_labeled, _write_verdict

_DEFAULT_SAMPLES = 10_000
_CONSTANT_COUNT = 5


def register(parser: argparse.ArgumentParser) -> None:
    """Add the elastic constants, ``--samples`` and ``--seed``."""
    defaults = ElasticConstants()
    for index, default in enumerate(defaults.weights, 1):
        parser.add_argument(f"--L{index}", dest=f"l{index}", type=float, default=default)

    parser.add_argument(
        "--samples",
        type=int,
        default=_DEFAULT_SAMPLES,
        help="Random states for the empirical lower bounds (0 skips sampling).",
    )
    parser.add_argument("--seed", type=int, default=0)
    parser.set_defaults(
        handler=_run_coercivity,
        usage_errors=(AuditCoercivityUseCase.INVALID_SAMPLE_COUNT_ERROR,),
    )


def _run_coercivity(*, args: argparse.Namespace, container: Container) -> ExitCode:
    """Print the coercivity inequalities and the sampled lower bounds.

    Returns:
        Success when all three inequalities hold.
    """
    constants = ElasticConstants.model_validate(
        {f"l{index}": getattr(args, f"l{index}") for index in range(1, _CONSTANT_COUNT + 1)},
    )
    report = container.resolve(AuditCoercivityUseCase).execute(
        constants=constants,
        samples=args.samples,
        seed=args.seed,
    )
    labeled: list[tuple[str, object]] = [
        ("lprime1", report.lprime1),
        *(
            (f"inequality_{index}", value)
            for index, value in enumerate(report.inequality_values, 1)
        ),
    ]
    if report.empirical_c0 is not None:
        labeled.append(("empirical_c0", report.empirical_c0))
    if report.ellipticity_c0 is not None:
        labeled.append(("ellipticity_c0", report.ellipticity_c0))

    _write_labeled(labeled)
    _write_verdict(
        check="coercivity",
        passed=report.satisfied,
        details=f"{report.samples} samples",
    )
    return ExitCode.SUCCESS if report.satisfied else ExitCode.FAILURE
