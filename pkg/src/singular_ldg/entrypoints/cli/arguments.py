import argparse

from singular_ldg.core.bulk.constraints.quadrature import DEFAULT_QUADRATURE_ORDER
from singular_ldg.core.bulk.dtos.bulk_params import BulkParams


def _add_bulk_arguments(parser: argparse.ArgumentParser) -> None:
    """Add ``--T``, ``--kappa`` and ``--quad-order``."""
    parser.add_argument("--T", dest="temperature", type=float, default=1.0, help="Temperature.")
    parser.add_argument("--kappa", type=float, default=0.0, help="Quadratic coupling.")
    parser.add_argument(
        "--quad-order",
        type=int,
        default=DEFAULT_QUADRATURE_ORDER,
        help="Base sphere quadrature order.",
    )


def _bulk_params(args: argparse.Namespace) -> BulkParams:
    """Turn ``--T``, ``--kappa`` and ``--quad-order`` into validated ``BulkParams``.

    Returns:
        The bulk parameters.
    """
    return BulkParams(T=args.temperature, kappa=args.kappa, quad_order=args.quad_order)


def _positive_int(text: str) -> int:
    """Parse a strictly positive integer argument.

    Returns:
        The parsed value.
    """
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")

    return value
