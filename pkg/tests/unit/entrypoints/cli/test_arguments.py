import argparse

import pytest

from singular_ldg.core.bulk.constraints.quadrature import DEFAULT_QUADRATURE_ORDER
from singular_ldg.entrypoints.cli.arguments import (
    _add_bulk_arguments,
    _bulk_params,
    _positive_int,
)


def test_positive_int_accepts_positive_values() -> None:
    assert _positive_int("17") == 17


@pytest.mark.parametrize("text", ["0", "-3"])
def test_positive_int_rejects_non_positive_values(text: str) -> None:
    with pytest.raises(argparse.ArgumentTypeError):
        _positive_int(text)


def test_bulk_arguments_default_to_unit_temperature() -> None:
    parser = argparse.ArgumentParser()
    _add_bulk_arguments(parser)

    params = _bulk_params(parser.parse_args([]))

    assert params.temperature == 1.0
    assert params.kappa == 0.0
    assert params.quad_order == DEFAULT_QUADRATURE_ORDER


def test_bulk_arguments_are_parsed_into_bulk_params() -> None:
    parser = argparse.ArgumentParser()
    _add_bulk_arguments(parser)

    params = _bulk_params(parser.parse_args(["--T", "3.5", "--kappa", "2", "--quad-order", "48"]))

    assert params.temperature == 3.5
    assert params.kappa == 2.0
    assert params.quad_order == 48
