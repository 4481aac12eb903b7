import logging
from collections.abc import Iterator
from functools import partial
from pathlib import Path

import pytest
from diwire import Container

from singular_ldg.entrypoints.cli import dispatch as cli_dispatch
from singular_ldg.ioc.container import get_container
from tests.integration.factories import TestCliFactory, TestFieldFileFactory, TestRunConfigFactory


@pytest.fixture(autouse=True)
def cli_without_logging_bootstrap(monkeypatch: pytest.MonkeyPatch) -> Iterator[None]:
    monkeypatch.setattr(
        cli_dispatch,
        "get_container",
        partial(get_container, configure_logging=False, configure_logfire=False),
    )
    root_logger = logging.getLogger()
    level = root_logger.level

    yield

    root_logger.setLevel(level)


@pytest.fixture(scope="function")
def container() -> Container:
    return get_container(configure_logging=False, configure_logfire=False)


@pytest.fixture(scope="function")
def cli_factory(capsys: pytest.CaptureFixture[str]) -> TestCliFactory:
    return TestCliFactory(capsys=capsys)


@pytest.fixture(scope="function")
def run_config_factory(tmp_path: Path) -> TestRunConfigFactory:
    return TestRunConfigFactory(directory=tmp_path)


@pytest.fixture(scope="function")
def field_file_factory(container: Container, tmp_path: Path) -> TestFieldFileFactory:
    return TestFieldFileFactory(container=container, directory=tmp_path)
