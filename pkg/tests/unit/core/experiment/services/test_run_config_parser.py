import json
from pathlib import Path

import pytest

from singular_ldg.core.experiment.services.run_config_parser import RunConfigParserService
from singular_ldg.core.field.constraints.boundary_kind import BoundaryKind
from singular_ldg.core.field.constraints.interior_init import InteriorInit

_MINIMAL = {"grid": {"nx": 17, "ny": 9}}


@pytest.fixture()
def parser() -> RunConfigParserService:
    return RunConfigParserService()


def _document(**sections: object) -> str:
    return json.dumps({**_MINIMAL, **sections})


def test_parse_document_fills_documented_defaults(parser: RunConfigParserService) -> None:
    config = parser.parse_document(document=_document())

    assert (config.grid.nx, config.grid.ny) == (17, 9)
    assert (config.grid.width, config.grid.height) == (1.0, 1.0)
    assert config.boundary.kind is BoundaryKind.UNIFORM_UNIAXIAL
    assert config.bulk.temperature == 1.0
    assert config.bulk.quad_order == 32
    assert config.elastic.weights == (1.0, 0.0, 0.0, 0.0, 0.0)
    assert config.solver.max_iters == 5000
    assert config.interior_init is InteriorInit.BOUNDARY_BLEND
    assert config.output.field is None
    assert config.log_level is None


def test_parse_document_reads_every_section(parser: RunConfigParserService) -> None:
    config = parser.parse_document(
        document=_document(
            boundary={"kind": "winding-director", "s": 0.4, "k": 1.5, "theta0": 0.1},
            bulk={"T": 4.0, "kappa": 5.0, "quad_order": 24},
            elastic={"L1": 1.0, "L2": 0.1, "L3": 0.1, "L4": 0.1, "L5": 0.05},
            solver={
                "max_iters": 10,
                "grad_tol": 1e-7,
                "armijo_c": 1e-3,
                "step_init": 0.1,
                "seed": 4,
            },
            interior_init="seeded-random",
            output={"field": "out.csv", "trace": "trace.csv"},
            log_level="DEBUG",
        ),
    )

    assert config.boundary.k == 1.5
    assert config.bulk.temperature == 4.0
    assert config.elastic.l5 == 0.05
    assert config.solver.seed == 4
    assert config.interior_init is InteriorInit.SEEDED_RANDOM
    assert config.output.trace == Path("trace.csv")
    assert config.log_level == "DEBUG"


@pytest.mark.parametrize(
    ("sections", "key_path"),
    [
        ({"bulk": {"T": -1.0}}, "bulk.T"),
        ({"bulk": {"kappa": -0.5}}, "bulk.kappa"),
        ({"bulk": {"quad_order": 4}}, "bulk.quad_order"),
        ({"grid": {"nx": 2, "ny": 9}}, "grid.nx"),
        ({"solver": {"armijo_c": 1.5}}, "solver.armijo_c"),
        ({"boundary": {"kind": "spiral"}}, "boundary.kind"),
        ({"solver": {"max_iters": "many"}}, "solver.max_iters"),
    ],
)
def test_parse_document_names_offending_key(
    parser: RunConfigParserService,
    sections: dict[str, object],
    key_path: str,
) -> None:
    with pytest.raises(RunConfigParserService.CONFIGURATION_ERROR) as error:
        parser.parse_document(document=_document(**sections))

    assert error.value.key_path == key_path
    assert str(error.value).startswith(f"{key_path}: ")


def test_parse_document_suggests_closest_key(parser: RunConfigParserService) -> None:
    with pytest.raises(RunConfigParserService.CONFIGURATION_ERROR) as error:
        parser.parse_document(document=_document(elastc={"L1": 1.0}))

    assert error.value.key_path == "elastc"
    assert error.value.hint == "elastic"
    assert "did you mean 'elastic'" in str(error.value)


def test_parse_document_suggests_nested_alias(parser: RunConfigParserService) -> None:
    with pytest.raises(RunConfigParserService.CONFIGURATION_ERROR) as error:
        parser.parse_document(document=_document(elastic={"L11": 1.0}))

    assert error.value.key_path == "elastic.L11"
    assert error.value.hint == "L1"


def test_parse_document_reports_missing_grid(parser: RunConfigParserService) -> None:
    with pytest.raises(RunConfigParserService.CONFIGURATION_ERROR) as error:
        parser.parse_document(document=json.dumps({"bulk": {"T": 1.0}}))

    assert error.value.key_path == "grid"
    assert error.value.reason == "required key is missing"


def test_parse_document_rejects_malformed_json(parser: RunConfigParserService) -> None:
    with pytest.raises(RunConfigParserService.CONFIGURATION_ERROR) as error:
        parser.parse_document(document='{"grid": ')

    assert error.value.key_path == "<document>"


def test_parse_config_reads_file(parser: RunConfigParserService, tmp_path: Path) -> None:
    path = tmp_path / "run.json"
    path.write_text(_document(bulk={"T": 2.5}), encoding="utf-8")

    config = parser.parse_config(path=path)

    assert config.bulk.temperature == 2.5


def test_parse_config_reports_missing_file(
    parser: RunConfigParserService,
    tmp_path: Path,
) -> None:
    path = tmp_path / "absent.json"

    with pytest.raises(RunConfigParserService.CONFIGURATION_ERROR) as error:
        parser.parse_config(path=path)

    assert error.value.key_path == str(path)
