import logging
import numpy as np
import pytest
from pytest_mock import MockerFixture

from singular_ldg.core.bulk.dtos.bulk_params import BulkParams
from singular_ldg.core.elastic.dtos.elastic_constants import ElasticConstants
from singular_ldg.core.energy.entities.energy_breakdown import EnergyBreakdown
from singular_ldg.core.energy.services.energy_assembler import EnergyAssemblerService
from singular_ldg.core.energy.services.equilibrium_residual import EquilibriumResidualService
from singular_ldg.core.energy.use_cases.verify_field import VerifyFieldUseCase
from singular_ldg.core.field.entities.field import Field
from singular_ldg.core.qtensor.services.q_tensor_algebra import QTensorAlgebraService


def test_verify_field_reports_energy_residuals_and_margin(
    algebra: QTensorAlgebraService,
    assembler: EnergyAssemblerService,
    residual_service: EquilibriumResidualService,
) -> None:
    use_case = VerifyFieldUseCase(
        _algebra=algebra,
        _assembler=assembler,
        _residual_service=residual_service,
    )
    field = Field(width=1.0, height=1.0, values=np.zeros((5, 5, 5)))

    verification = use_case.execute(field=field, bulk=BulkParams(), constants=ElasticConstants())

    assert verification.passed
    assert verification.interior_margin == pytest.approx(1.0 / 3.0, rel=1e-14)
    assert verification.el_residual is not None
    assert verification.el_residual.linf_norm == pytest.approx(0.0, abs=1e-10)
    assert verification.strong_residual is not None
    assert verification.strong_residual.nodes == 9


def test_verify_field_skips_residuals_of_infeasible_field(
    algebra: QTensorAlgebraService,
    caplog: pytest.LogCaptureFixture,
    mocker: MockerFixture,
) -> None:
    assembler = mocker.create_autospec(EnergyAssemblerService, instance=True)
    assembler.total_energy.return_value = EnergyBreakdown(
        elastic_terms=(0.0, 0.0, 0.0, 0.0, 0.0),
        entropy_term=np.inf,
        quadratic_term=0.0,
        total=np.inf,
        infeasible_cell=(1, 1),
    )
    residual_service = mocker.create_autospec(EquilibriumResidualService, instance=True)
    use_case = VerifyFieldUseCase(
        _algebra=algebra,
        _assembler=assembler,
        _residual_service=residual_service,
    )
    field = Field(width=1.0, height=1.0, values=np.zeros((4, 4, 5)))

    with caplog.at_level(logging.WARNING):
        verification = use_case.execute(
            field=field,
            bulk=BulkParams(),
            constants=ElasticConstants(),
        )

    assert not verification.passed
    assert verification.el_residual is None
    assert verification.strong_residual is None
    residual_service.el_residual.assert_not_called()
    assert "infeasible at cell (1, 1)" in caplog.text
