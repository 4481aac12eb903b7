import logging
import pytest
from pytest_mock import MockerFixture

from singular_ldg.core.elastic.dtos.elastic_constants import ElasticConstants
from singular_ldg.core.elastic.entities.coercivity_report import CoercivityReport
from singular_ldg.core.elastic.services.coercivity_audit import CoercivityAuditService
from singular_ldg.core.elastic.use_cases.audit_coercivity import AuditCoercivityUseCase


def test_audit_coercivity_delegates_to_service(
    coercivity_audit: CoercivityAuditService,
) -> None:
    use_case = AuditCoercivityUseCase(_coercivity_audit_service=coercivity_audit)

    report = use_case.execute(constants=ElasticConstants(), samples=100, seed=0)

    assert report.satisfied
    assert report.samples == 100


def test_audit_coercivity_warns_on_violation(
    caplog: pytest.LogCaptureFixture,
    mocker: MockerFixture,
) -> None:
    service = mocker.create_autospec(CoercivityAuditService, instance=True)
    service.audit.return_value = CoercivityReport(
        lprime1=1.0,
        inequality_values=(1.0, 2.5, -0.5),
        satisfied=False,
        samples=0,
    )
    use_case = AuditCoercivityUseCase(_coercivity_audit_service=service)

    with caplog.at_level(logging.WARNING):
        report = use_case.execute(constants=ElasticConstants(l3=-1.5), samples=0, seed=0)

    assert not report.satisfied
    assert "violate the coercivity conditions" in caplog.text
