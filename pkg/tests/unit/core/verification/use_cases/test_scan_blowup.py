from pytest_mock import MockerFixture

from singular_ldg.core.bulk.dtos.bulk_params import BulkParams
from singular_ldg.core.verification.constraints.blowup_path import BlowupPath
from singular_ldg.core.verification.entities.blowup_table import BlowupTable
from singular_ldg.core.verification.services.blowup_scan import BlowupScanService
from singular_ldg.core.verification.use_cases.scan_blowup import ScanBlowupUseCase


def test_scan_blowup_delegates_to_service(mocker: MockerFixture) -> None:
    expected = BlowupTable(path=BlowupPath.NEGATIVE, samples=(), min_growth=1.0)
    service = mocker.create_autospec(BlowupScanService, instance=True)
    service.blowup_scan.return_value = expected

    table = ScanBlowupUseCase(_blowup_scan_service=service).execute(
        path=BlowupPath.NEGATIVE,
        s_values=[-0.4, -0.49],
        bulk=BulkParams(),
        min_growth=1.0,
    )

    assert table is expected
    service.blowup_scan.assert_called_once_with(
        path=BlowupPath.NEGATIVE,
        s_values=[-0.4, -0.49],
        bulk=BulkParams(),
        min_growth=1.0,
    )
