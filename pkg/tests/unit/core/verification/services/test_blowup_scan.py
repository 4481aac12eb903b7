import numpy as np
import pytest

from singular_ldg.core.bulk.constraints.quadrature import LOG_SPHERE_AREA
from singular_ldg.core.bulk.dtos.bulk_params import BulkParams
from singular_ldg.core.verification.constraints.blowup_path import BlowupPath
from singular_ldg.core.verification.services.blowup_scan import BlowupScanService


def test_blowup_scan_starts_at_isotropic_value(blowup_scan_service: BlowupScanService) -> None:
    table = blowup_scan_service.blowup_scan(
        path=BlowupPath.POSITIVE,
        s_values=[0.0, 0.5],
        bulk=BulkParams(),
    )

    assert table.samples[0].f_ms == pytest.approx(-LOG_SPHERE_AREA, rel=1e-10)
    assert table.is_monotone


def test_blowup_scan_diverges_toward_perfect_alignment(
    blowup_scan_service: BlowupScanService,
) -> None:
    table = blowup_scan_service.blowup_scan(
        path=BlowupPath.POSITIVE,
        s_values=[0.9, 0.99, 0.999],
        bulk=BulkParams(),
    )

    assert table.is_monotone
    assert table.growth > 1.0
    assert table.passed
    assert [sample.s for sample in table.samples] == [0.9, 0.99, 0.999]


def test_blowup_scan_diverges_toward_planar_alignment(
    blowup_scan_service: BlowupScanService,
) -> None:
    table = blowup_scan_service.blowup_scan(
        path=BlowupPath.NEGATIVE,
        s_values=[-0.4, -0.49, -0.499],
        bulk=BulkParams(),
    )

    values = [sample.f_ms for sample in table.samples]
    assert table.is_monotone
    assert np.all(np.diff(values) > 0)


def test_blowup_table_fails_when_growth_is_below_threshold(
    blowup_scan_service: BlowupScanService,
) -> None:
    table = blowup_scan_service.blowup_scan(
        path=BlowupPath.POSITIVE,
        s_values=[0.1, 0.2],
        bulk=BulkParams(),
        min_growth=10.0,
    )

    assert table.is_monotone
    assert not table.passed


def test_blowup_scan_propagates_near_boundary_error(
    blowup_scan_service: BlowupScanService,
) -> None:
    with pytest.raises(BlowupScanService.NEAR_BOUNDARY_ERROR):
        blowup_scan_service.blowup_scan(
            path=BlowupPath.POSITIVE,
            s_values=[0.9, 1.0],
            bulk=BulkParams(),
        )


@pytest.mark.parametrize(
    ("path", "s_values"),
    [
        (BlowupPath.POSITIVE, [0.9]),
        (BlowupPath.POSITIVE, [0.99, 0.9]),
        (BlowupPath.POSITIVE, [-0.1, 0.5]),
        (BlowupPath.NEGATIVE, [-0.4, -0.3]),
        (BlowupPath.NEGATIVE, [0.2, -0.3]),
    ],
)
def test_blowup_scan_rejects_values_not_ordered_toward_boundary(
    blowup_scan_service: BlowupScanService,
    path: BlowupPath,
    s_values: list[float],
) -> None:
    with pytest.raises(BlowupScanService.INVALID_PROBE_ERROR):
        blowup_scan_service.blowup_scan(path=path, s_values=s_values, bulk=BulkParams())
