from dataclasses import dataclass
from typing import ClassVar

from diwire import Injected

from singular_ldg.core.bulk.dtos.bulk_params import BulkParams
from singular_ldg.core.bulk.exceptions.near_boundary import NearBoundaryError
from singular_ldg.core.verification.constraints.blowup_path import BlowupPath
from singular_ldg.core.verification.entities.blowup_table import BlowupTable
from singular_ldg.core.verification.exceptions.invalid_probe import InvalidProbeError
from singular_ldg.core.verification.services.blowup_scan import BlowupScanService
from singular_ldg.foundation.use_case import BaseUseCase


@dataclass(kw_only=True)
class ScanBlowupUseCase(BaseUseCase):
    """Check that the potential diverges along a uniaxial ray."""

    NEAR_BOUNDARY_ERROR: ClassVar = NearBoundaryError  # noqa: WPS115
    INVALID_PROBE_ERROR: ClassVar = InvalidProbeError  # noqa: WPS115

    _blowup_scan_service: Injected[BlowupScanService]

    def execute(
        self,
        *,
        path: BlowupPath,
        s_values: list[float],
        bulk: BulkParams,
        min_growth: float,
    ) -> BlowupTable:
        """Evaluate ``f_ms`` at each order parameter on a uniaxial ray.

        Returns:
            The sampled potentials along the ray.
        """
        return self._blowup_scan_service.blowup_scan(
            path=path,
            s_values=s_values,
            bulk=bulk,
            min_growth=min_growth,
        )
