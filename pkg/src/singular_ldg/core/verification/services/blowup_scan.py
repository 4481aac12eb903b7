import logging
from dataclasses import dataclass
from typing import ClassVar

from diwire import Injected

from singular_ldg.core.bulk.dtos.bulk_params import BulkParams
from singular_ldg.core.bulk.exceptions.near_boundary import NearBoundaryError
from singular_ldg.core.bulk.services.uniaxial_profile import UniaxialProfileService
from singular_ldg.core.verification.constraints.blowup_path import BlowupPath
from singular_ldg.core.verification.constraints.thresholds import (
    DEFAULT_MIN_GROWTH,
    MIN_BLOWUP_POINTS,
)
from singular_ldg.core.verification.entities.blowup_table import BlowupTable
from singular_ldg.core.verification.exceptions.invalid_probe import InvalidProbeError
from singular_ldg.foundation.service import BaseService

logger = logging.getLogger(__name__)


@dataclass(kw_only=True)
class BlowupScanService(BaseService):
    """Tabulate ``f_ms`` along a uniaxial ray approaching the physical boundary.

    The positive ray takes ``s >= 0`` in increasing order, the negative ray
    ``s <= 0`` in decreasing order.
    """

    NEAR_BOUNDARY_ERROR: ClassVar = NearBoundaryError  # noqa: WPS115
    INVALID_PROBE_ERROR: ClassVar = InvalidProbeError  # noqa: WPS115

    _profile_service: Injected[UniaxialProfileService]

    def blowup_scan(
        self,
        *,
        path: BlowupPath,
        s_values: list[float],
        bulk: BulkParams,
        min_growth: float = DEFAULT_MIN_GROWTH,
    ) -> BlowupTable:
        """Sample the potential at each ``s`` on ``path``.

        Returns:
            The samples with the growth threshold used for the verdict.
        """
        self._validate(path=path, s_values=s_values)
        samples = tuple(self._profile_service.sample(s=s, params=bulk) for s in s_values)
        table = BlowupTable(path=path, samples=samples, min_growth=min_growth)
        logger.info(
            "Blow-up scan along %s: f_ms %.6g -> %.6g over %d points (monotone=%s)",
            path,
            samples[0].f_ms,
            samples[-1].f_ms,
            len(samples),
            table.is_monotone,
        )
        return table

    def _validate(self, *, path: BlowupPath, s_values: list[float]) -> None:
        if len(s_values) < MIN_BLOWUP_POINTS:
            raise self.INVALID_PROBE_ERROR(reason="a scan needs at least two order parameters")

        pairs = list(zip(s_values, s_values[1:], strict=False))
        match path:
            case BlowupPath.POSITIVE:
                ordered = min(s_values) >= 0 and all(left < right for left, right in pairs)
            case BlowupPath.NEGATIVE:
                ordered = max(s_values) <= 0 and all(left > right for left, right in pairs)

        if not ordered:
            raise self.INVALID_PROBE_ERROR(
                reason=f"order parameters must move monotonically toward the boundary of {path}",
            )
