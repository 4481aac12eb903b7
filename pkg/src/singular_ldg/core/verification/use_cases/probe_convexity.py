from dataclasses import dataclass
from typing import ClassVar

from diwire import Injected

from singular_ldg.core.bulk.dtos.bulk_params import BulkParams
from singular_ldg.core.verification.entities.convexity_report import ConvexityReport
from singular_ldg.core.verification.exceptions.invalid_probe import InvalidProbeError
from singular_ldg.core.verification.services.convexity_probe import ConvexityProbeService
from singular_ldg.foundation.use_case import BaseUseCase


@dataclass(kw_only=True)
class ProbeConvexityUseCase(BaseUseCase):
    """Randomized convexity check of the entropy potential."""

    INVALID_PROBE_ERROR: ClassVar = InvalidProbeError  # noqa: WPS115

    _convexity_probe_service: Injected[ConvexityProbeService]

    def execute(
        self,
        *,
        samples: int,
        margin_floor: float,
        seed: int,
        bulk: BulkParams,
    ) -> ConvexityReport:
        """Midpoint-test ``f_ms`` and ``psi_b + kappa |Q|^2`` on random feasible pairs.

        Returns:
            The worst violations found.
        """
        return self._convexity_probe_service.convexity_probe(
            samples=samples,
            margin_floor=margin_floor,
            seed=seed,
            bulk=bulk,
        )
