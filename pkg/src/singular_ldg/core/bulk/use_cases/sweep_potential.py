import logging
from dataclasses import dataclass
from typing import ClassVar

import numpy as np
from diwire import Injected

from singular_ldg.core.bulk.dtos.bulk_params import BulkParams
from singular_ldg.core.bulk.entities.potential_sample import PotentialSample
from singular_ldg.core.bulk.exceptions.moment_inversion import MomentInversionError
from singular_ldg.core.bulk.exceptions.near_boundary import NearBoundaryError
from singular_ldg.core.bulk.services.uniaxial_profile import UniaxialProfileService
from singular_ldg.foundation.use_case import BaseUseCase

logger = logging.getLogger(__name__)


@dataclass(kw_only=True)
class SweepPotentialUseCase(BaseUseCase):
    """Tabulate the bulk potential along evenly spaced uniaxial order parameters."""

    NEAR_BOUNDARY_ERROR: ClassVar = NearBoundaryError  # noqa: WPS115
    MOMENT_INVERSION_ERROR: ClassVar = MomentInversionError  # noqa: WPS115

    _profile_service: Injected[UniaxialProfileService]

    def execute(
        self,
        *,
        s_min: float,
        s_max: float,
        steps: int,
        params: BulkParams,
    ) -> list[PotentialSample]:
        """Sample ``steps`` points from ``s_min`` to ``s_max`` inclusive.

        Points outside the evaluable region are reported with infinite potentials.

        Returns:
            One sample per point, in order.
        """
        samples: list[PotentialSample] = []
        for s in np.linspace(s_min, s_max, steps):
            try:
                samples.append(self._profile_service.sample(s=float(s), params=params))
            except self.NEAR_BOUNDARY_ERROR:
                samples.append(self._profile_service.infeasible(s=float(s)))

        logger.info("Sampled the potential at %d points on [%g, %g]", steps, s_min, s_max)
        return samples
