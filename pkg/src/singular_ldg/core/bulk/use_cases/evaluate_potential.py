import logging
from dataclasses import dataclass
from typing import ClassVar

from diwire import Injected

from singular_ldg.core.bulk.dtos.bulk_params import BulkParams
from singular_ldg.core.bulk.entities.potential_sample import PotentialSample
from singular_ldg.core.bulk.exceptions.moment_inversion import MomentInversionError
from singular_ldg.core.bulk.exceptions.near_boundary import NearBoundaryError
from singular_ldg.core.bulk.services.uniaxial_profile import UniaxialProfileService
from singular_ldg.foundation.use_case import BaseUseCase

logger = logging.getLogger(__name__)


@dataclass(kw_only=True)
class EvaluatePotentialUseCase(BaseUseCase):
    """Evaluate the bulk potential at one uniaxial order parameter."""

    NEAR_BOUNDARY_ERROR: ClassVar = NearBoundaryError  # noqa: WPS115
    MOMENT_INVERSION_ERROR: ClassVar = MomentInversionError  # noqa: WPS115

    _profile_service: Injected[UniaxialProfileService]

    def execute(self, *, s: float, params: BulkParams) -> PotentialSample:
        """Evaluate ``f_ms``, ``psi_b``, the margin and the multipliers at ``s``.

        Returns:
            The potential sample.
        """
        sample = self._profile_service.sample(s=s, params=params)
        logger.debug(
            "Evaluated potential at s=%g with quadrature order %d",
            s,
            sample.quadrature_order,
        )
        return sample
