import logging
from dataclasses import dataclass
from typing import ClassVar

from diwire import Injected

from singular_ldg.core.field.entities.field import Field
from singular_ldg.core.field.exceptions.empty_inset import EmptyInsetError
from singular_ldg.core.qtensor.services.q_tensor_algebra import QTensorAlgebraService
from singular_ldg.core.verification.entities.margin_profile import MarginProfile
from singular_ldg.core.verification.exceptions.invalid_probe import InvalidProbeError
from singular_ldg.foundation.service import BaseService

logger = logging.getLogger(__name__)


@dataclass(kw_only=True)
class MarginProfileService(BaseService):
    """Smallest physicality margin over nested interior regions of a field."""

    EMPTY_INSET_ERROR: ClassVar = EmptyInsetError  # noqa: WPS115
    INVALID_PROBE_ERROR: ClassVar = InvalidProbeError  # noqa: WPS115

    _algebra: Injected[QTensorAlgebraService]

    def margin_profile(self, *, field: Field, insets: list[float]) -> MarginProfile:
        """Minimum nodal margin over nodes at least each inset away from the boundary.

        Inset ``0`` includes the boundary ring.

        Returns:
            One margin per inset, in the given order.
        """
        if not insets:
            raise self.INVALID_PROBE_ERROR(reason="at least one inset is required")
        if min(insets) < 0:
            raise self.INVALID_PROBE_ERROR(reason="insets must be non-negative")

        margins = self._algebra.margins(values=field.values)
        profile: list[float] = []
        for inset in insets:
            mask = field.inset_mask(inset)
            if not mask.any():
                raise self.EMPTY_INSET_ERROR(inset=inset)

            profile.append(float(margins[mask].min()))

        logger.debug("Margin profile over %d insets: %s", len(insets), profile)
        return MarginProfile(insets=tuple(insets), margins=tuple(profile))
