from dataclasses import dataclass
from typing import ClassVar

from diwire import Injected

from singular_ldg.core.field.entities.field import Field
from singular_ldg.core.field.exceptions.empty_inset import EmptyInsetError
from singular_ldg.core.verification.entities.margin_profile import MarginProfile
from singular_ldg.core.verification.exceptions.invalid_probe import InvalidProbeError
from singular_ldg.core.verification.services.margin_profile import MarginProfileService
from singular_ldg.foundation.use_case import BaseUseCase


@dataclass(kw_only=True)
class ProfileMarginsUseCase(BaseUseCase):
    """Tabulate how far a field stays from the physical boundary away from the walls."""

    EMPTY_INSET_ERROR: ClassVar = EmptyInsetError  # noqa: WPS115
    INVALID_PROBE_ERROR: ClassVar = InvalidProbeError  # noqa: WPS115

    _margin_profile_service: Injected[MarginProfileService]

    def execute(self, *, field: Field, insets: list[float]) -> MarginProfile:
        """Take the smallest physicality margin inside each inset of ``field``.

        Returns:
            One minimum margin per inset.
        """
        return self._margin_profile_service.margin_profile(field=field, insets=insets)
