from dataclasses import dataclass


@dataclass(frozen=True, kw_only=True, slots=True)
class PhysicalityMargin:
    """Signed eigenvalue gap to the boundary of the physical set."""

    value: float

    @property
    def is_physical(self) -> bool:
        """Report strict membership in the physical set.

        Returns:
            ``True`` when every eigenvalue lies strictly inside the window.
        """
        return self.value > 0
