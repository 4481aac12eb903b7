from dataclasses import dataclass


@dataclass(frozen=True, kw_only=True, slots=True)
class MarginProfile:
    """Smallest nodal margin over nodes at least ``insets[i]`` from the boundary."""

    insets: tuple[float, ...]
    margins: tuple[float, ...]

    @property
    def is_monotone(self) -> bool:
        """Whether margins never decrease as the inset grows."""
        ordered = sorted(zip(self.insets, self.margins, strict=True))
        return all(
            earlier[1] <= later[1] for earlier, later in zip(ordered, ordered[1:], strict=False)
        )

    @property
    def is_positive(self) -> bool:
        """Whether every region stays strictly inside the physical set."""
        return all(margin > 0 for margin in self.margins)

    @property
    def passed(self) -> bool:
        """Whether the profile is monotone and strictly positive."""
        return self.is_monotone and self.is_positive
