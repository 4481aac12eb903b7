from dataclasses import dataclass

from singular_ldg.core.verification.constraints.thresholds import (
    REFINEMENT_ENERGY_DRIFT,
    REFINEMENT_MARGIN_RATIO,
)
from singular_ldg.core.verification.entities.refinement_row import RefinementRow


@dataclass(frozen=True, kw_only=True, slots=True)
class RefinementStudy:
    """Refinement rows ordered by increasing grid size."""

    rows: tuple[RefinementRow, ...]

    def _pairs(self) -> list[tuple[RefinementRow, RefinementRow]]:
        return list(zip(self.rows, self.rows[1:], strict=False))

    @property
    def residual_decreases(self) -> bool:
        """Whether the strong-form residual drops at every refinement."""
        return all(
            fine.strong_residual_l2 < coarse.strong_residual_l2 for coarse, fine in self._pairs()
        )

    @property
    def el_residual_decreases(self) -> bool:
        """Whether the mass-normalized Euler-Lagrange residual drops at every refinement.

        Reported alongside the verdict; it does not gate :attr:`passed`.
        """
        return all(fine.el_residual_l2 < coarse.el_residual_l2 for coarse, fine in self._pairs())

    @property
    def margin_stable(self) -> bool:
        """Whether the interior margin keeps at least half its coarse value at every refinement."""
        return all(
            fine.interior_margin >= REFINEMENT_MARGIN_RATIO * coarse.interior_margin
            for coarse, fine in self._pairs()
        )

    @property
    def energy_stable(self) -> bool:
        """Whether the energy decreases or drifts by at most two percent at every refinement."""
        return all(
            fine.energy <= coarse.energy
            or abs(fine.energy - coarse.energy) <= REFINEMENT_ENERGY_DRIFT * abs(coarse.energy)
            for coarse, fine in self._pairs()
        )

    @property
    def passed(self) -> bool:
        """Whether the strong-form residual, margin and energy checks all hold."""
        return self.residual_decreases and self.margin_stable and self.energy_stable
