from dataclasses import dataclass

from singular_ldg.core.energy.entities.energy_breakdown import EnergyBreakdown
from singular_ldg.core.energy.entities.residual_report import ResidualReport


@dataclass(frozen=True, kw_only=True, slots=True, eq=False)
class FieldVerification:
    """Energy and equilibrium diagnostics of one stored field.

    Residuals are ``None`` when the field is infeasible, in which case the breakdown
    carries the ``+inf`` marker and the offending cell.
    """

    breakdown: EnergyBreakdown
    el_residual: ResidualReport | None
    strong_residual: ResidualReport | None
    interior_margin: float

    @property
    def passed(self) -> bool:
        """Whether every gauss point is feasible and every interior node strictly physical."""
        return self.breakdown.is_feasible and self.interior_margin > 0
