from dataclasses import dataclass

from singular_ldg.core.verification.constraints.thresholds import CONVEXITY_TOLERANCE


@dataclass(frozen=True, kw_only=True, slots=True)
class ConvexityReport:
    """Worst convexity violations found by random midpoint tests and a uniaxial ladder.

    A midpoint violation is ``f(mid) - (f(a) + f(b)) / 2``; the semiconvex column
    tests ``psi_b + kappa |Q|^2``. The divided-difference violation is the largest
    decrease between consecutive slopes of ``f_ms`` along the uniaxial ladder.
    Negative values mean no violation.
    """

    samples: int
    margin_floor: float
    worst_midpoint: float
    worst_semiconvex: float
    worst_divided_difference: float

    @property
    def worst(self) -> float:
        """Largest of the three violations."""
        return max(self.worst_midpoint, self.worst_semiconvex, self.worst_divided_difference)

    @property
    def passed(self) -> bool:
        """Whether every violation is within the convexity tolerance."""
        return self.worst <= CONVEXITY_TOLERANCE
