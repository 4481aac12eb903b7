from dataclasses import dataclass


@dataclass(frozen=True, kw_only=True, slots=True)
class EnergyBreakdown:
    """Per-term decomposition of the discrete energy.

    ``elastic_terms[i]`` integrates ``L_{i+1} I_{i+1}``, ``entropy_term`` integrates
    ``T f_ms`` and ``quadratic_term`` integrates ``-kappa |Q|^2``. When a gauss point
    leaves the evaluable region the entropy term and the total are ``+inf`` and
    ``infeasible_cell`` names the first offending cell.
    """

    elastic_terms: tuple[float, float, float, float, float]
    entropy_term: float
    quadratic_term: float
    total: float
    infeasible_cell: tuple[int, int] | None = None

    @property
    def elastic(self) -> float:
        """Integrated elastic density."""
        return sum(self.elastic_terms)

    @property
    def is_feasible(self) -> bool:
        """Whether every gauss point was evaluable."""
        return self.infeasible_cell is None
