from dataclasses import dataclass


@dataclass(frozen=True, kw_only=True, slots=True)
class RefinementRow:
    """Diagnostics of the converged solution on one ``nodes x nodes`` grid.

    ``el_residual_l2`` is the mass-normalized discrete Euler-Lagrange residual,
    ``strong_residual_l2`` the strong-form equilibrium residual and
    ``interior_margin`` the smallest nodal margin, all over the quarter inset.
    """

    nodes: int
    energy: float
    el_residual_l2: float
    strong_residual_l2: float
    interior_margin: float
    iterations: int
