from dataclasses import dataclass


@dataclass(frozen=True, kw_only=True, slots=True)
class CoercivityReport:
    """Sufficient coercivity inequalities and sampled lower bounds of the quadratic form.

    ``empirical_c0`` is the smallest sampled value of ``sum_{i<=4} L_i I_i`` over unit
    gradients; ``ellipticity_c0`` is the smallest eigenvalue of that form over the
    sampled tensors. Both are ``None`` when no samples were drawn.
    """

    lprime1: float
    inequality_values: tuple[float, float, float]
    satisfied: bool
    samples: int
    empirical_c0: float | None = None
    ellipticity_c0: float | None = None
