from typing import Annotated

from annotated_types import Ge, Gt
from pydantic import ConfigDict, Field

from singular_ldg.core.bulk.constraints.quadrature import (
    DEFAULT_QUADRATURE_ORDER,
    MIN_QUADRATURE_ORDER,
)
from singular_ldg.foundation.dto import BaseDTO


class BulkParams(BaseDTO):
    """Temperature, quadratic coupling and quadrature order of the bulk potential."""

    model_config = ConfigDict(validate_by_name=True, validate_by_alias=True, allow_inf_nan=False)

    temperature: Annotated[float, Gt(0)] = Field(default=1.0, alias="T")
    kappa: Annotated[float, Ge(0)] = 0.0
    quad_order: Annotated[int, Ge(MIN_QUADRATURE_ORDER)] = DEFAULT_QUADRATURE_ORDER

    @property
    def semiconvexity_constant(self) -> float:
        """Constant ``M`` such that ``psi_b + (M/2)|Q|^2`` is convex.

        Returns:
            ``2 * kappa``.
        """
        return 2.0 * self.kappa
