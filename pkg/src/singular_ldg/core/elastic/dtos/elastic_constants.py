from pydantic import ConfigDict, Field

from singular_ldg.foundation.dto import BaseDTO


class ElasticConstants(BaseDTO):
    """Weights ``L1..L5`` of the five elastic invariants."""

    model_config = ConfigDict(validate_by_name=True, validate_by_alias=True, allow_inf_nan=False)

    l1: float = Field(default=1.0, alias="L1")
    l2: float = Field(default=0.0, alias="L2")
    l3: float = Field(default=0.0, alias="L3")
    l4: float = Field(default=0.0, alias="L4")
    l5: float = Field(default=0.0, alias="L5")

    @property
    def weights(self) -> tuple[float, float, float, float, float]:
        """Constants in invariant order.

        Returns:
            ``(L1, L2, L3, L4, L5)``.
        """
        return (self.l1, self.l2, self.l3, self.l4, self.l5)

    @property
    def lprime1(self) -> float:
        """Effective ``L1`` after absorbing the cubic term over the physical set.

        Returns:
            ``L1 - L4/3`` when ``L4 >= 0``, otherwise ``L1 + 2 L4 / 3``.
        """
        if self.l4 >= 0:
            return self.l1 - self.l4 / 3.0

        return self.l1 + 2.0 * self.l4 / 3.0
