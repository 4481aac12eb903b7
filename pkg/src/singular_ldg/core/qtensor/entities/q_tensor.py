from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from singular_ldg.core.qtensor.constraints.physical_set import S0_DIMENSION
from singular_ldg.core.qtensor.exceptions.invalid_components import InvalidComponentsError
from singular_ldg.core.shared.arrays import FloatArray


@dataclass(frozen=True, kw_only=True, slots=True, eq=False)
class QTensor:
    """Symmetric traceless 3x3 tensor stored as its five orthonormal-basis coordinates."""

    components: FloatArray

    def __post_init__(self) -> None:
        components = np.array(self.components, dtype=np.float64)
        if components.shape != (S0_DIMENSION,):
            raise InvalidComponentsError(shape=components.shape)

        components.setflags(write=False)
        object.__setattr__(self, "components", components)  # noqa: PLC2801

    @classmethod
    def of(cls, values: npt.ArrayLike) -> "QTensor":
        """Build a tensor from any five-element array-like.

        Returns:
            The tensor with a private read-only copy of ``values``.
        """
        return cls(components=np.asarray(values, dtype=np.float64))

    @classmethod
    def zero(cls) -> "QTensor":
        """Isotropic state, ``Q = 0``.

        Returns:
            The zero tensor.
        """
        return cls(components=np.zeros(S0_DIMENSION))
