from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from singular_ldg.core.field.constraints.grid import INSET_TOLERANCE, MIN_NODES_PER_AXIS
from singular_ldg.core.field.exceptions.invalid_field import InvalidFieldError
from singular_ldg.core.qtensor.constraints.physical_set import S0_DIMENSION
from singular_ldg.core.shared.arrays import BoolArray, FloatArray


@dataclass(frozen=True, kw_only=True, slots=True, eq=False)
class Field:
    """Tensor coordinates on a rectangular grid ``[0, width] x [0, height]``.

    ``values[i, j]`` holds the coordinates at ``(i * hx, j * hy)``. The outermost
    ring of nodes carries Dirichlet data.
    """

    width: float
    height: float
    values: FloatArray

    def __post_init__(self) -> None:
        values = np.array(self.values, dtype=np.float64)
        if values.ndim != 3 or values.shape[-1] != S0_DIMENSION:
            raise InvalidFieldError(
                reason=f"values must have shape (nx, ny, 5), got {values.shape}",
            )
        if min(values.shape[:2]) < MIN_NODES_PER_AXIS:
            raise InvalidFieldError(
                reason=f"need at least {MIN_NODES_PER_AXIS} nodes per axis, got {values.shape[:2]}",
            )
        if not (self.width > 0 and self.height > 0):
            raise InvalidFieldError(
                reason=f"extents must be positive, got {self.width} x {self.height}",
            )

        values.setflags(write=False)
        object.__setattr__(self, "values", values)  # noqa: PLC2801

    @property
    def nx(self) -> int:
        """Nodes along x."""
        return int(self.values.shape[0])

    @property
    def ny(self) -> int:
        """Nodes along y."""
        return int(self.values.shape[1])

    @property
    def hx(self) -> float:
        """Node spacing along x."""
        return self.width / (self.nx - 1)

    @property
    def hy(self) -> float:
        """Node spacing along y."""
        return self.height / (self.ny - 1)

    @property
    def area(self) -> float:
        """Area of the rectangle."""
        return self.width * self.height

    @property
    def boundary_mask(self) -> BoolArray:
        """Nodes on the outermost ring.

        Returns:
            A boolean ``(nx, ny)`` array.
        """
        mask = np.ones((self.nx, self.ny), dtype=bool)
        mask[1:-1, 1:-1] = False
        return mask

    @property
    def interior_mask(self) -> BoolArray:
        """Nodes the solver may move.

        Returns:
            The complement of :attr:`boundary_mask`.
        """
        return ~self.boundary_mask

    def node_coordinates(self) -> tuple[FloatArray, FloatArray]:
        """Physical coordinates of every node.

        Returns:
            ``x`` and ``y`` arrays of shape ``(nx, ny)``.
        """
        return np.meshgrid(
            np.linspace(0.0, self.width, self.nx),
            np.linspace(0.0, self.height, self.ny),
            indexing="ij",
        )

    def boundary_distance(self) -> FloatArray:
        """Distance of every node to the domain boundary.

        Returns:
            Distances of shape ``(nx, ny)``.
        """
        x, y = self.node_coordinates()
        return np.minimum(np.minimum(x, self.width - x), np.minimum(y, self.height - y))

    def inset_mask(self, inset: float) -> BoolArray:
        """Nodes at distance at least ``inset`` from the boundary.

        Returns:
            A boolean ``(nx, ny)`` array, possibly all false.
        """
        slack = INSET_TOLERANCE * max(self.width, self.height)
        return self.boundary_distance() >= inset - slack

    def with_values(self, values: npt.ArrayLike) -> "Field":
        """Return a field on the same grid with new values.

        Returns:
            The new field.
        """
        return Field(width=self.width, height=self.height, values=np.asarray(values))
