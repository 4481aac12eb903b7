from dataclasses import dataclass
from typing import ClassVar

import numpy as np

from singular_ldg.core.elastic.entities.gradient_pair import GradientPair
from singular_ldg.core.field.constraints.grid import (
    CORNERS_PER_CELL,
    GAUSS_POINTS_PER_CELL,
    SHAPE_ETA_DERIVATIVES,
    SHAPE_VALUES,
    SHAPE_XI_DERIVATIVES,
)
from singular_ldg.core.field.entities.element_sample import ElementSample
from singular_ldg.core.field.entities.field import Field
from singular_ldg.core.field.entities.gauss_samples import GaussSamples
from singular_ldg.core.field.exceptions.invalid_element_index import InvalidElementIndexError
from singular_ldg.core.qtensor.constraints.physical_set import S0_DIMENSION
from singular_ldg.core.qtensor.entities.q_tensor import QTensor
from singular_ldg.core.shared.arrays import FloatArray
from singular_ldg.foundation.service import BaseService


@dataclass(kw_only=True)
class BilinearElementService(BaseService):
    """Bilinear quadrilateral interpolation with the 2 x 2 Gauss rule.

    Cells are numbered row-major over ``(i, j)``, so cell ``c`` spans nodes
    ``(i, j)`` to ``(i + 1, j + 1)`` with ``c = i * (ny - 1) + j``. Batched methods
    work on corner stacks ``(cells, 4, 5)`` so callers can split the cells into
    blocks.
    """

    INVALID_ELEMENT_INDEX_ERROR: ClassVar = InvalidElementIndexError  # noqa: WPS115

    def element_eval(
        self,
        *,
        field: Field,
        cell: tuple[int, int],
        gauss: tuple[int, int],
    ) -> ElementSample:
        """Interpolate at one gauss point of one cell.

        Returns:
            The tensor, its in-plane gradient and the quadrature weight ``hx * hy / 4``.
        """
        cell_i, cell_j = cell
        gauss_xi, gauss_eta = gauss
        if not (
            0 <= cell_i < field.nx - 1
            and 0 <= cell_j < field.ny - 1
            and gauss_xi in {0, 1}
            and gauss_eta in {0, 1}
        ):
            raise self.INVALID_ELEMENT_INDEX_ERROR(cell=cell, gauss=gauss)

        corners = field.values[cell_i : cell_i + 2, cell_j : cell_j + 2].transpose(1, 0, 2)
        samples = self.gauss_samples(
            corners=corners.reshape(1, CORNERS_PER_CELL, S0_DIMENSION),
            hx=field.hx,
            hy=field.hy,
        )
        row = 2 * gauss_eta + gauss_xi
        return ElementSample(
            q=QTensor(components=samples.q_values[row]),
            gradient=GradientPair(
                dx=QTensor(components=samples.dx[row]),
                dy=QTensor(components=samples.dy[row]),
            ),
            weight=samples.weight,
        )

    def cell_corners(self, *, values: FloatArray) -> FloatArray:
        """Stack the four corner values of every cell.

        Returns:
            Corner values ``(cells, 4, 5)`` in cell order.
        """
        corners = np.stack(
            [values[:-1, :-1], values[1:, :-1], values[:-1, 1:], values[1:, 1:]],
            axis=2,
        )
        return corners.reshape(-1, CORNERS_PER_CELL, values.shape[-1])

    def gauss_samples(self, *, corners: FloatArray, hx: float, hy: float) -> GaussSamples:
        """Interpolate at all gauss points of the given cells.

        Returns:
            Values and gradients ``(cells * 4, 5)``.
        """
        return GaussSamples(
            q_values=np.einsum("gc,nck->ngk", SHAPE_VALUES, corners).reshape(-1, S0_DIMENSION),
            dx=np.einsum("gc,nck->ngk", SHAPE_XI_DERIVATIVES / hx, corners).reshape(
                -1,
                S0_DIMENSION,
            ),
            dy=np.einsum("gc,nck->ngk", SHAPE_ETA_DERIVATIVES / hy, corners).reshape(
                -1,
                S0_DIMENSION,
            ),
            weight=0.25 * hx * hy,
        )

    def pull_back(
        self,
        *,
        by_q: FloatArray,
        by_dx: FloatArray,
        by_dy: FloatArray,
        hx: float,
        hy: float,
    ) -> FloatArray:
        """Apply the transpose of :meth:`gauss_samples` to gauss-point sensitivities.

        Returns:
            Sensitivities with respect to corner values ``(cells, 4, 5)``.
        """
        shape = (-1, GAUSS_POINTS_PER_CELL, S0_DIMENSION)
        return (
            np.einsum("gc,ngk->nck", SHAPE_VALUES, by_q.reshape(shape))
            + np.einsum("gc,ngk->nck", SHAPE_XI_DERIVATIVES / hx, by_dx.reshape(shape))
            + np.einsum("gc,ngk->nck", SHAPE_ETA_DERIVATIVES / hy, by_dy.reshape(shape))
        )

    def scatter(self, *, corner_values: FloatArray, nx: int, ny: int) -> FloatArray:
        """Accumulate per-corner contributions onto the nodes.

        Contributions are added corner by corner in a fixed order.

        Returns:
            Nodal sums ``(nx, ny, 5)``.
        """
        cells = corner_values.reshape(nx - 1, ny - 1, CORNERS_PER_CELL, -1)
        nodal = np.zeros((nx, ny, cells.shape[-1]))
        nodal[:-1, :-1] += cells[:, :, 0]
        nodal[1:, :-1] += cells[:, :, 1]
        nodal[:-1, 1:] += cells[:, :, 2]
        nodal[1:, 1:] += cells[:, :, 3]
        return nodal
