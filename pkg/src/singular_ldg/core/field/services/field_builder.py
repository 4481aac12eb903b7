import logging
from dataclasses import dataclass
from typing import ClassVar

import numpy as np
from diwire import Injected

from singular_ldg.core.field.constraints.boundary_kind import BoundaryKind
from singular_ldg.core.field.constraints.grid import INITIAL_MARGIN
from singular_ldg.core.field.constraints.interior_init import InteriorInit
from singular_ldg.core.field.dtos.boundary_spec import BoundarySpec
from singular_ldg.core.field.dtos.grid_spec import GridSpec
from singular_ldg.core.field.entities.field import Field
from singular_ldg.core.field.exceptions.infeasible_boundary import InfeasibleBoundaryError
from singular_ldg.core.qtensor.constraints.physical_set import (
    EIGENVALUE_LOWER_BOUND,
    EIGENVALUE_UPPER_BOUND,
)
from singular_ldg.core.qtensor.services.q_tensor_algebra import QTensorAlgebraService
from singular_ldg.core.shared.arrays import FloatArray
from singular_ldg.foundation.service import BaseService

logger = logging.getLogger(__name__)

# Uniaxial tensors s (n n^T - I/3) are physical exactly for s in (-1/2, 1).
_S_LOWER = -0.5
_S_UPPER = 1.0


@dataclass(kw_only=True)
class FieldBuilderService(BaseService):
    """Generate initial iterates with uniaxial Dirichlet data on the outer ring.

    Interior modes:

    - ``boundary-harmonic-like``: at each node, a linear blend between the boundary
      formula evaluated at the node's angle and the mean boundary tensor, weighted by
      the distance to the boundary;
    - ``constant``: the mean boundary tensor;
    - ``seeded-random``: uniaxial tensors of the boundary order parameter with
      directors drawn uniformly on the sphere.

    Interior nodes are then shrunk toward the isotropic state where needed so that
    every one of them has margin at least ``1e-3``.
    """

    INFEASIBLE_BOUNDARY_ERROR: ClassVar = InfeasibleBoundaryError  # noqa: WPS115

    _algebra: Injected[QTensorAlgebraService]

    def make_field(
        self,
        *,
        grid: GridSpec,
        boundary: BoundarySpec,
        interior_init: InteriorInit = InteriorInit.BOUNDARY_BLEND,
        seed: int = 0,
    ) -> Field:
        """Fill a grid with Dirichlet boundary data and the requested interior guess.

        Returns:
            A field whose boundary ring carries the Dirichlet data.
        """
        if not _S_LOWER < boundary.s < _S_UPPER:
            raise self.INFEASIBLE_BOUNDARY_ERROR(s=boundary.s)

        template = Field(
            width=grid.width,
            height=grid.height,
            values=np.zeros((grid.nx, grid.ny, 5)),
        )
        formula = self.boundary_formula(field=template, boundary=boundary)
        boundary_mask = template.boundary_mask
        mean_boundary = formula[boundary_mask].mean(axis=0)

        match interior_init:
            case InteriorInit.BOUNDARY_BLEND:
                distance = template.boundary_distance()
                blend = (1.0 - distance / distance.max())[..., np.newaxis]
                interior = blend * formula + (1.0 - blend) * mean_boundary
            case InteriorInit.CONSTANT:
                interior = np.broadcast_to(mean_boundary, formula.shape)
            case InteriorInit.SEEDED_RANDOM:
                interior = self._random_uniaxial(
                    s=boundary.s,
                    shape=boundary_mask.shape,
                    seed=seed,
                )

        values = np.where(boundary_mask[..., np.newaxis], formula, self._clamp(values=interior))
        logger.debug(
            "Built %dx%d field with %s boundary (s=%g) and %s interior",
            grid.nx,
            grid.ny,
            boundary.kind,
            boundary.s,
            interior_init,
        )
        return template.with_values(values)

    def boundary_formula(self, *, field: Field, boundary: BoundarySpec) -> FloatArray:
        """Evaluate the Dirichlet formula at every node of the grid.

        Returns:
            Coordinates ``(nx, ny, 5)``; only the boundary ring is used as data.
        """
        x, y = field.node_coordinates()
        angle = np.full(x.shape, boundary.theta0)
        if boundary.kind is BoundaryKind.WINDING_DIRECTOR:
            polar = np.arctan2(y - 0.5 * field.height, x - 0.5 * field.width)
            angle = boundary.k * polar + boundary.theta0

        directors = np.stack([np.cos(angle), np.sin(angle), np.zeros_like(angle)], axis=-1)
        return self._algebra.uniaxial_batch(s=boundary.s, directors=directors)

    def _random_uniaxial(self, *, s: float, shape: tuple[int, ...], seed: int) -> FloatArray:
        rng = np.random.default_rng(seed)
        directors = rng.standard_normal(size=(*shape, 3))
        directors /= np.linalg.norm(directors, axis=-1, keepdims=True)
        return self._algebra.uniaxial_batch(s=s, directors=directors)

    def _clamp(self, *, values: FloatArray) -> FloatArray:
        eigenvalues = np.linalg.eigvalsh(self._algebra.to_matrix(values=values))
        lowest = eigenvalues[..., 0]
        highest = eigenvalues[..., -1]
        with np.errstate(divide="ignore"):
            lower_scale = np.where(
                lowest < 0,
                (-EIGENVALUE_LOWER_BOUND - INITIAL_MARGIN) / -lowest,
                np.inf,
            )
            upper_scale = np.where(
                highest > 0,
                (EIGENVALUE_UPPER_BOUND - INITIAL_MARGIN) / highest,
                np.inf,
            )
        scale = np.minimum(1.0, np.minimum(lower_scale, upper_scale))
        return values * scale[..., np.newaxis]
