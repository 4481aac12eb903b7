import numpy as np

MIN_NODES_PER_AXIS = 3
GAUSS_POINTS_PER_CELL = 4
CORNERS_PER_CELL = 4

# Initial iterates are shrunk toward the isotropic state until every node has this margin.
INITIAL_MARGIN = 1e-3

# Two-point Gauss rule on the unit square. Corners and gauss points share the
# ordering (0, 0), (1, 0), (0, 1), (1, 1) in the local (xi, eta) coordinates.
_ABSCISSAE = np.array([0.5 - 0.5 / np.sqrt(3.0), 0.5 + 0.5 / np.sqrt(3.0)])
_XI = np.tile(_ABSCISSAE, 2)
_ETA = np.repeat(_ABSCISSAE, 2)

GAUSS_COORDINATES = np.stack([_XI, _ETA], axis=-1)

# Tables indexed (gauss point, corner).
SHAPE_VALUES = np.stack(
    [(1.0 - _XI) * (1.0 - _ETA), _XI * (1.0 - _ETA), (1.0 - _XI) * _ETA, _XI * _ETA],
    axis=-1,
)
SHAPE_XI_DERIVATIVES = np.stack([_ETA - 1.0, 1.0 - _ETA, -_ETA, _ETA], axis=-1)
SHAPE_ETA_DERIVATIVES = np.stack([_XI - 1.0, -_XI, 1.0 - _XI, _XI], axis=-1)

for _table in (GAUSS_COORDINATES, SHAPE_VALUES, SHAPE_XI_DERIVATIVES, SHAPE_ETA_DERIVATIVES):
    _table.setflags(write=False)

# Relative slack when comparing node distances with an inset.
INSET_TOLERANCE = 1e-12

# Relative slack when comparing a loaded field's extents with the configured ones.
EXTENT_RTOL = 1e-9
