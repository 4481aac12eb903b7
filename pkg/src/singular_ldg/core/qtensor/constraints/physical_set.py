import numpy as np

# Eigenvalue window of second-moment tensors of probability densities on the sphere.
EIGENVALUE_LOWER_BOUND = -1.0 / 3.0
EIGENVALUE_UPPER_BOUND = 2.0 / 3.0

ISOTROPIC_SECOND_MOMENT = 1.0 / 3.0
DIRECTOR_NORM_TOLERANCE = 1e-12
ORTHOGONALITY_TOLERANCE = 1e-12

_SQRT2 = np.sqrt(2.0)
_SQRT6 = np.sqrt(6.0)

S0_BASIS = np.array(
    [
        np.diag([1.0, -1.0, 0.0]) / _SQRT2,
        np.diag([1.0, 1.0, -2.0]) / _SQRT6,
        np.array([[0.0, 1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 0.0]]) / _SQRT2,
        np.array([[0.0, 0.0, 1.0], [0.0, 0.0, 0.0], [1.0, 0.0, 0.0]]) / _SQRT2,
        np.array([[0.0, 0.0, 0.0], [0.0, 0.0, 1.0], [0.0, 1.0, 0.0]]) / _SQRT2,
    ],
)
S0_BASIS.setflags(write=False)
S0_DIMENSION = 5
