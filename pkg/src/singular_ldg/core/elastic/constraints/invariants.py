import numpy as np

INVARIANT_COUNT = 5
# I1..I4 enter the quadratic coercivity form; I5 is linear in the gradient.
QUADRATIC_INVARIANT_COUNT = 4
# Planar fields depend on (x1, x2) only.
PLANAR_DERIVATIVES = 2
GRADIENT_PAIR_DIMENSION = 10

# Coordinates of closure(M) lie in this box: |v| <= sqrt(2/3) < 0.82.
PHYSICAL_BOX_HALF_WIDTH = 0.82

INVARIANCE_TOLERANCE = 1e-12

LEVI_CIVITA = np.zeros((3, 3, 3))
LEVI_CIVITA[0, 1, 2] = LEVI_CIVITA[1, 2, 0] = LEVI_CIVITA[2, 0, 1] = 1.0
LEVI_CIVITA[0, 2, 1] = LEVI_CIVITA[2, 1, 0] = LEVI_CIVITA[1, 0, 2] = -1.0
LEVI_CIVITA.setflags(write=False)
