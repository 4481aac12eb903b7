import numpy as np

MIN_QUADRATURE_ORDER = 8
DEFAULT_QUADRATURE_ORDER = 32

SPHERE_AREA = 4.0 * np.pi
LOG_SPHERE_AREA = float(np.log(SPHERE_AREA))

# Decimal places used to merge squared coordinates that agree up to rounding.
SQUARED_NODE_DECIMALS = 13
