# Largest midpoint or divided-difference violation accepted as convex.
CONVEXITY_TOLERANCE = 1e-9

# Uniaxial ladder for the discrete convexity check.
DIVIDED_DIFFERENCE_POINTS = 50
DIVIDED_DIFFERENCE_S_MIN = -0.4
DIVIDED_DIFFERENCE_S_MAX = 0.9

DEFAULT_MARGIN_FLOOR = 0.02
DEFAULT_MIN_GROWTH = 1.0

# Refinement acceptance: fine margin >= ratio * coarse margin, relative energy drift bound.
REFINEMENT_MARGIN_RATIO = 0.5
REFINEMENT_ENERGY_DRIFT = 0.02
MIN_REFINEMENT_SIZES = 2

# Interior diagnostics use nodes at least this fraction of the shorter side from the boundary.
QUARTER_INSET_FRACTION = 0.25
MIN_BLOWUP_POINTS = 2
