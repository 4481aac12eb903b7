CSV_HEADER = ("x", "y", "v1", "v2", "v3", "v4", "v5")
# 17 significant digits round-trip every float64.
CSV_FLOAT_FORMAT = ".17g"
# Node steps along an axis may differ from the mean step by this fraction.
CSV_SPACING_RTOL = 1e-9
