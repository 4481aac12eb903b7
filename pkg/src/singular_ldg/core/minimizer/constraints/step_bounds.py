# Barzilai-Borwein steps are clamped to this range, relative to ``step_init``.
BB_STEP_LOWER = 1e-6
BB_STEP_UPPER = 1e3

# Backtracking gives up below this fraction of ``step_init``.
MIN_STEP_FRACTION = 1e-14

PROGRESS_LOG_INTERVAL = 50
