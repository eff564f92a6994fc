"""
Configuration for the elliptic-curve factoring engine
"""

# Driver thresholds
SMALL_P_THRESHOLD = 1000      # below this, roots are found by exhaustive scan
MIN_ATTEMPTS = 64             # attempt budget is max(MIN_ATTEMPTS, ceil(log2(p)^2))
EXHAUSTIVE_CAP = 10**6        # honest-failure fallback scan is allowed below this

# Brute-force point counting guard
NAIVE_COUNT_LIMIT = 10**6

# Strong-pseudoprime bases; deterministic for every n below 3.3 * 10^24
MILLER_RABIN_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Polynomials with at least this many coefficients are multiplied through
# Kronecker substitution instead of the schoolbook loop
KRONECKER_CUTOFF = 24

# Curve recipes over B = F_p[t]/(f). Each entry is (a4, a6) where a coefficient
# (c0, c1) means c0 + c1*t.
BASE_CURVE_RECIPES = [
    ((0, 1), (1, 0)),   # (t, 1)
    ((0, 1), (2, 0)),   # (t, 2)
    ((1, 0), (0, 1)),   # (1, t)
    ((0, 1), (1, 1)),   # (t, t+1)
    ((1, 1), (0, 1)),   # (t+1, t)
    ((1, 2), (3, 0)),   # (2t+1, 3)
]

# The table is padded to RECIPE_TABLE_SIZE entries by the rule
#   recipe 6+j = (t + j + 2, (j + 2)*t + 1)
RECIPE_TABLE_SIZE = 16

# Logging configuration
LOG_LEVEL = 'WARNING'
LOG_FORMAT = '%(asctime)s - %(levelname)s - %(name)s - %(message)s'

# CLI exit codes
EXIT_OK = 0
EXIT_PARSE_ERROR = 2
EXIT_PRECONDITION = 3
EXIT_BUDGET_EXHAUSTED = 4
