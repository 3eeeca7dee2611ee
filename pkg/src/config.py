"""
Configuration constants for Sextic Radical Solver
"""

# Application metadata
APP_NAME = "Sextic Radical Solver"
APP_VERSION = "1.0.0"

# Version tag written into every emitted JSON object
SCHEMA_VERSION = 1

# Membership tolerance for the constraint checks (relative to the residual scale)
DEFAULT_TOLERANCE = 1e-9

# Largest |c_n| the constraint checks accept; their degree-5 terms must stay inside double range
MAX_CONSTRAINT_COEFFICIENT = 1e60

# Free fiber coordinate used when none is given (a0 for model one, b0 for model two)
DEFAULT_FREE_PARAMETER = 0j

# Newton polishing of radical roots
POLISH_STEPS = 2
POLISH_DERIVATIVE_GUARD = 1e-14

# Recovery cross-checks fail beyond this multiple of tol * scale
RECOVERY_CROSS_CHECK_FACTOR = 10.0

# Aberth-Ehrlich oracle
ORACLE_MAX_ITERATIONS = 200
ORACLE_CONVERGENCE_TOL = 1e-13
ORACLE_SEED_RADIUS_FACTOR = 1.0
ORACLE_PHASE_OFFSET = 0.4  # radians
# Stop when every |P(z)| is within FACTOR * degree * eps of the Horner rounding bound
ORACLE_BACKWARD_ERROR_FACTOR = 4.0

# Benchmark
BENCH_DEFAULT_TRIALS = 100
BENCH_DEFAULT_SEED = 0
BENCH_MIN_SOLVES = 1000
# Real and imaginary parts of random parameters are drawn from [-R, R]
BENCH_PARAM_RANGE = 2.0

# Output formatting
OUTPUT_SIGNIFICANT_DIGITS = 15
OUTPUT_FORMATS = ("json", "text")

# Process exit codes
EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_CONSTRAINT_REJECTED = 2
EXIT_ORACLE_NON_CONVERGENCE = 3
