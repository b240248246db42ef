"""Default size caps and harness constants."""

DEFAULT_ISOMORPHISM_ORDER = 16
DEFAULT_CHROMATIC_ORDER = 400
DEFAULT_FRACTIONAL_ORDER = 20
DEFAULT_LOCAL_ORDER = 12
DEFAULT_COLORING_GROUND_SET = 64
DEFAULT_FAMILY_ORDER = 20000
DEFAULT_HOM_COUNT_LIMIT = 100000

DEFAULT_SEED = 42

CAPS_ENV_VAR = "HELIX_CAPS"
LOGFIRE_TOKEN_ENV_VAR = "LOGFIRE_TOKEN"

# Version of the defaults file and of emitted report documents
FORMAT_VERSION = "1.0.0"
MIN_SUPPORTED_FORMAT_VERSION = "1.0.0"
MAX_SUPPORTED_FORMAT_VERSION = "2.0.0"
