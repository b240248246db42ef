"""Error code constants used across the laboratory."""

# Error codes with descriptions, keyed by HelixError.code
ERROR_CODES = {
    # General errors
    "helix_error": "General laboratory error",
    "invalid_parameter": "Invalid parameter or violated precondition",
    # Input errors
    "descriptor_error": "Malformed family descriptor",
    "graph_format_error": "Malformed HGF graph file",
    "certificate_error": "Supplied map is not a homomorphism or colouring",
    # Resource errors
    "cap_exceeded": "Size cap exceeded",
    "corpus_exhausted": "Corpus rejection budget exhausted",
    # Proof errors
    "invariant_violation": "Internal invariant violated",
}

# Process exit statuses of the command line interface
EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_CAP_EXCEEDED = 3
