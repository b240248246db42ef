"""
Helical graphs laboratory.

Exact computation and verification tooling around helical, Kneser and
Schrijver graphs: graph operators and families (``graphs``), homomorphism
search and certificate transfers (``hom``), chromatic parameters
(``chromatics``) and the verification harness with its ``hx`` command
line (``harness``).
"""

__version__ = "0.1.0"
