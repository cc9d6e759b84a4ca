"""Canonical bases of the q-Fock space and singular tilting combinatorics."""

from lltilt.alcove import Orbit, Pattern, Weight
from lltilt.fock import FockVector, canonical_basis, decomposition_matrix
from lltilt.laurent import LaurentPoly, q_factorial, q_int, symmetric_completion
from lltilt.partition import Partition
from lltilt.singular import compute_pattern
from lltilt.soergel import regular_pattern

__version__ = "0.1.0"

__all__ = [
    "FockVector",
    "LaurentPoly",
    "Orbit",
    "Partition",
    "Pattern",
    "Weight",
    "canonical_basis",
    "compute_pattern",
    "decomposition_matrix",
    "q_factorial",
    "q_int",
    "regular_pattern",
    "symmetric_completion",
    "__version__",
]
