"""Systematic error-correcting codes for rank modulation.

Subpackages and modules:

- :mod:`rmcodes.perm` -- permutations, distances, factoradic transform, ranking
- :mod:`rmcodes.kendall` -- Kendall tau constructions (weighted-sum, Golomb-Welch,
  BCH/Construction A, Gray embedding, greedy)
- :mod:`rmcodes.linf` -- l-infinity constructions
- :mod:`rmcodes.bounds` -- ball sizes and existence bounds
- :mod:`rmcodes.oracle` -- brute-force verification
- :mod:`rmcodes.cli` -- command-line front end
"""

from .codebook import Codebook
from .errors import (
    ConstructionFailure,
    InfeasibleParameters,
    InvalidArgument,
    RMCodesError,
    UncorrectableError,
)

__all__ = [
    "Codebook",
    "ConstructionFailure",
    "InfeasibleParameters",
    "InvalidArgument",
    "RMCodesError",
    "UncorrectableError",
]
__version__ = "0.1.0"
