"""Cubic field enumeration, generalized-discriminant invariants, and the
asymptotic constants attached to them, verified against brute-force oracles
at desk scale."""

__version__ = "0.1.0"

from .errors import CapacityError, DataError, IntegrityError, UsageError

__all__ = [
    "CapacityError",
    "DataError",
    "IntegrityError",
    "UsageError",
    "__version__",
]
