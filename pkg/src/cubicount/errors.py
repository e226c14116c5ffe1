"""Exception taxonomy shared by all modules.

CLI exit codes: UsageError -> 2, CapacityError/DataError -> 3, failed
checks -> 1 (no exception; reported by the command itself).
"""


class UsageError(ValueError):
    """Caller violated a documented precondition (bad flag, bad regime)."""


class CapacityError(RuntimeError):
    """Request exceeds a configured safe ceiling (overflow, cache range)."""


class DataError(RuntimeError):
    """A data file is missing, corrupt, or fails its checksum."""


class IntegrityError(AssertionError):
    """An internal invariant failed; signals a bug, not a user error."""
