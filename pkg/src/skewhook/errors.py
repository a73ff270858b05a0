"""Error categories shared by the library and the CLI."""


class SkewhookError(Exception):
    """Base class; ``category`` is reported by the CLI."""

    category = "error"


class ValidationError(SkewhookError, ValueError):
    """Malformed input: bad partition, containment failure, non-tableau, etc."""

    category = "validation"


class PreconditionError(ValidationError):
    """An operation was applied where its precondition does not hold."""


class GuardError(SkewhookError):
    """A configured size limit refused the request."""

    category = "guard"

    def __init__(self, guard: str, limit: int, size: int):
        self.guard = guard
        self.limit = limit
        self.size = size
        super().__init__(f"guard {guard!r} refused: size {size} exceeds limit {limit}")


class InvariantViolation(SkewhookError):
    """An internal identity or consistency check failed (an implementation bug)."""

    category = "invariant-violation"
