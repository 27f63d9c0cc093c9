"""Exception types shared across the package."""


class InvariantViolation(Exception):
    """A construction whose correctness is guaranteed by a proved statement
    failed its runtime re-verification.  Always a bug, never user error."""


class GuardExceeded(Exception):
    """A brute-force enumeration would exceed its configured work budget."""
