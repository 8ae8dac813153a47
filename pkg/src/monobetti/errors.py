"""Exception hierarchy. Each class carries the CLI exit code it maps to."""


class MonoBettiError(Exception):
    exit_code = 1


class InputError(MonoBettiError, ValueError):
    """Malformed input: parse errors, unknown variables, bad arguments."""

    exit_code = 1


class DomainError(MonoBettiError, ValueError):
    """A mathematical precondition does not hold for the given ideal."""

    exit_code = 2


class ClassificationError(DomainError):
    """No structural form matched where one was expected."""


class NotApplicableError(DomainError):
    """No closed-form Betti formula covers the ideal."""


class ResourceError(MonoBettiError, RuntimeError):
    """A configured size cap would be exceeded."""

    exit_code = 3


class InvariantViolation(MonoBettiError, AssertionError):
    """Two computations that must agree did not."""

    exit_code = 4
