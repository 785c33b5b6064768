"""Exception hierarchy.

The CLI maps each family to its own exit status, so engines raise the most
specific class that applies.
"""


class BKError(Exception):
    """Base class for all errors raised by bkcalc."""


class SchemaError(BKError, ValueError):
    """Malformed input: bad Cartan type, wrong vector length, unknown name."""


class PreconditionError(BKError, ValueError):
    """A mathematical precondition does not hold for otherwise valid input."""


class ResourceCapError(BKError, RuntimeError):
    """A configured size guard (Weyl group order, integrand degree) was hit."""


class InternalError(BKError, AssertionError):
    """An internal consistency check failed; this indicates a bug."""
