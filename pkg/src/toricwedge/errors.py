"""Exception types shared by every module.

Each class carries a short machine-readable ``code`` that the command line
front end reports alongside the message.
"""


class ToricWedgeError(Exception):
    code = "error"


class InputError(ToricWedgeError, ValueError):
    """Malformed or inconsistent arguments (wrong lengths, unknown labels, ...)."""

    code = "input_error"


class IntegerOverflowError(ToricWedgeError, ArithmeticError):
    """An intermediate integer left the configured word size.

    Retry with ``bits=None`` (unbounded Python integers) if the input is
    legitimately large.
    """

    code = "overflow"


class ResourceLimitError(ToricWedgeError):
    """A computation would exceed a configured size cap."""

    code = "resource_limit"
