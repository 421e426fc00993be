"""Exception types shared across the library.

Every invalid input is rejected loudly instead of being normalized away:
certification must never silently repair a triple or a matrix.
"""


class PreconditionError(ValueError):
    """An operation was called with inputs outside its stated domain."""


class UnsupportedInputError(ValueError):
    """Structurally valid input that the implementation deliberately refuses
    (e.g. a braid whose closure is a multi-component link)."""


class DimensionLimitError(ValueError):
    """A matrix computation would exceed the configured dimension cap."""


class ConsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagreed.

    This is never a user error: it indicates a defect in the arithmetic
    chain and must abort the run rather than produce a certificate.
    """
