"""Exception types shared across the package."""


class GappedError(ValueError):
    """Base class for all errors raised by this package."""


class InputError(GappedError):
    """Input text is empty or malformed."""


class RangeError(GappedError):
    """A position or interval lies outside the text."""


class ParamError(GappedError):
    """A numeric parameter is out of its admissible range."""


class PlanError(GappedError):
    """A union-find plan step is not permitted by the declared plan."""


class PreconditionError(GappedError):
    """A query violates a structural precondition of the data structure."""
