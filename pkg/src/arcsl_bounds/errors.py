"""Exception types shared by the evaluation modules."""


class DomainError(ValueError):
    """An argument lies outside the domain an operation accepts."""


class ToleranceError(ValueError):
    """A requested tolerance is below the floor an operation supports."""


class WorkLimitError(RuntimeError):
    """The term or subdivision budget ran out before the tolerance was met."""


class GammaOverflowError(OverflowError):
    """Gamma(x) does not fit in a double."""


class CrosscheckError(AssertionError):
    """Independent routes to the same constant disagree beyond tolerance."""

    def __init__(self, message, values=None):
        super().__init__(message)
        self.values = dict(values or {})
