"""Exception hierarchy shared by every module of the package."""


class AlgebraError(Exception):
    """Base class. ``witness`` holds the offending element tuple, if any."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotAPartialOrder(AlgebraError):
    pass


class NotALattice(AlgebraError):
    pass


class MissingProduct(AlgebraError):
    pass


class CarrierMismatch(AlgebraError):
    pass


class NotApplicable(AlgebraError):
    """Operation needs a richer algebra class than the input has."""


class SuiteNotApplicable(NotApplicable):
    pass


class UnsupportedShape(AlgebraError):
    pass


class CrossCheckError(AssertionError):
    """Two routes that must agree on a verdict disagreed."""


class ParseError(ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
