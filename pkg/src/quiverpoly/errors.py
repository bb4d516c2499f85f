"""Exception types shared across the package."""


class QuiverError(Exception):
    """Base class for every error raised by quiverpoly."""


class NotDivisible(QuiverError, ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


class NotOccurring(QuiverError, ValueError):
    """A rank array with a negative lace number.

    ``cell`` holds the offending (i, j) so callers can report it.
    """

    def __init__(self, message, cell=None):
        super().__init__(message)
        self.cell = cell


class ShapeMismatch(QuiverError, ValueError):
    pass


class NotAPipeDreamFor(QuiverError, ValueError):
    pass


class IncompatibleStrip(QuiverError, ValueError):
    pass


class NotPeelable(QuiverError, ValueError):
    pass


class BijectionFailure(QuiverError):
    """Peelable tableaux and factor sequences failed to match.

    ``counterexample`` carries whatever object broke the correspondence.
    """

    def __init__(self, message, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample
