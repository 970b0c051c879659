"""Exception hierarchy.  Every library error derives from LelongError."""


class LelongError(Exception):
    pass


class ShapeError(LelongError, ValueError):
    """Dimensions do not match (non-square matrix, wrong vector length)."""


class SingularMatrixError(LelongError, ArithmeticError):
    pass


class ValidationError(LelongError, ValueError):
    """Input violates a structural precondition (e.g. non-symmetric matrix)."""


class ParseError(LelongError, ValueError):
    """Malformed instance document.  ``path`` names the offending field."""

    def __init__(self, message, path=None):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


class UnknownVertexError(ParseError):
    """A vertex id is referenced but never declared."""


class ParameterError(LelongError, ValueError):
    pass


class MissingDataError(LelongError, ValueError):
    pass


class InconsistentGraphError(LelongError, ValueError):
    pass


class CapacityError(LelongError, RuntimeError):
    pass


class DomainError(LelongError, ValueError):
    pass
