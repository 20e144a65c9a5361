"""Exception hierarchy.

Two families: ``ValidationError`` for bad inputs (CLI exit code 1) and
``NumericError`` for failures of the arithmetic itself (CLI exit code 2).
"""


class ValidationError(ValueError):
    """Inputs violate a documented precondition or invariant."""


class DomainError(ValidationError):
    """A value lies outside the domain of a map (e.g. a log of a non-positive number)."""


class PreconditionError(ValidationError):
    pass


class UnsupportedGeometryError(ValidationError):
    pass


class DegenerateCapitalError(ValidationError):
    pass


class SchemaError(ValidationError):
    pass


class ParseError(ValidationError):
    pass


class IntegrityError(ValidationError):
    pass


class NumericError(ArithmeticError):
    """The computation itself failed (overflow, ill-conditioning)."""


class RangeError(NumericError, OverflowError):
    pass


class IllConditionedError(NumericError):
    def __init__(self, message: str, condition_number: float):
        super().__init__(message)
        self.condition_number = condition_number
