"""Exception hierarchy shared by all modules.

The CLI maps these onto exit codes: ``ParseError`` -> 2,
``DivisorDataRequired`` -> 4, any other ``QsingError`` -> 3.
"""


class QsingError(ValueError):
    """Base class for every error raised by this package."""

    code = "QsingError"

    def to_dict(self):
        return {"error": self.code, "message": str(self)}


class ParseError(QsingError):
    code = "ParseError"


class ValidationError(QsingError):
    code = "ValidationError"


class NotCoprime(ValidationError):
    code = "NotCoprime"


class QOutOfRange(ValidationError):
    code = "QOutOfRange"


class TableTwoConditionViolated(ValidationError):
    code = "TableTwoConditionViolated"

    def __init__(self, message, condition=None):
        super().__init__(message)
        self.condition = condition

    def to_dict(self):
        d = super().to_dict()
        d["condition"] = self.condition
        return d


class MinimalityViolation(ValidationError):
    code = "MinimalityViolation"


class ArmCountError(ValidationError):
    code = "ArmCountError"


class ShapeMismatch(QsingError):
    code = "ShapeMismatch"


class IndexOutOfRange(QsingError):
    code = "IndexOutOfRange"


class HyperkahlerInput(QsingError):
    code = "HyperkahlerInput"


class DivisorDataRequired(QsingError):
    code = "DivisorDataRequired"


class ResidueClassInvalid(QsingError):
    code = "ResidueClassInvalid"


class TableThreeDisagreement(QsingError):
    code = "TableThreeDisagreement"


class NoEmbeddingRelation(QsingError):
    code = "NoEmbeddingRelation"


class ChainInvariantViolation(QsingError):
    """Internal consistency failure; never expected on valid input."""

    code = "ChainInvariantViolation"


class NoIntegerSolution(QsingError):
    """Internal consistency failure; never expected on valid input."""

    code = "NoIntegerSolution"


class IdentityViolation(QsingError):
    """Two routes to the same number disagree; signals an internal bug."""

    code = "IdentityViolation"
