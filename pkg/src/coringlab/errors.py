"""Exception types shared across the package."""


class LabError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(LabError):
    """An instance file could not be parsed."""

    def __init__(self, location, message):
        self.location = location
        self.message = message
        super().__init__(f"{location}: {message}")


class ValidationError(LabError):
    """A loaded object violates one of its defining identities."""

    def __init__(self, obj, message):
        self.obj = obj
        self.message = message
        super().__init__(f"{obj}: {message}")


class NotBalanced(LabError):
    """A map does not descend to a tensor product quotient."""


class NotStable(LabError):
    """A subspace is not stable under the ambient module actions."""


class NotFirm(LabError):
    """A required multiplication map is not bijective."""


class FactorizationFailure(LabError):
    """A morphism does not factor through an equalizer as required."""


class DiagramFailure(LabError):
    """Input data fails the commutative diagrams it must satisfy."""


class UnsupportedField(LabError):
    """The requested computation is not available over this field."""


class UnitRequired(LabError):
    """The operation needs a unital algebra."""


class UnknownCommand(LabError):
    """The CLI was asked to run a command it does not know."""
