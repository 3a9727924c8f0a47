"""Exception hierarchy shared by all modules.

The CLI maps these onto exit codes: ``ArgumentError`` -> 2,
``ResourceBudgetError`` -> 3, ``NotInMap``/``VerificationFailed`` -> 1.
"""


class DBError(Exception):
    """Base class for every error raised by this package."""


class ArgumentError(DBError, ValueError):
    """Invalid parameters for an operation."""


class InfeasibleTrim(ArgumentError):
    """Column trimming needed for coprime layer periods is not possible."""


class ResourceBudgetError(DBError):
    """A construction or scan would exceed the configured budget."""


class EnumerationTooLarge(ResourceBudgetError):
    pass


class ConstructionError(DBError, AssertionError):
    """Internal invariant violated during a construction (a bug, not bad input)."""


class NotInMap(DBError, KeyError):
    """An observed window does not occur in the map."""

    def __init__(self, layer: int, message: str = ""):
        self.layer = layer
        super().__init__(message or f"window not found in layer {layer} lookup table")

    def __str__(self):
        return self.args[0]


class VerificationFailed(DBError):
    pass
