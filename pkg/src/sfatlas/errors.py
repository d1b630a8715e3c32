"""Exception types raised by the engine."""


class ValidationError(ValueError):
    """An input value violates one of its structural invariants."""


class NonFreeActionError(ValidationError):
    """A group action that must be free has a fixed point.

    ``element`` is the offending group element and ``witness`` describes
    the fixed point (a point index or rank-0 class).
    """

    def __init__(self, message, element=None, witness=None):
        super().__init__(message)
        self.element = element
        self.witness = witness


class NotAHomomorphismError(ValidationError):
    """Generators do not define an action of the declared group."""


class BoundsError(ValueError):
    """A size parameter is outside the configured enumeration bound."""
