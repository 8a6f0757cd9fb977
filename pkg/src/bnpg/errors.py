"""Exception types raised by the solvers and loaders."""


class BnpgError(ValueError):
    """Base class for all package errors."""


class InvalidInstance(BnpgError):
    """A game violates one of the structural invariants."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class InstanceTooLarge(BnpgError):
    pass


class PreconditionError(BnpgError):
    """A solver was called on an instance outside its tractable class."""


class NotCompleteGraph(PreconditionError):
    pass


class NotATree(PreconditionError):
    pass


class NotHomogeneous(PreconditionError):
    pass


class TableInconsistency(BnpgError):
    """Upstream reconstruction found a table entry missing.

    This indicates a bug in the downstream pass, never a property of the game.
    """
