"""Exception types shared across the package."""


class OctoError(Exception):
    """Base class for all library errors."""


class DivisionByZero(OctoError, ZeroDivisionError):
    pass


class IncompatibleTower(OctoError, ValueError):
    """Operands live in fields that cannot be embedded into a common level."""


class ClosureBoundExceeded(OctoError):
    """No solution exists at any tower level up to the configured maximum degree."""


class NoAdmissibleRoot(OctoError):
    """Every root found within the degree bound lies in the forbidden set."""


class CapExceeded(OctoError):
    """An exhaustive enumeration would exceed the configured size cap."""


class PreconditionViolated(OctoError, ValueError):
    pass


class SingularElement(OctoError, ZeroDivisionError):
    """Inverse requested for an octonion of norm zero."""


class NotARepresentative(OctoError, ValueError):
    """A pair does not match any catalogued or classified shape."""


class NotAPower(OctoError):
    """An octonion has no k-th root over the algebraic closure."""
