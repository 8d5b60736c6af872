"""Exception types shared across the package."""


class RatlabError(Exception):
    """Base class for all package-specific errors."""


class PoleProximityError(RatlabError):
    """An evaluation point fell inside the guard band around a pole."""


class GuardViolationError(RatlabError):
    """A pole perturbation could cross the unit circle or collide poles."""


class NoConvergenceError(RatlabError):
    """Quadrature hit the node cap before reaching the requested tolerance.

    Carries the best estimate computed so far in ``estimate`` and the node
    count in ``nodes`` so callers can decide whether to keep it.
    """

    def __init__(self, message, estimate=None, nodes=None):
        super().__init__(message)
        self.estimate = estimate
        self.nodes = nodes


class IllConditionedError(RatlabError):
    """A Gram matrix is too ill-conditioned for the requested basis."""


class ConfigError(RatlabError):
    """Invalid configuration file, key, or value."""


class MethodMismatchError(RatlabError):
    """An estimation method was asked to run outside its (p, q) domain."""


class UnknownKindError(RatlabError):
    """An inequality or experiment kind token was not recognized."""
