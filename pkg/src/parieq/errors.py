"""Exception hierarchy. Public functions raise these instead of bare ValueError."""


class ParieqError(Exception):
    """Base error for this package."""


class DomainError(ParieqError, ValueError):
    """An argument violates a documented precondition."""


class NoEquilibriumError(ParieqError):
    """The wagering game has no pure-strategy equilibrium for these parameters."""


class QuadratureError(ParieqError):
    """Adaptive integration exceeded its recursion-depth budget."""


class ConfigError(ParieqError, ValueError):
    """A scenario config file is malformed or inconsistent."""
