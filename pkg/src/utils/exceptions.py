class EisensteinError(Exception):
    """
    Base class for every error raised by the reduction pipeline.
    """


class DomainError(EisensteinError, ValueError):
    """
    An input lies outside the domain of an operation, e.g. odd indices, Im(tau) <= 0 or m = 0 in an inner lattice sum.
    """


class PoisonedPointError(DomainError):
    """
    A hyperbolic cotangent was requested at (or numerically next to) one of its poles.
    """


class VerificationError(EisensteinError):
    """
    A symbolic formula and its numerical oracle disagree beyond the configured tolerance.
    """

    def __init__(self, message, relative_difference=None):

        super().__init__(message)

        self.relative_difference = relative_difference


class ConfigError(EisensteinError):
    """
    The configuration file is missing, unreadable or holds values of the wrong type.
    """
