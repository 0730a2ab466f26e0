"""
Eckart NU Exceptions. The library should only throw these when something goes wrong,
everything else is a bug.

Catch all top level exceptions under EckartException.
"""


class EckartException(Exception):
    """Base Exception for the library"""
    pass


class DomainError(EckartException, ValueError):
    """An argument lies outside the domain of the operation"""
    pass


class NoMinimum(EckartException):
    """The potential has no minimum (alpha <= beta)"""
    pass


class WeightError(EckartException):
    """Combination weights do not sum to one"""
    pass


class SchemeInvalid(EckartException):
    """The approximation scheme violates the admissibility relations for a state"""
    pass


class StateDoesNotExist(EckartException):
    """The closed form has no bound state for these quantum numbers"""
    pass


class NoStateFound(EckartException):
    """The numerical solver found no level with the requested node count"""
    pass


class NonConverged(EckartException):
    """An iterative method ran out of iterations"""
    pass


class NoSignChange(EckartException):
    """A root bracket does not change sign"""
    pass


class DegenerateInput(EckartException):
    """Both states of a degeneracy problem are the same level"""
    pass


class ConfigError(EckartException):
    """A run configuration could not be read or did not validate"""
    pass


class OutdatedVersion(ConfigError):
    """The run configuration requires a newer eckart-nu"""
    pass
