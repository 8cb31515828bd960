"""
Errors raised by the toolkit

Every error is a `ValueError` so callers that only know about builtin errors still catch them
"""


class AnticipationLabError(ValueError):
    """
    Base class of every error the toolkit raises on purpose
    """


class DomainError(AnticipationLabError):
    """
    An input lies outside of the domain of an operation
    """


class InputError(DomainError):
    """
    A file could not be read or did not hold what it was supposed to
    """


class Infeasible(DomainError):
    """
    A constraint system has no (acceptable) solution
    """


class PartitionDegenerate(Infeasible):
    """
    A partition of the spectrum holds an interval without mass
    """


class ContractError(AnticipationLabError):
    """
    A result or an intermediate value broke a guarantee an operation makes or relies on
    """


class IllConditioned(ContractError):
    """
    A linear system or a set of roots is too close to singular to trust
    """


class NonUnitRoot(ContractError):
    """
    A recovered root of the characteristic polynomial is not on the unit circle
    """
