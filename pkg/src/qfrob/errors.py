"""Exception types shared across the package."""


class QfrobError(Exception):
    """Base class for all package-specific failures."""


class UnsupportedParameters(QfrobError):
    """Inputs outside the supported range (p = 2, composite p, m <= 1, ...)."""


class DegenerateDecomposition(QfrobError):
    """The Hilbert-data linear system did not pin down a valid decomposition."""


class InconsistentMultiplicity(QfrobError):
    """Independently computed multiplicities disagree with each other."""


class SearchExhausted(QfrobError):
    """A base-change witness search exceeded its enumeration bound."""


class MalformedShape(QfrobError):
    """An extension shape violates its rank balance."""


class PreconditionFailed(QfrobError):
    """A caller-supplied object violates the contract of the operation."""
