"""Exception hierarchy.

Everything derives from ``FermitrapError``; argument-domain problems are also
``ValueError`` so generic callers can catch them the usual way.
"""


class FermitrapError(Exception):
    pass


class DomainError(FermitrapError, ValueError):
    """Argument outside the documented domain of an operation."""


class DegeneratePointError(FermitrapError, ArithmeticError):
    """Normalizer of a two-point density matrix vanished (both atoms in the far tail)."""


class InvalidKernelError(FermitrapError, ValueError):
    """Kernel values that would produce a non-positive density matrix."""


class InvalidStateError(FermitrapError, ValueError):
    """Matrix is not a valid two-qubit state within tolerance."""


class InvalidParameterError(FermitrapError, ValueError):
    pass


class DegenerateLevelError(FermitrapError, ValueError):
    """Zero gap with a level sitting exactly at the Fermi energy."""


class InfiniteDistanceError(FermitrapError):
    """Concurrence never vanishes, e.g. a single filled level (N = 2)."""


class DistanceNotFoundError(FermitrapError):
    """No zero crossing before the search ceiling or the density tail."""
