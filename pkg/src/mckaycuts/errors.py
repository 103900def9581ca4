"""Exception types shared across the package."""


class SingularMatrixError(ValueError):
    """A matrix that was required to be nonsingular is singular."""


class NonFaithfulSpecError(ValueError):
    """Generator data whose stated order disagrees with the lattice index."""


class NotACutError(ValueError):
    """An arrow set that fails the one-arrow-per-elementary-cycle condition."""


class InadmissibleTypeError(ValueError):
    """A type vector that fails the divisibility characterisation."""


class UnsupportedLatticeError(ValueError):
    """A lattice or extremal-element request outside the supported range."""


class SearchBoundExceededError(RuntimeError):
    """The bounded search for the maximal height function was inconclusive."""
