"""Exception types shared across the package."""


class InvalidPairError(ValueError):
    """A hyperplane equation x_i - x_j = a was given with i == j."""


class DomainError(ValueError):
    """An interval index or parameter lies outside its allowed range."""


class OnBoundaryError(ValueError):
    """A point lies on a hyperplane of the arrangement."""


class InfeasibleRegionError(ValueError):
    """An interval map does not describe a nonempty region."""


class UnsupportedActionError(ValueError):
    """The symmetric group only acts on regions when k == l."""


class InvalidTableError(ValueError):
    """A vector is not an inversion table."""


class NotALabelError(ValueError):
    """A vector is not a label of the arrangement being asked about."""


class ResourceLimitError(RuntimeError):
    """An enumeration would exceed the configured region cap."""


class InternalConsistencyError(AssertionError):
    """An invariant that should be unreachable was violated."""
