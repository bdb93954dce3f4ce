"""Exception hierarchy shared by all dftlab solvers."""


class DftLabError(Exception):
    """Base class for all dftlab errors."""


class InvalidInputError(DftLabError):
    """Parameters violate a documented precondition (bad values, grid mismatch, ...)."""


class SolverError(DftLabError):
    """A numerical solver failed to converge or lost its bracket."""


class InversionFailureError(SolverError):
    """Density-to-potential inversion could not locate the target occupation."""


class InternalConsistencyError(SolverError):
    """Two independent evaluation routes disagree beyond the estimated error."""


class ResolutionError(InvalidInputError):
    """Requested more spectral data than the discretization can resolve."""


class CoverageError(InvalidInputError):
    """Query energy lies outside the computed part of the spectrum."""


class UnsupportedShellError(InvalidInputError):
    """Occupation pattern outside the closed-form exchange cases."""


class ApplicabilityError(InvalidInputError):
    """Requested bound constant does not apply to the density's spin state."""


class SingularFitError(SolverError):
    """Least-squares design matrix is rank deficient."""
