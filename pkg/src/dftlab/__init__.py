"""dftlab: numerical laboratory for exact conditions in density functional
theory — asymmetric Hubbard dimer adiabatic connection, semiclassical spectral
staircases, Lieb-Oxford bound checks, Thomas-Fermi large-Z asymptotics, and
density-corrected error decompositions.
"""

from . import density_metrics, dimer, lieb_oxford, semiclassics, tf_largez
from .errors import (
    ApplicabilityError,
    CoverageError,
    DftLabError,
    InternalConsistencyError,
    InvalidInputError,
    InversionFailureError,
    ResolutionError,
    SingularFitError,
    SolverError,
    UnsupportedShellError,
)

__version__ = "0.1.0"

__all__ = [
    "dimer",
    "semiclassics",
    "lieb_oxford",
    "tf_largez",
    "density_metrics",
    "DftLabError",
    "InvalidInputError",
    "SolverError",
    "InversionFailureError",
    "InternalConsistencyError",
    "ResolutionError",
    "CoverageError",
    "UnsupportedShellError",
    "ApplicabilityError",
    "SingularFitError",
    "__version__",
]
