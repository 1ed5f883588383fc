"""
grlw - Generalized Regularized Long Wave Solver

Petrov-Galerkin finite elements with cubic B-spline trial functions,
quadratic B-spline weights and Crank-Nicolson time stepping, plus the
experiment harness for solitary-wave, collision and Maxwellian runs.
"""

from .__version__ import __version__, __version_info__

__author__ = "grlw developers"
__license__ = "MIT"
__description__ = "B-spline Petrov-Galerkin solver for the generalized regularized long wave equation"

from .types import (
    LocalCoordinate,
    Mesh,
    SplineCoefVector,
    ModelParams,
    TimeParams,
    SolverState,
    RunDiagnostics,
    GrowthFactorInputs,
    Problem,
)
from .exceptions import (
    GrlwError,
    ConfigurationError,
    DomainError,
    ShapeError,
    SingularMatrixError,
    SolverError,
    StepFailure,
    DivergenceError,
    OutputError,
)
# core must be imported before analysis: the integrator pulls in diagnostics
from . import core
from . import analysis
from .core import CrankNicolsonIntegrator, fit_initial_coefficients, run, step
from .analysis import exact_soliton, invariants, error_norms, stability_scan

__all__ = [
    "__version__",
    "__version_info__",

    # Types
    "LocalCoordinate",
    "Mesh",
    "SplineCoefVector",
    "ModelParams",
    "TimeParams",
    "SolverState",
    "RunDiagnostics",
    "GrowthFactorInputs",
    "Problem",

    # Exceptions
    "GrlwError",
    "ConfigurationError",
    "DomainError",
    "ShapeError",
    "SingularMatrixError",
    "SolverError",
    "StepFailure",
    "DivergenceError",
    "OutputError",

    # Solver
    "core",
    "analysis",
    "CrankNicolsonIntegrator",
    "fit_initial_coefficients",
    "run",
    "step",
    "exact_soliton",
    "invariants",
    "error_norms",
    "stability_scan",
]
