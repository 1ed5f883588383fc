"""
grlw Types
"""

from .mesh import LocalCoordinate, Mesh
from .spline_coefs import SplineCoefVector
from .model_params import ModelParams
from .time_params import TimeParams, MAX_INNER_ITERATIONS
from .solver_state import SolverState
from .diagnostics import RunDiagnostics
from .growth import GrowthFactorInputs
from .problem import Problem

__all__ = [
    "LocalCoordinate",
    "Mesh",
    "SplineCoefVector",
    "ModelParams",
    "TimeParams",
    "MAX_INNER_ITERATIONS",
    "SolverState",
    "RunDiagnostics",
    "GrowthFactorInputs",
    "Problem",
]
