"""
grlw Exceptions
"""

from typing import Any, List, Optional


class GrlwError(Exception):
    """Base exception for grlw"""
    pass


class ConfigurationError(GrlwError):
    """Invalid mesh, time or run configuration"""

    def __init__(self, message: str, key: Optional[str] = None):
        super().__init__(message)
        self.key = key


class DomainError(GrlwError, ValueError):
    """Argument outside the mathematical domain of an operation"""
    pass


class ShapeError(GrlwError, ValueError):
    """Dimension mismatch between a matrix and a vector"""
    pass


class SingularMatrixError(GrlwError):
    """Zero (or vanishing) pivot met during banded factorization"""

    def __init__(self, message: str, row: Optional[int] = None):
        super().__init__(message)
        self.row = row


class SolverError(GrlwError):
    """Time integration errors"""

    def __init__(self, message: str, t: Optional[float] = None):
        super().__init__(message)
        self.t = t
        # rows collected before the failure, filled in by the run loop
        self.diagnostics: List[Any] = []


class StepFailure(SolverError):
    """A time step could not be completed"""

    def __init__(self, message: str, t: Optional[float] = None, row: Optional[int] = None):
        super().__init__(message, t=t)
        self.row = row


class DivergenceError(SolverError):
    """Non-finite values produced during a step"""
    pass


class OutputError(GrlwError):
    """Writing an experiment artifact failed"""

    def __init__(self, message: str, path: Optional[str] = None):
        super().__init__(message)
        self.path = path
