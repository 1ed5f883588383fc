"""
Spline Coefficient Vector
"""

from dataclasses import dataclass

import numpy as np

from ..exceptions import DomainError
from .mesh import Mesh


@dataclass
class SplineCoefVector:
    """
    Cubic B-spline coefficients delta_{-1}..delta_{N+1}

    ``delta[j + 1]`` holds delta_j, so the array has N + 3 entries.
    """

    delta: np.ndarray
    """Coefficients, shape (N + 3,)"""

    def __post_init__(self):
        self.delta = np.asarray(self.delta, dtype=np.float64)
        if self.delta.ndim != 1 or self.delta.size < 8:
            raise DomainError(
                f"Coefficient vector needs N + 3 >= 8 entries, got shape {self.delta.shape}"
            )
        if not np.all(np.isfinite(self.delta)):
            raise DomainError("Coefficient vector has non-finite entries")

    @classmethod
    def zeros(cls, mesh: Mesh) -> 'SplineCoefVector':
        """All-zero field on ``mesh``"""
        return cls(np.zeros(mesh.N + 3))

    @classmethod
    def constant(cls, mesh: Mesh, value: float) -> 'SplineCoefVector':
        """Coefficients reproducing u = value everywhere"""
        return cls(np.full(mesh.N + 3, value / 6.0))

    @property
    def n_elements(self) -> int:
        """Element count N the vector belongs to"""
        return self.delta.size - 3

    @property
    def interior(self) -> np.ndarray:
        """delta_0..delta_N, the unknowns left after boundary elimination"""
        return self.delta[1:-1]

    def coef(self, j: int) -> float:
        """delta_j for j in -1..N+1"""
        if not -1 <= j <= self.n_elements + 1:
            raise IndexError(f"Coefficient index {j} outside -1..{self.n_elements + 1}")
        return float(self.delta[j + 1])

    def window(self, m: int) -> np.ndarray:
        """(delta_{m-1}, delta_m, delta_{m+1}, delta_{m+2}) of element m"""
        if not 0 <= m < self.n_elements:
            raise IndexError(f"Element index {m} outside 0..{self.n_elements - 1}")
        return self.delta[m:m + 4]

    def matches(self, mesh: Mesh) -> bool:
        """Whether the vector has the size ``mesh`` expects"""
        return self.n_elements == mesh.N

    def copy(self) -> 'SplineCoefVector':
        return SplineCoefVector(self.delta.copy())
