"""
Element Forms

Constant 3x4 element matrices of the Petrov-Galerkin weak form, rows
indexed by the quadratic weights (m-1, m, m+1) and columns by the cubic
trials (m-1, m, m+1, m+2):

    A = int Phi_i phi_j,  B = int Phi_i' phi_j',  C = [Phi_i phi_j']_0^1,
    D = int Phi_i phi_j'

all on the reference element with derivatives in eta.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ..exceptions import DomainError
from ..types import Mesh, ModelParams, SplineCoefVector
from .spline_basis import nodal_field

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ElementMatrices:
    """The four constant element matrices, each shape (3, 4)"""

    A: np.ndarray
    """Weight times trial"""

    B: np.ndarray
    """Weight slope times trial slope"""

    C: np.ndarray
    """Boundary term of the integrated dispersion"""

    D: np.ndarray
    """Weight times trial slope"""

    def mass(self, beta_value: float) -> np.ndarray:
        """A + beta (B - C), the time-derivative operator of one element"""
        return self.A + beta_value * (self.B - self.C)


def _frozen(values, scale: float) -> np.ndarray:
    matrix = np.asarray(values, dtype=np.float64) * scale
    matrix.setflags(write=False)
    return matrix


@lru_cache(maxsize=1)
def element_matrices() -> ElementMatrices:
    """The closed-form element matrices (shared read-only arrays)"""
    return ElementMatrices(
        A=_frozen([[10, 71, 38, 1], [19, 221, 221, 19], [1, 38, 71, 10]], 1.0 / 60.0),
        B=_frozen([[3, 5, -7, -1], [-2, 2, 2, -2], [-1, -7, 5, 3]], 0.5),
        C=_frozen([[1, 0, -1, 0], [1, -1, -1, 1], [0, -1, 0, 1]], 3.0),
        D=_frozen([[-6, -7, 12, 1], [-13, -41, 41, 13], [-1, -12, 7, 6]], 0.1),
    )


def beta(mu: float, h: float) -> float:
    """Dispersion coefficient mu / h^2"""
    if not h > 0:
        raise DomainError(f"Element size must be positive, got {h!r}")
    return mu / (h * h)


def integer_power(values, p: int):
    """values**p by repeated multiplication"""
    result = values
    for _ in range(p - 1):
        result = result * values
    return result


def frozen_lambda(u_hat: float, params: ModelParams, h: float) -> float:
    """lambda = (1 + p(p+1) u_hat^p) / h for a given lumped value"""
    return (1.0 + params.nonlinear_factor * integer_power(u_hat, params.p)) / h


def lumped_lambda(delta: SplineCoefVector, m: int, params: ModelParams, h: float) -> float:
    """
    Linearized transport coefficient of element m

    The element's u is lumped to the mean of its two nodal values.
    """
    if not 0 <= m < delta.n_elements:
        raise IndexError(f"Element index {m} outside 0..{delta.n_elements - 1}")
    d = delta.delta
    u_left = d[m] + 4.0 * d[m + 1] + d[m + 2]
    u_right = d[m + 1] + 4.0 * d[m + 2] + d[m + 3]
    return frozen_lambda(0.5 * (u_left + u_right), params, h)


def element_lambdas(delta: SplineCoefVector, mesh: Mesh, params: ModelParams) -> np.ndarray:
    """lumped_lambda of every element, shape (N,)"""
    u = nodal_field(delta, mesh)
    u_hat = 0.5 * (u[:-1] + u[1:])
    return (1.0 + params.nonlinear_factor * integer_power(u_hat, params.p)) / mesh.h
