"""
Spline Basis

Cubic B-spline trial functions and quadratic B-spline weight functions on
the reference element [0, 1], with h*eta = x - x_m. Shape index order is
always (m-1, m, m+1, m+2) for the cubics and (m-1, m, m+1) for the weights.
"""

import logging
from typing import Tuple, Union

import numpy as np

from ..exceptions import DomainError, ShapeError
from ..types import LocalCoordinate, Mesh, SplineCoefVector

logger = logging.getLogger(__name__)

EtaLike = Union[LocalCoordinate, float]


def _eta(eta: EtaLike) -> float:
    if isinstance(eta, LocalCoordinate):
        return eta.eta
    return LocalCoordinate(float(eta)).eta


def _etas(etas) -> np.ndarray:
    etas = np.atleast_1d(np.asarray(etas, dtype=np.float64))
    if np.any(~np.isfinite(etas)) or np.any((etas < 0.0) | (etas > 1.0)):
        raise DomainError("Local coordinates must lie in [0, 1]")
    return etas


def cubic_shape_matrix(etas) -> np.ndarray:
    """Cubic shape values at each eta, shape (len(etas), 4)"""
    eta = _etas(etas)
    r = 1.0 - eta
    return np.stack([
        r ** 3,
        1.0 + 3.0 * r + 3.0 * r ** 2 - 3.0 * r ** 3,
        1.0 + 3.0 * eta + 3.0 * eta ** 2 - 3.0 * eta ** 3,
        eta ** 3,
    ], axis=-1)


def cubic_deriv_matrix(etas, order: int = 1) -> np.ndarray:
    """Reference-space derivatives of the cubic shapes, shape (len(etas), 4)"""
    eta = _etas(etas)
    r = 1.0 - eta
    if order == 1:
        columns = [
            -3.0 * r ** 2,
            -3.0 - 6.0 * r + 9.0 * r ** 2,
            3.0 + 6.0 * eta - 9.0 * eta ** 2,
            3.0 * eta ** 2,
        ]
    elif order == 2:
        columns = [
            6.0 * r,
            6.0 - 18.0 * r,
            6.0 - 18.0 * eta,
            6.0 * eta,
        ]
    else:
        raise DomainError(f"Derivative order must be 1 or 2, got {order!r}")
    return np.stack(columns, axis=-1)


def quadratic_weight_matrix(etas) -> np.ndarray:
    """Quadratic weight values at each eta, shape (len(etas), 3)"""
    eta = _etas(etas)
    return np.stack([
        (1.0 - eta) ** 2,
        1.0 + 2.0 * eta - 2.0 * eta ** 2,
        eta ** 2,
    ], axis=-1)


def quadratic_weight_deriv_matrix(etas) -> np.ndarray:
    """Reference-space first derivatives of the weights, shape (len(etas), 3)"""
    eta = _etas(etas)
    return np.stack([
        -2.0 * (1.0 - eta),
        2.0 - 4.0 * eta,
        2.0 * eta,
    ], axis=-1)


def cubic_shape_values(eta: EtaLike) -> np.ndarray:
    """
    (phi_{m-1}, phi_m, phi_{m+1}, phi_{m+2}) at eta

    The four values always sum to 6.
    """
    return cubic_shape_matrix(_eta(eta))[0]


def cubic_shape_derivs(eta: EtaLike, order: int = 1) -> np.ndarray:
    """d/deta (order 1) or d2/deta2 (order 2) of the four cubic shapes"""
    return cubic_deriv_matrix(_eta(eta), order)[0]


def quadratic_weight_values(eta: EtaLike) -> np.ndarray:
    """(Phi_{m-1}, Phi_m, Phi_{m+1}) at eta, summing to 2"""
    return quadratic_weight_matrix(_eta(eta))[0]


def quadratic_weight_derivs(eta: EtaLike) -> np.ndarray:
    """d/deta of the three quadratic weights"""
    return quadratic_weight_deriv_matrix(_eta(eta))[0]


def _check(delta: SplineCoefVector, mesh: Mesh):
    if not delta.matches(mesh):
        raise ShapeError(
            f"Coefficient vector has {delta.delta.size} entries, mesh needs {mesh.N + 3}"
        )


def nodal_values(delta: SplineCoefVector, mesh: Mesh, m: int) -> Tuple[float, float, float]:
    """
    (u, u_x, u_xx) at knot x_m

    Derivatives are physical, i.e. already scaled by 1/h and 1/h^2.
    """
    _check(delta, mesh)
    if not 0 <= m <= mesh.N:
        raise IndexError(f"Node index {m} outside 0..{mesh.N}")
    left, mid, right = delta.delta[m:m + 3]
    h = mesh.h
    u = left + 4.0 * mid + right
    u_x = 3.0 * (right - left) / h
    u_xx = 6.0 * (left - 2.0 * mid + right) / (h * h)
    return float(u), float(u_x), float(u_xx)


def nodal_field(delta: SplineCoefVector, mesh: Mesh) -> np.ndarray:
    """u at every knot x_0..x_N"""
    _check(delta, mesh)
    d = delta.delta
    return d[:-2] + 4.0 * d[1:-1] + d[2:]


def sample_spline(delta: SplineCoefVector, mesh: Mesh, xs, order: int = 0) -> np.ndarray:
    """
    u (order 0) or its physical derivative (order 1, 2) at arbitrary points

    Example:
        ```python
        xs = np.linspace(mesh.a, mesh.b, 4001)
        u = sample_spline(delta, mesh, xs)
        ```
    """
    _check(delta, mesh)
    elements, etas = mesh.locate_many(np.atleast_1d(xs))
    if order == 0:
        shapes = cubic_shape_matrix(etas)
    else:
        shapes = cubic_deriv_matrix(etas, order) / mesh.h ** order
    offsets = elements[:, None] + np.arange(4)
    return np.einsum("ij,ij->i", shapes, delta.delta[offsets])


def evaluate_spline(delta: SplineCoefVector, mesh: Mesh, x: float) -> float:
    """u_N(x), the spline expansion at a point of [a, b]"""
    _check(delta, mesh)
    m, eta = mesh.locate(float(x))
    return float(cubic_shape_matrix(eta)[0] @ delta.window(m))
