"""
Analytic Solutions and Diagnostics

Closed-form solitary waves, the initial profiles of the experiments, the
conserved quantities I1, I2, I3 of a spline field and its nodal error
norms against an exact solution.
"""

import logging
import math
from functools import lru_cache
from typing import Callable, List, Optional, Tuple

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from ..core.spline_basis import cubic_deriv_matrix, cubic_shape_matrix, nodal_field
from ..exceptions import DomainError, ShapeError
from ..types import Mesh, ModelParams, RunDiagnostics, SplineCoefVector

logger = logging.getLogger(__name__)

# Gauss-Legendre points per element, exact up to degree 13
QUADRATURE_POINTS = 7

ExactSolution = Callable[[np.ndarray, float], np.ndarray]


@lru_cache(maxsize=8)
def gauss_legendre_unit(n_points: int) -> Tuple[np.ndarray, np.ndarray]:
    """Nodes and weights of the n-point rule mapped to [0, 1]"""
    nodes, weights = np.polynomial.legendre.leggauss(n_points)
    nodes = 0.5 * (nodes + 1.0)
    weights = 0.5 * weights
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def _sech(z: np.ndarray) -> np.ndarray:
    a = np.exp(-np.abs(z))
    return 2.0 * a / (1.0 + a * a)


def _soliton_shape(c: float, p: int, mu: float) -> Tuple[float, float]:
    """(amplitude^p, inverse width) of a solitary wave, validating the radicand"""
    if not (mu > 0 and c > 0 and c * (c + 1.0) > 0):
        raise DomainError(f"No real solitary wave for c={c!r}, mu={mu!r}")
    radicand = c / (mu * (c + 1.0))
    height = c * (p + 2) / (2.0 * p)
    return height, 0.5 * p * math.sqrt(radicand)


def _profile(x, c: float, p: int, mu: float, centre: float) -> np.ndarray:
    height, k = _soliton_shape(c, p, mu)
    s = _sech(k * (np.asarray(x, dtype=np.float64) - centre))
    return (height * s * s) ** (1.0 / p)


def exact_soliton(x, t: float, params: ModelParams):
    """
    Travelling solitary wave at time t

    [c(p+2)/(2p) sech^2(k (x - (c+1)t - x0))]^(1/p) with
    k = (p/2) sqrt(c / (mu (c+1))). Works on scalars and arrays.
    """
    values = _profile(x, params.c, params.p, params.mu, params.x0 + params.speed * t)
    return float(values) if np.ndim(values) == 0 else values


def exact_soliton_slope(x, t: float, params: ModelParams):
    """Spatial derivative of :func:`exact_soliton`"""
    _, k = _soliton_shape(params.c, params.p, params.mu)
    xi = k * (np.asarray(x, dtype=np.float64) - params.x0 - params.speed * t)
    u = _profile(x, params.c, params.p, params.mu, params.x0 + params.speed * t)
    slope = -(2.0 * k / params.p) * u * np.tanh(xi)
    return float(slope) if np.ndim(slope) == 0 else slope


def soliton_solution(params: ModelParams) -> ExactSolution:
    """``exact(x, t)`` closure for the run loop"""
    _soliton_shape(params.c, params.p, params.mu)

    def exact(x, t: float):
        return exact_soliton(x, t, params)

    return exact


def two_soliton_initial(x, c1: float, c2: float, x1: float, x2: float, p: int, mu: float):
    """Sum of two solitary waves centred at x1 and x2"""
    values = _profile(x, c1, p, mu, x1) + _profile(x, c2, p, mu, x2)
    return float(values) if np.ndim(values) == 0 else values


def maxwellian_initial(x, centre: float = 40.0):
    """Gaussian pulse exp(-(x - 40)^2)"""
    values = np.exp(-(np.asarray(x, dtype=np.float64) - centre) ** 2)
    return float(values) if np.ndim(values) == 0 else values


def _element_samples(delta: SplineCoefVector, mesh: Mesh, n_points: int):
    if not delta.matches(mesh):
        raise ShapeError(
            f"Coefficient vector has {delta.delta.size} entries, mesh needs {mesh.N + 3}"
        )
    etas, weights = gauss_legendre_unit(n_points)
    windows = sliding_window_view(delta.delta, 4)
    u = windows @ cubic_shape_matrix(etas).T
    u_x = windows @ cubic_deriv_matrix(etas, 1).T / mesh.h
    return u, u_x, weights * mesh.h


def invariants(
    delta: SplineCoefVector,
    mesh: Mesh,
    mu: float,
    n_points: int = QUADRATURE_POINTS
) -> Tuple[float, float, float]:
    """
    Mass, momentum and energy of the spline field

    I1 = int u, I2 = int u^2 + mu u_x^2, I3 = int u^4 - mu u_x^2, each by
    Gauss-Legendre quadrature on every element.
    """
    u, u_x, weights = _element_samples(delta, mesh, n_points)
    u2 = u * u
    ux2 = u_x * u_x
    I1 = float(np.sum(u @ weights))
    I2 = float(np.sum((u2 + mu * ux2) @ weights))
    I3 = float(np.sum((u2 * u2 - mu * ux2) @ weights))
    return I1, I2, I3


def reference_invariants(
    params: ModelParams,
    a: float,
    b: float,
    t: float = 0.0,
    panels: int = 400,
    n_points: int = 16
) -> Tuple[float, float, float]:
    """I1, I2, I3 of the exact solitary wave by composite Gauss quadrature"""
    etas, weights = gauss_legendre_unit(n_points)
    width = (b - a) / panels
    xs = (a + width * (np.arange(panels)[:, None] + etas[None, :])).ravel()
    w = np.tile(weights * width, panels)
    u = exact_soliton(xs, t, params)
    u_x = exact_soliton_slope(xs, t, params)
    I1 = float(np.dot(w, u))
    I2 = float(np.dot(w, u * u + params.mu * u_x * u_x))
    I3 = float(np.dot(w, u ** 4 - params.mu * u_x * u_x))
    return I1, I2, I3


def error_norms(delta: SplineCoefVector, mesh: Mesh, exact: Callable) -> Tuple[float, float]:
    """
    Discrete L2 and L-infinity errors over the knots x_0..x_N

    L2 = sqrt(h sum |u_exact(x_j) - u_N(x_j)|^2), Linf = max_j |...|.
    """
    diff = np.asarray(exact(mesh.nodes), dtype=np.float64) - nodal_field(delta, mesh)
    L2 = math.sqrt(mesh.h * float(np.dot(diff, diff)))
    Linf = float(np.max(np.abs(diff)))
    return L2, Linf


def error_profile(delta: SplineCoefVector, mesh: Mesh, exact: Callable) -> Tuple[np.ndarray, np.ndarray]:
    """(x_j, u_exact(x_j) - u_N(x_j)) at every knot"""
    return mesh.nodes, np.asarray(exact(mesh.nodes), dtype=np.float64) - nodal_field(delta, mesh)


def wave_peaks(
    u: np.ndarray,
    nodes: np.ndarray,
    rel_threshold: float = 0.1
) -> List[Tuple[float, float]]:
    """
    Local maxima of a nodal field, tallest first

    Crests lower than ``rel_threshold`` times the global maximum are
    dropped.
    """
    u = np.asarray(u, dtype=np.float64)
    if u.size < 3:
        return []
    top = float(np.max(u))
    if top <= 0:
        return []
    inner = np.arange(1, u.size - 1)
    crest = (u[inner] >= u[inner - 1]) & (u[inner] > u[inner + 1]) & (u[inner] >= rel_threshold * top)
    idx = inner[crest]
    order = np.argsort(-u[idx], kind="stable")
    return [(float(nodes[i]), float(u[i])) for i in idx[order]]


def collect_diagnostics(
    delta: SplineCoefVector,
    mesh: Mesh,
    mu: float,
    t: float,
    exact: Optional[ExactSolution] = None
) -> RunDiagnostics:
    """Invariants, peak data and (with an exact solution) error norms at time t"""
    I1, I2, I3 = invariants(delta, mesh, mu)
    u = nodal_field(delta, mesh)
    nodes = mesh.nodes
    peak = int(np.argmax(u))

    L2 = Linf = None
    if exact is not None:
        L2, Linf = error_norms(delta, mesh, lambda x: exact(x, t))

    return RunDiagnostics(
        t=t,
        I1=I1,
        I2=I2,
        I3=I3,
        L2=L2,
        Linf=Linf,
        amplitude=float(u[peak]),
        peak_x=float(nodes[peak]),
        peaks=tuple(wave_peaks(u, nodes))
    )
