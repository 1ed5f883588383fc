"""
Assembly and Boundary Conditions

Builds the Crank-Nicolson step system row by row: row w is the weak form
tested against the quadratic weight Phi_w (w = 0..N), summed over the
elements of [a, b] that Phi_w touches. Each row is a six-entry stencil over
delta_{w-2}..delta_{w+3}. The boundary conditions u(a) = u(b) = 0 remove
delta_{-1} and delta_{N+1}, leaving an (N+1)x(N+1) band system with two
sub-diagonals and three super-diagonals.
"""

import logging
from dataclasses import dataclass
from typing import Callable

import numpy as np

from ..exceptions import ConfigurationError, ShapeError
from ..types import Mesh, ModelParams, SplineCoefVector
from .banded_linalg import BandedMatrix, banded_lu_solve
from .element_forms import beta, element_lambdas, element_matrices

logger = logging.getLogger(__name__)

STENCIL_WIDTH = 6
LOWER_BANDWIDTH = 2
UPPER_BANDWIDTH = 3


@dataclass(frozen=True)
class GammaStencil:
    """Interior row of the step system for a uniform lambda"""

    gamma: np.ndarray
    """Implicit side gamma_1..gamma_6 over delta_{m-2}..delta_{m+3}"""

    explicit: np.ndarray
    """Explicit side, gamma_6..gamma_1"""

    @classmethod
    def uniform(cls, beta_value: float, lam: float, dt: float) -> 'GammaStencil':
        """Closed-form gamma list for constant lambda"""
        b, ld = beta_value, lam * dt
        gamma = np.array([
            1.0 / 60.0 - b / 2.0 - ld / 20.0,
            57.0 / 60.0 - 9.0 * b / 2.0 - 25.0 * ld / 20.0,
            302.0 / 60.0 + 5.0 * b - 2.0 * ld,
            302.0 / 60.0 + 5.0 * b + 2.0 * ld,
            57.0 / 60.0 - 9.0 * b / 2.0 + 25.0 * ld / 20.0,
            1.0 / 60.0 - b / 2.0 + ld / 20.0,
        ])
        return cls(gamma=gamma, explicit=gamma[::-1].copy())


@dataclass(frozen=True)
class RawSystem:
    """Step system over all N+3 coefficients, before boundary elimination"""

    implicit: np.ndarray
    """Row stencils acting on delta^{n+1}, shape (N+1, 6)"""

    explicit: np.ndarray
    """Row stencils acting on delta^n, shape (N+1, 6)"""

    @property
    def n_elements(self) -> int:
        return self.implicit.shape[0] - 1


@dataclass(frozen=True)
class BoundaryElimination:
    """
    Dirichlet elimination of the two phantom coefficients

    u(a) = delta_{-1} + 4 delta_0 + delta_1 = 0 and the mirror relation
    at x = b give delta_{-1} and delta_{N+1} from the interior unknowns.
    """

    near: float = -4.0
    """Weight of the coefficient at the boundary knot"""

    far: float = -1.0
    """Weight of its inner neighbour"""

    def left(self, interior: np.ndarray) -> float:
        return self.near * interior[0] + self.far * interior[1]

    def right(self, interior: np.ndarray) -> float:
        return self.near * interior[-1] + self.far * interior[-2]

    def reconstruct(self, interior: np.ndarray) -> SplineCoefVector:
        """Full coefficient vector from delta_0..delta_N"""
        interior = np.asarray(interior, dtype=np.float64)
        full = np.empty(interior.size + 2)
        full[1:-1] = interior
        full[0] = self.left(interior)
        full[-1] = self.right(interior)
        return SplineCoefVector(full)


DIRICHLET = BoundaryElimination()


def reconstruct_boundary(interior: np.ndarray) -> SplineCoefVector:
    """delta_{-1}..delta_{N+1} from the reduced unknowns delta_0..delta_N"""
    return DIRICHLET.reconstruct(interior)


@dataclass(frozen=True)
class GlobalSystem:
    """Reduced step system lhs delta^{n+1} = rhs_matrix delta^n"""

    lhs: BandedMatrix
    """Implicit side, (N+1)x(N+1)"""

    rhs_matrix: BandedMatrix
    """Explicit side with the same band layout"""

    elimination: BoundaryElimination = DIRICHLET
    """How delta_{-1} and delta_{N+1} follow from the unknowns"""

    def rhs(self, delta: SplineCoefVector) -> np.ndarray:
        """Explicit side applied to the current coefficients"""
        if delta.interior.size != self.rhs_matrix.n:
            raise ShapeError(
                f"Coefficient vector with {delta.interior.size} unknowns, system has {self.rhs_matrix.n}"
            )
        return self.rhs_matrix.matvec(delta.interior)

    def solve(self, delta: SplineCoefVector) -> np.ndarray:
        """Reduced unknowns at the next level"""
        return banded_lu_solve(self.lhs, self.rhs(delta))


def assemble_with_lambdas(lambdas: np.ndarray, beta_value: float, dt: float) -> RawSystem:
    """
    Sum element contributions for given per-element lambdas

    Element e (local weight i, local trial j) lands in row w = e - 1 + i,
    stencil slot s = j - i + 2. Weights outside 0..N and elements outside
    [a, b] contribute nothing.
    """
    lambdas = np.asarray(lambdas, dtype=np.float64)
    n_elements = lambdas.size
    if n_elements < 5:
        raise ConfigurationError(f"Assembly needs N >= 5 elements, got {n_elements}", key="N")

    matrices = element_matrices()
    mass = matrices.mass(beta_value)
    implicit = np.zeros((n_elements + 1, STENCIL_WIDTH))
    explicit = np.zeros((n_elements + 1, STENCIL_WIDTH))

    for i in range(3):
        elements = np.arange(max(0, 1 - i), n_elements)
        rows = elements - 1 + i
        half_transport = 0.5 * dt * lambdas[elements]
        for j in range(4):
            slot = j - i + 2
            transport = half_transport * matrices.D[i, j]
            implicit[rows, slot] += mass[i, j] + transport
            explicit[rows, slot] += mass[i, j] - transport

    return RawSystem(implicit=implicit, explicit=explicit)


def assemble_raw(delta_star: SplineCoefVector, params: ModelParams, mesh: Mesh, dt: float) -> RawSystem:
    """Raw system linearized about ``delta_star``"""
    if not delta_star.matches(mesh):
        raise ShapeError(
            f"Coefficient vector has {delta_star.delta.size} entries, mesh needs {mesh.N + 3}"
        )
    lambdas = element_lambdas(delta_star, mesh, params)
    return assemble_with_lambdas(lambdas, beta(params.mu, mesh.h), dt)


def _eliminate(stencils: np.ndarray, elimination: BoundaryElimination) -> np.ndarray:
    reduced = stencils.copy()
    last = reduced.shape[0] - 1

    # delta_{-1} sits in slot 1 - w of rows 0 and 1
    for w in (0, 1):
        slot = 1 - w
        g = reduced[w, slot]
        reduced[w, slot] = 0.0
        reduced[w, slot + 1] += elimination.near * g
        reduced[w, slot + 2] += elimination.far * g

    # delta_{N+1} sits in slot N + 3 - w of rows N-2..N
    for w in (last - 2, last - 1, last):
        slot = last + 3 - w
        g = reduced[w, slot]
        reduced[w, slot] = 0.0
        reduced[w, slot - 1] += elimination.near * g
        reduced[w, slot - 2] += elimination.far * g

    return reduced


def apply_boundary_elimination(raw: RawSystem, elimination: BoundaryElimination = DIRICHLET) -> GlobalSystem:
    """Fold delta_{-1} and delta_{N+1} into the neighbouring columns"""
    lhs = BandedMatrix.from_row_stencils(
        _eliminate(raw.implicit, elimination), LOWER_BANDWIDTH, UPPER_BANDWIDTH
    )
    rhs_matrix = BandedMatrix.from_row_stencils(
        _eliminate(raw.explicit, elimination), LOWER_BANDWIDTH, UPPER_BANDWIDTH
    )
    return GlobalSystem(lhs=lhs, rhs_matrix=rhs_matrix, elimination=elimination)


def assemble_step_system(
    delta_star: SplineCoefVector,
    params: ModelParams,
    mesh: Mesh,
    dt: float
) -> GlobalSystem:
    """
    Reduced Crank-Nicolson system with lambda evaluated at ``delta_star``

    Example:
        ```python
        system = assemble_step_system(delta, params, mesh, dt=0.025)
        interior = system.solve(delta)
        delta_next = reconstruct_boundary(interior)
        ```
    """
    if not dt > 0:
        raise ConfigurationError(f"Time step must be positive, got {dt!r}", key="dt")
    return apply_boundary_elimination(assemble_raw(delta_star, params, mesh, dt))


def _sample(f1: Callable, nodes: np.ndarray) -> np.ndarray:
    try:
        values = np.asarray(f1(nodes), dtype=np.float64)
    except TypeError:
        values = np.array([f1(float(x)) for x in nodes], dtype=np.float64)
    return np.broadcast_to(values, nodes.shape).astype(np.float64)


def initial_fit_system(mesh: Mesh) -> BandedMatrix:
    """(N+3)x(N+3) collocation matrix: end slopes plus nodal values"""
    n = mesh.N + 3
    slope = 3.0 / mesh.h
    stencils = np.zeros((n, 5))
    stencils[0] = (0.0, 0.0, -slope, 0.0, slope)
    stencils[1:-1] = (0.0, 1.0, 4.0, 1.0, 0.0)
    stencils[-1] = (-slope, 0.0, slope, 0.0, 0.0)
    return BandedMatrix.from_row_stencils(stencils, 2, 2)


def fit_initial_coefficients(f1: Callable, mesh: Mesh) -> SplineCoefVector:
    """
    Coefficients whose spline matches f1 at every knot with zero end slopes

    ``f1`` may be vectorized over a numpy array or a plain scalar function.
    """
    values = _sample(f1, mesh.nodes)
    if not np.all(np.isfinite(values)):
        raise ConfigurationError("Initial condition is not finite on the mesh", key="initial")
    rhs = np.zeros(mesh.N + 3)
    rhs[1:-1] = values
    delta = banded_lu_solve(initial_fit_system(mesh), rhs)
    logger.debug(f"Fitted initial coefficients on {mesh.N} elements")
    return SplineCoefVector(delta)

