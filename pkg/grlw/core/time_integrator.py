"""
Time Integrator

Crank-Nicolson stepping of the spline coefficients. Each step linearizes
the transport coefficient about an extrapolated predictor, solves, then
re-linearizes about the Crank-Nicolson midpoint for a fixed number of
corrector passes.
"""

import logging
from typing import Callable, List, Optional

import numpy as np

from ..analysis.analytic_solutions import ExactSolution, collect_diagnostics
from ..exceptions import DivergenceError, ShapeError, SingularMatrixError, SolverError, StepFailure
from ..types import Mesh, ModelParams, RunDiagnostics, SolverState, SplineCoefVector, TimeParams
from .assembly import apply_boundary_elimination, assemble_with_lambdas, reconstruct_boundary
from .banded_linalg import banded_lu_solve
from .element_forms import beta, element_lambdas

logger = logging.getLogger(__name__)

Observer = Callable[[SolverState, RunDiagnostics], None]

# Report times further than this (in steps) from the grid are snapped with a warning
GRID_TOLERANCE = 1e-9


class CrankNicolsonIntegrator:
    """
    Fixed-step integrator for one problem on one mesh

    Example:
        ```python
        integrator = CrankNicolsonIntegrator(params, mesh, tp)
        state = integrator.step(SolverState.initial(delta0))
        ```
    """

    def __init__(self, params: ModelParams, mesh: Mesh, tp: TimeParams):
        self.params = params
        self.mesh = mesh
        self.tp = tp
        self.beta = beta(params.mu, mesh.h)
        self.logger = logger

    def solve_frozen(
        self,
        delta: SplineCoefVector,
        lambdas: np.ndarray,
        dt: float,
        t: float = 0.0
    ) -> SplineCoefVector:
        """
        One linear step with given per-element lambdas

        ``dt`` may be negative, which runs the linear scheme backwards.
        """
        system = apply_boundary_elimination(assemble_with_lambdas(lambdas, self.beta, dt))
        try:
            interior = banded_lu_solve(system.lhs, system.rhs(delta))
        except SingularMatrixError as e:
            raise StepFailure(f"Step at t={t:g} failed: {e}", t=t, row=e.row) from e
        if not np.all(np.isfinite(interior)):
            raise DivergenceError(f"Non-finite coefficients at t={t:g}", t=t)
        return reconstruct_boundary(interior)

    def _finite(self, values: np.ndarray, t: float, what: str) -> SplineCoefVector:
        if not np.all(np.isfinite(values)):
            raise DivergenceError(f"Non-finite {what} at t={t:g}", t=t)
        return SplineCoefVector(values)

    def _lambdas(self, delta: SplineCoefVector, t: float) -> np.ndarray:
        with np.errstate(over="ignore", invalid="ignore"):
            lambdas = element_lambdas(delta, self.mesh, self.params)
        if not np.all(np.isfinite(lambdas)):
            raise DivergenceError(f"Non-finite transport coefficient at t={t:g}", t=t)
        return lambdas

    def predictor(self, state: SolverState) -> SplineCoefVector:
        """delta^n + (delta^n - delta^{n-1}) / 2, or delta^n on the first step"""
        if state.delta_prev is None:
            return state.delta
        with np.errstate(over="ignore", invalid="ignore"):
            values = state.delta.delta + 0.5 * (state.delta.delta - state.delta_prev.delta)
        return self._finite(values, state.t + self.tp.dt, "predictor")

    def step(self, state: SolverState) -> SolverState:
        """Advance ``state`` by one time step"""
        dt = self.tp.dt
        t_next = state.t + dt
        current = state.delta

        lambdas = self._lambdas(self.predictor(state), t_next)
        latest = self.solve_frozen(current, lambdas, dt, t_next)

        for iteration in range(self.tp.inner_iterations):
            with np.errstate(over="ignore", invalid="ignore"):
                midpoint = self._finite(0.5 * (current.delta + latest.delta), t_next, "midpoint")
            lambdas = self._lambdas(midpoint, t_next)
            corrected = self.solve_frozen(current, lambdas, dt, t_next)
            if self.logger.isEnabledFor(logging.DEBUG):
                change = float(np.max(np.abs(corrected.delta - latest.delta)))
                self.logger.debug(f"t={t_next:g} inner iteration {iteration + 1}: correction {change:.3e}")
            latest = corrected

        return state.advance(latest, dt)

    def _report_schedule(self) -> List[tuple]:
        times = self.tp.report_times or ((0.0, self.tp.t_end) if self.tp.t_end > 0 else (0.0,))
        schedule = []
        for t in times:
            exact_steps = t / self.tp.dt
            k = int(round(exact_steps))
            if abs(exact_steps - k) > GRID_TOLERANCE:
                self.logger.warning(f"Report time {t} is not on the step grid, using t={k * self.tp.dt:g}")
                t = k * self.tp.dt
            schedule.append((k, t))
        return schedule

    def run(
        self,
        initial: SplineCoefVector,
        observer: Optional[Observer] = None,
        exact: Optional[ExactSolution] = None
    ) -> List[RunDiagnostics]:
        """
        Step from t = 0 to t_end, collecting diagnostics at each report time

        On a step failure the raised error carries the rows collected so
        far in ``diagnostics``.
        """
        if not initial.matches(self.mesh):
            raise ShapeError(
                f"Initial vector has {initial.delta.size} entries, mesh needs {self.mesh.N + 3}"
            )

        schedule = self._report_schedule()
        n_steps = self.tp.n_steps
        collected: List[RunDiagnostics] = []
        state = SolverState.initial(initial)
        cursor = 0

        self.logger.info(
            f"Running p={self.params.p} mu={self.params.mu:g} on N={self.mesh.N} "
            f"for {n_steps} steps of dt={self.tp.dt:g}"
        )

        try:
            for k in range(n_steps + 1):
                if k > 0:
                    state = self.step(state)
                while cursor < len(schedule) and schedule[cursor][0] == k:
                    t_report = schedule[cursor][1]
                    row = collect_diagnostics(state.delta, self.mesh, self.params.mu, t_report, exact)
                    collected.append(row)
                    self.logger.info(
                        f"t={t_report:g} I1={row.I1:.6f} I2={row.I2:.6f} I3={row.I3:.6f}"
                    )
                    if observer is not None:
                        observer(state, row)
                    cursor += 1
        except SolverError as e:
            e.diagnostics = list(collected)
            self.logger.error(f"Run aborted: {e}")
            raise

        return collected


def step(state: SolverState, params: ModelParams, mesh: Mesh, tp: TimeParams) -> SolverState:
    """Advance ``state`` by one Crank-Nicolson step"""
    return CrankNicolsonIntegrator(params, mesh, tp).step(state)


def run(
    initial: SplineCoefVector,
    params: ModelParams,
    mesh: Mesh,
    tp: TimeParams,
    observer: Optional[Observer] = None,
    exact: Optional[ExactSolution] = None
) -> List[RunDiagnostics]:
    """Integrate from ``initial`` to ``tp.t_end`` and return the report rows"""
    return CrankNicolsonIntegrator(params, mesh, tp).run(initial, observer=observer, exact=exact)
