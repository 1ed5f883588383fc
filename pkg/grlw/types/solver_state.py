"""
Solver State
"""

from dataclasses import dataclass
from typing import Optional

from .spline_coefs import SplineCoefVector


@dataclass(frozen=True)
class SolverState:
    """Coefficients at time t plus the previous level used by the predictor"""

    t: float
    """Current time"""

    delta: SplineCoefVector
    """Coefficients at the current level"""

    delta_prev: Optional[SplineCoefVector] = None
    """Coefficients one step back, absent before the first step"""

    step_index: int = 0
    """Number of accepted steps"""

    @classmethod
    def initial(cls, delta: SplineCoefVector, t: float = 0.0) -> 'SolverState':
        """State at the start of a run"""
        return cls(t=t, delta=delta)

    def advance(self, delta: SplineCoefVector, dt: float) -> 'SolverState':
        """State one step of size dt later"""
        return SolverState(
            t=self.t + dt,
            delta=delta,
            delta_prev=self.delta,
            step_index=self.step_index + 1
        )
