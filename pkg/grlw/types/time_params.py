"""
Time Stepping Parameters
"""

import math
from dataclasses import dataclass, field
from typing import Tuple

from ..exceptions import ConfigurationError
from .mesh import integer_ratio

MAX_INNER_ITERATIONS = 5


@dataclass(frozen=True)
class TimeParams:
    """
    Fixed-step Crank-Nicolson schedule

    Example:
        ```python
        tp = TimeParams(dt=0.025, t_end=10.0, report_times=(0, 2, 4, 6, 8, 10))
        tp.n_steps  # 400
        ```
    """

    dt: float
    """Time step"""

    t_end: float
    """Final time, an integer multiple of dt (0 means no steps)"""

    inner_iterations: int = 2
    """Corrector passes per step re-linearizing lambda (0-5)"""

    report_times: Tuple[float, ...] = field(default_factory=tuple)
    """Times at which diagnostics are collected, sorted, within [0, t_end]"""

    def __post_init__(self):
        """Validate parameters"""
        if not (math.isfinite(self.dt) and self.dt > 0):
            raise ConfigurationError(f"Time step must be positive, got {self.dt!r}", key="dt")

        if not (math.isfinite(self.t_end) and self.t_end >= 0):
            raise ConfigurationError(f"Final time must be >= 0, got {self.t_end!r}", key="t_end")

        if isinstance(self.inner_iterations, bool) or self.inner_iterations not in range(
            MAX_INNER_ITERATIONS + 1
        ):
            raise ConfigurationError(
                f"Inner iterations must be 0..{MAX_INNER_ITERATIONS}, got {self.inner_iterations!r}",
                key="inner_iterations"
            )

        # ratio check raises when t_end is not a whole number of steps
        integer_ratio(self.t_end, self.dt, key="dt")

        times = tuple(float(t) for t in self.report_times)
        if list(times) != sorted(times):
            raise ConfigurationError("Report times must be sorted", key="report_times")
        if times and (times[0] < 0 or times[-1] > self.t_end + 1e-9 * max(1.0, self.t_end)):
            raise ConfigurationError(
                f"Report times must lie in [0, {self.t_end}]", key="report_times"
            )
        object.__setattr__(self, "report_times", times)

    @property
    def n_steps(self) -> int:
        """Number of steps, round(t_end / dt)"""
        return integer_ratio(self.t_end, self.dt, key="dt")
