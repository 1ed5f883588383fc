"""
Growth Factor Inputs
"""

import math
from dataclasses import dataclass

from ..exceptions import DomainError


@dataclass(frozen=True)
class GrowthFactorInputs:
    """One Fourier mode of the linearized scheme"""

    theta: float
    """Phase k*h in radians"""

    beta: float
    """mu / h^2"""

    lambda_bar: float
    """Frozen linearized transport coefficient"""

    dt: float
    """Time step"""

    h: float = 1.0
    """Element size"""

    def __post_init__(self):
        values = (self.theta, self.beta, self.lambda_bar, self.dt, self.h)
        if not all(math.isfinite(v) for v in values):
            raise DomainError("Growth factor inputs must be finite")
        if self.h <= 0:
            raise DomainError(f"Element size must be positive, got {self.h!r}")
