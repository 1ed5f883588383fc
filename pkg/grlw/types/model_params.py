"""
Model Parameters
"""

import math
from dataclasses import dataclass

from ..exceptions import ConfigurationError


@dataclass(frozen=True)
class ModelParams:
    """
    Physical parameters of u_t + u_x + p(p+1) u^p u_x - mu u_xxt = 0

    Example:
        ```python
        # Single solitary wave of amplitude 1
        params = ModelParams.single_soliton(2)

        # Custom configuration
        params = ModelParams(p=3, mu=1.0, c=1.2, x0=40.0)
        ```
    """

    p: int
    """Nonlinearity power (>= 1)"""

    mu: float = 1.0
    """Dispersion coefficient (> 0)"""

    c: float = 1.0
    """Wave speed parameter, the soliton travels at c + 1"""

    x0: float = 40.0
    """Initial peak location"""

    def __post_init__(self):
        """Validate parameters"""
        if isinstance(self.p, bool) or int(self.p) != self.p or self.p < 1:
            raise ConfigurationError(f"Power p must be an integer >= 1, got {self.p!r}", key="p")
        object.__setattr__(self, "p", int(self.p))

        if not (math.isfinite(self.mu) and self.mu > 0):
            raise ConfigurationError(f"Dispersion mu must be positive, got {self.mu!r}", key="mu")

        if not (math.isfinite(self.c) and math.isfinite(self.x0)):
            raise ConfigurationError("Wave speed and position must be finite", key="c")

    @property
    def nonlinear_factor(self) -> int:
        """p(p + 1)"""
        return self.p * (self.p + 1)

    @property
    def speed(self) -> float:
        """Soliton speed c + 1"""
        return self.c + 1.0

    @property
    def amplitude(self) -> float:
        """Peak height (c(p+2)/(2p))^(1/p) of the solitary wave"""
        base = self.c * (self.p + 2) / (2.0 * self.p)
        if base <= 0:
            return 0.0
        return base ** (1.0 / self.p)

    @classmethod
    def single_soliton(cls, p: int) -> 'ModelParams':
        """
        Amplitude-one solitary wave at x0 = 40

        Returns:
            ModelParams with c = 1, 6/5 or 4/3 for p = 2, 3, 4
        """
        speeds = {2: 1.0, 3: 6.0 / 5.0, 4: 4.0 / 3.0}
        if p not in speeds:
            raise ConfigurationError(f"No single-soliton preset for p={p}", key="p")
        return cls(p=p, mu=1.0, c=speeds[p], x0=40.0)

    @classmethod
    def maxwellian(cls, p: int, mu: float) -> 'ModelParams':
        """Pulse exp(-(x-40)^2) breaking up under the given p and mu"""
        return cls(p=p, mu=mu, c=0.0, x0=40.0)
