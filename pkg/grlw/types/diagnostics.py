"""
Run Diagnostics
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple


@dataclass(frozen=True)
class RunDiagnostics:
    """Conserved quantities, error norms and peak data at one report time"""

    t: float
    """Report time"""

    I1: float
    """Mass, integral of u"""

    I2: float
    """Momentum, integral of u^2 + mu u_x^2"""

    I3: float
    """Energy, integral of u^4 - mu u_x^2"""

    L2: Optional[float] = None
    """Discrete L2 error, only when an exact solution exists"""

    Linf: Optional[float] = None
    """Maximum nodal error, only when an exact solution exists"""

    amplitude: float = 0.0
    """Largest nodal value"""

    peak_x: float = 0.0
    """Node position of the largest nodal value"""

    peaks: Tuple[Tuple[float, float], ...] = field(default_factory=tuple)
    """(x, u) of every separated wave crest, tallest first"""

    def __post_init__(self):
        if self.I2 < 0:
            raise ValueError(f"I2 must be non-negative, got {self.I2!r}")

    @property
    def has_errors(self) -> bool:
        return self.L2 is not None and self.Linf is not None

    def to_dict(self) -> Dict[str, Any]:
        """Flat mapping used by the CSV writers"""
        return {
            "t": self.t,
            "I1": self.I1,
            "I2": self.I2,
            "I3": self.I3,
            "L2": self.L2,
            "Linf": self.Linf,
            "amplitude": self.amplitude,
            "peak_x": self.peak_x,
        }
