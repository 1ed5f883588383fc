"""
Problem Enumeration
"""

from enum import Enum
from typing import Tuple


class Problem(Enum):
    """Experiments the harness knows how to run"""

    SOLITON = "soliton"
    """Single solitary wave with exact solution"""

    INTERACTION = "interaction"
    """Collision of two solitary waves"""

    MAXWELLIAN = "maxwellian"
    """Gaussian pulse breaking into a wave train"""

    STABILITY = "stability"
    """Fourier growth-factor scan of the linearized scheme"""

    CONVERGENCE = "convergence"
    """Error under successive mesh refinement"""

    def __str__(self) -> str:
        return self.value

    @property
    def table_times(self) -> Tuple[float, ...]:
        """Default report times"""
        return {
            Problem.SOLITON: (0.0, 2.0, 4.0, 6.0, 8.0, 10.0),
            Problem.INTERACTION: (0.0, 2.0, 4.0, 6.0),
            Problem.MAXWELLIAN: (0.0, 0.01, 0.03, 0.05),
            Problem.CONVERGENCE: (),
            Problem.STABILITY: (),
        }[self]

    @property
    def snapshot_times(self) -> Tuple[float, ...]:
        """Default times of (x, u) snapshot files"""
        return {
            Problem.SOLITON: (0.0, 5.0, 10.0),
            Problem.INTERACTION: (0.0, 2.0, 3.0, 4.0, 5.0, 6.0),
        }.get(self, ())
