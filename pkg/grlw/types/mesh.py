"""
Mesh Types
"""

import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..exceptions import ConfigurationError, DomainError

# Ratios such as (b - a) / h must be integral to this tolerance
INTEGER_RATIO_TOLERANCE = 1e-9


def integer_ratio(numerator: float, denominator: float, key: str) -> int:
    """Return numerator / denominator as an int, or fail naming ``key``"""
    ratio = numerator / denominator
    count = int(round(ratio))
    if abs(ratio - count) > INTEGER_RATIO_TOLERANCE:
        raise ConfigurationError(
            f"{numerator!r} / {denominator!r} = {ratio!r} is not an integer", key=key
        )
    return count


@dataclass(frozen=True)
class LocalCoordinate:
    """Reference coordinate on the unit element, h*eta = x - x_m"""

    eta: float
    """Position inside the element, 0 <= eta <= 1"""

    def __post_init__(self):
        if not 0.0 <= self.eta <= 1.0:
            raise DomainError(f"Local coordinate {self.eta!r} outside [0, 1]")

    def __float__(self) -> float:
        return float(self.eta)


@dataclass(frozen=True)
class Mesh:
    """
    Uniform 1-D grid of N elements on [a, b]

    Example:
        ```python
        mesh = Mesh(0.0, 100.0, 500)
        mesh = Mesh.from_spacing(0.0, 100.0, 0.2)  # same mesh
        ```
    """

    a: float
    """Left endpoint"""

    b: float
    """Right endpoint"""

    N: int
    """Number of elements"""

    def __post_init__(self):
        if not (math.isfinite(self.a) and math.isfinite(self.b)) or self.b <= self.a:
            raise ConfigurationError(
                f"Mesh needs finite a < b, got a={self.a!r}, b={self.b!r}", key="xmax"
            )
        if int(self.N) != self.N or self.N < 5:
            raise ConfigurationError(f"Mesh needs N >= 5 elements, got {self.N!r}", key="N")
        object.__setattr__(self, "N", int(self.N))

    @classmethod
    def from_spacing(cls, a: float, b: float, h: float) -> 'Mesh':
        """Build the mesh with element size h; (b - a) / h must be an integer"""
        if not h > 0:
            raise ConfigurationError(f"Element size must be positive, got {h!r}", key="h")
        return cls(a, b, integer_ratio(b - a, h, key="h"))

    @property
    def h(self) -> float:
        """Element size"""
        return (self.b - self.a) / self.N

    @property
    def nodes(self) -> np.ndarray:
        """Knots x_m = a + m*h for m = 0..N"""
        return self.a + np.arange(self.N + 1) * self.h

    def node(self, m: int) -> float:
        """Position of knot m"""
        if not 0 <= m <= self.N:
            raise IndexError(f"Node index {m} outside 0..{self.N}")
        return self.a + m * self.h

    def locate(self, x: float) -> Tuple[int, float]:
        """
        Element index and local coordinate of x

        Elements are half-open [x_m, x_{m+1}) except the last, which also
        owns x = b (eta = 1).
        """
        if not self.a <= x <= self.b:
            raise DomainError(f"x = {x!r} outside [{self.a}, {self.b}]")
        m = min(int(math.floor((x - self.a) / self.h)), self.N - 1)
        eta = (x - self.a - m * self.h) / self.h
        return m, min(max(eta, 0.0), 1.0)

    def locate_many(self, xs: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """Vectorized :meth:`locate`"""
        xs = np.asarray(xs, dtype=float)
        if np.any((xs < self.a) | (xs > self.b)) or not np.all(np.isfinite(xs)):
            raise DomainError(f"Sample points outside [{self.a}, {self.b}]")
        m = np.minimum(np.floor((xs - self.a) / self.h).astype(int), self.N - 1)
        eta = np.clip((xs - self.a - m * self.h) / self.h, 0.0, 1.0)
        return m, eta
