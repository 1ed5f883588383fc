"""
Von Neumann Analysis

Fourier growth factor of the linearized step: substituting
delta_j^n = g^n exp(i j theta) into a row with frozen lambda gives
g = (a - ib) / (a + ib) with real a and b, so |g| = 1 for every
non-degenerate mode.
"""

import logging
import math
from typing import List, Tuple

import numpy as np

from ..exceptions import DomainError
from ..types import GrowthFactorInputs

logger = logging.getLogger(__name__)


def growth_coefficients(theta, beta: float, lambda_bar: float, dt: float) -> Tuple[np.ndarray, np.ndarray]:
    """Real (a) and transport (b) parts of the symbol at phase theta"""
    theta = np.asarray(theta, dtype=np.float64)
    half = 0.5 * theta
    a = (
        (302.0 + 300.0 * beta) * np.cos(half)
        + (57.0 - 270.0 * beta) * np.cos(3.0 * half)
        + (1.0 - 30.0 * beta) * np.cos(5.0 * half)
    )
    ld = lambda_bar * dt
    b = ld * (120.0 * np.sin(half) + 75.0 * np.sin(3.0 * half) + 3.0 * np.sin(5.0 * half))
    return a, b


def growth_factor(inp: GrowthFactorInputs) -> complex:
    """g(theta) for one mode; a = b = 0 raises DomainError"""
    a, b = growth_coefficients(inp.theta, inp.beta, inp.lambda_bar, inp.dt)
    a, b = float(a), float(b)
    if a == 0.0 and b == 0.0:
        raise DomainError(f"Degenerate mode at theta={inp.theta!r}")
    if b == 0.0:
        return complex(1.0, 0.0)
    return complex(a, -b) / complex(a, b)


def growth_table(
    beta: float,
    lambda_bar: float,
    dt: float,
    n_samples: int
) -> List[Tuple[float, complex]]:
    """(theta, g) on n_samples uniform phases in [0, 2 pi), degenerate modes skipped"""
    if n_samples < 2:
        raise DomainError(f"Stability scan needs at least 2 samples, got {n_samples}")
    thetas = 2.0 * math.pi * np.arange(n_samples) / n_samples
    a, b = growth_coefficients(thetas, beta, lambda_bar, dt)
    table = []
    skipped = 0
    for theta, a_k, b_k in zip(thetas.tolist(), a.tolist(), b.tolist()):
        if a_k == 0.0 and b_k == 0.0:
            skipped += 1
            continue
        g = complex(1.0, 0.0) if b_k == 0.0 else complex(a_k, -b_k) / complex(a_k, b_k)
        table.append((theta, g))
    if skipped:
        logger.warning(f"Skipped {skipped} degenerate modes")
    return table


def stability_scan(beta: float, lambda_bar: float, dt: float, n_samples: int) -> float:
    """max | |g(theta)| - 1 | over the sampled phases"""
    table = growth_table(beta, lambda_bar, dt, n_samples)
    if not table:
        return 0.0
    deviation = max(abs(abs(g) - 1.0) for _, g in table)
    logger.debug(f"Stability scan over {len(table)} modes: max deviation {deviation:.3e}")
    return deviation
