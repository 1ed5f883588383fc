"""
Banded Linear Algebra

Fixed-band storage, no-pivot LU factorization and matrix-vector products
for the step systems. Entry (i, j) of a matrix with lower bandwidth kl
lives at ``bands[kl + j - i, i]``, so column i of ``bands`` is the band
stencil of row i.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from ..exceptions import ShapeError, SingularMatrixError

logger = logging.getLogger(__name__)

# Pivots below this magnitude are treated as zero
PIVOT_TOLERANCE = 1e-300


@dataclass
class BandedMatrix:
    """
    Square matrix with kl sub-diagonals and ku super-diagonals

    Example:
        ```python
        M = BandedMatrix.from_dense(dense, kl=2, ku=3)
        y = M.matvec(x)
        ```
    """

    n: int
    """Dimension"""

    kl: int
    """Lower bandwidth"""

    ku: int
    """Upper bandwidth"""

    bands: Optional[np.ndarray] = None
    """Diagonal storage, shape (kl + ku + 1, n)"""

    def __post_init__(self):
        if self.n < 1 or self.kl < 0 or self.ku < 0:
            raise ShapeError(f"Invalid band layout n={self.n}, kl={self.kl}, ku={self.ku}")
        shape = (self.kl + self.ku + 1, self.n)
        if self.bands is None:
            self.bands = np.zeros(shape)
        else:
            self.bands = np.array(self.bands, dtype=np.float64)
            if self.bands.shape != shape:
                raise ShapeError(f"Band storage must have shape {shape}, got {self.bands.shape}")
        self.bands[~self._valid_mask()] = 0.0

    def _valid_mask(self) -> np.ndarray:
        k = np.arange(self.kl + self.ku + 1)[:, None]
        i = np.arange(self.n)[None, :]
        column = i - self.kl + k
        return (column >= 0) & (column < self.n)

    @classmethod
    def from_row_stencils(cls, stencils: np.ndarray, kl: int, ku: int) -> 'BandedMatrix':
        """Build from per-row stencils, ``stencils[i, k]`` = M[i, i - kl + k]"""
        stencils = np.asarray(stencils, dtype=np.float64)
        if stencils.ndim != 2 or stencils.shape[1] != kl + ku + 1:
            raise ShapeError(f"Stencils must have {kl + ku + 1} columns, got {stencils.shape}")
        return cls(stencils.shape[0], kl, ku, stencils.T)

    @classmethod
    def from_dense(cls, dense: np.ndarray, kl: int, ku: int) -> 'BandedMatrix':
        """Band part of a dense square matrix"""
        dense = np.asarray(dense, dtype=np.float64)
        if dense.ndim != 2 or dense.shape[0] != dense.shape[1]:
            raise ShapeError(f"Dense matrix must be square, got {dense.shape}")
        n = dense.shape[0]
        matrix = cls(n, kl, ku)
        for k in range(kl + ku + 1):
            offset = k - kl
            rows = np.arange(max(0, -offset), min(n, n - offset))
            matrix.bands[k, rows] = dense[rows, rows + offset]
        return matrix

    @classmethod
    def identity(cls, n: int, kl: int = 2, ku: int = 3) -> 'BandedMatrix':
        matrix = cls(n, kl, ku)
        matrix.bands[kl, :] = 1.0
        return matrix

    @property
    def shape(self) -> Tuple[int, int]:
        return self.n, self.n

    @property
    def row_stencils(self) -> np.ndarray:
        """View with ``row_stencils[i, k]`` = M[i, i - kl + k]"""
        return self.bands.T

    def get(self, i: int, j: int) -> float:
        """Entry (i, j), zero outside the band"""
        if not (0 <= i < self.n and 0 <= j < self.n):
            raise IndexError(f"Entry ({i}, {j}) outside {self.n}x{self.n}")
        k = self.kl + j - i
        if 0 <= k <= self.kl + self.ku:
            return float(self.bands[k, i])
        return 0.0

    def to_dense(self) -> np.ndarray:
        dense = np.zeros((self.n, self.n))
        for k in range(self.kl + self.ku + 1):
            offset = k - self.kl
            rows = np.arange(max(0, -offset), min(self.n, self.n - offset))
            dense[rows, rows + offset] = self.bands[k, rows]
        return dense

    def matvec(self, x: np.ndarray) -> np.ndarray:
        """y = M x over the stored band"""
        x = np.asarray(x, dtype=np.float64)
        if x.shape != (self.n,):
            raise ShapeError(f"Vector of shape {x.shape} does not match {self.n}x{self.n} matrix")
        padded = np.zeros(self.n + self.kl + self.ku)
        padded[self.kl:self.kl + self.n] = x
        y = np.zeros(self.n)
        for k in range(self.kl + self.ku + 1):
            y += self.bands[k] * padded[k:k + self.n]
        return y


@dataclass
class BandedLU:
    """
    Doolittle factors of a banded matrix, computed without pivoting

    L (unit lower, kl sub-diagonals) and U (ku super-diagonals) share the
    band layout of the factored matrix, so no fill-in is possible.
    """

    n: int
    kl: int
    ku: int
    rows: List[List[float]] = field(repr=False)

    @classmethod
    def factor(cls, matrix: BandedMatrix) -> 'BandedLU':
        """Factor ``matrix``; raises SingularMatrixError naming the pivot row"""
        n, kl, ku = matrix.n, matrix.kl, matrix.ku
        rows = matrix.row_stencils.tolist()

        for k in range(n):
            pivot_row = rows[k]
            pivot = pivot_row[kl]
            if abs(pivot) < PIVOT_TOLERANCE:
                raise SingularMatrixError(f"Zero pivot {pivot!r} at row {k}", row=k)
            width = min(ku, n - 1 - k)
            for off in range(1, min(kl, n - 1 - k) + 1):
                row = rows[k + off]
                base = kl - off
                multiplier = row[base] / pivot
                row[base] = multiplier
                if multiplier != 0.0:
                    for j in range(1, width + 1):
                        row[base + j] -= multiplier * pivot_row[kl + j]

        return cls(n, kl, ku, rows)

    def solve(self, rhs: np.ndarray) -> np.ndarray:
        """Forward and back substitution"""
        rhs = np.asarray(rhs, dtype=np.float64)
        if rhs.shape != (self.n,):
            raise ShapeError(f"Right-hand side of shape {rhs.shape} does not match n={self.n}")
        n, kl, ku, rows = self.n, self.kl, self.ku, self.rows

        y = rhs.tolist()
        for i in range(1, n):
            row = rows[i]
            acc = y[i]
            for off in range(1, min(kl, i) + 1):
                acc -= row[kl - off] * y[i - off]
            y[i] = acc

        x = [0.0] * n
        for i in range(n - 1, -1, -1):
            row = rows[i]
            acc = y[i]
            for j in range(1, min(ku, n - 1 - i) + 1):
                acc -= row[kl + j] * x[i + j]
            x[i] = acc / row[kl]

        return np.array(x)

    def lower(self) -> np.ndarray:
        """Dense unit lower factor"""
        dense = np.eye(self.n)
        for i in range(self.n):
            for off in range(1, min(self.kl, i) + 1):
                dense[i, i - off] = self.rows[i][self.kl - off]
        return dense

    def upper(self) -> np.ndarray:
        """Dense upper factor"""
        dense = np.zeros((self.n, self.n))
        for i in range(self.n):
            for j in range(0, min(self.ku, self.n - 1 - i) + 1):
                dense[i, i + j] = self.rows[i][self.kl + j]
        return dense


def banded_matvec(matrix: BandedMatrix, x: np.ndarray) -> np.ndarray:
    """y = M x"""
    return matrix.matvec(x)


def banded_lu_solve(matrix: BandedMatrix, rhs: np.ndarray) -> np.ndarray:
    """Solve M x = rhs by banded LU without pivoting"""
    rhs = np.asarray(rhs, dtype=np.float64)
    if rhs.shape != (matrix.n,):
        raise ShapeError(f"Right-hand side of shape {rhs.shape} does not match n={matrix.n}")
    x = BandedLU.factor(matrix).solve(rhs)
    if logger.isEnabledFor(logging.DEBUG):
        residual = float(np.max(np.abs(matrix.matvec(x) - rhs)))
        logger.debug(f"Banded solve n={matrix.n}: residual {residual:.3e}")
    return x
