"""
Experiment Output

CSV artifacts written atomically: rows go to a temporary file in the
target directory which then replaces the destination.
"""

import csv
import logging
import os
import tempfile
from pathlib import Path
from typing import Any, Iterable, List, Mapping, Sequence, Union

import numpy as np

from ..core.spline_basis import nodal_field, sample_spline
from ..exceptions import OutputError
from ..types import Mesh, SolverState, SplineCoefVector

logger = logging.getLogger(__name__)

SNAPSHOT_FORMAT = ".17g"


def format_value(value: Any) -> str:
    """Shortest round-trip text for numbers, empty for missing values"""
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


def time_label(t: float) -> str:
    """Compact time text for file names"""
    return f"{t:g}"


def ensure_directory(directory: Union[str, Path]) -> Path:
    directory = Path(directory)
    try:
        directory.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise OutputError(f"Cannot create output directory {directory}: {e}", path=str(directory)) from e
    return directory


def write_rows_atomic(
    path: Union[str, Path],
    header: Sequence[str],
    rows: Iterable[Sequence[str]],
    comments: Sequence[str] = ()
) -> Path:
    """Write pre-formatted CSV rows, then trailing ``# comment`` lines"""
    path = Path(path)
    ensure_directory(path.parent)
    temp_name = None
    try:
        with tempfile.NamedTemporaryFile(
            "w", dir=path.parent, prefix=f".{path.name}.", suffix=".tmp",
            delete=False, newline="", encoding="utf-8"
        ) as handle:
            temp_name = handle.name
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(header)
            writer.writerows(rows)
            for comment in comments:
                handle.write(f"# {comment}\n")
        os.replace(temp_name, path)
    except OSError as e:
        if temp_name and os.path.exists(temp_name):
            os.unlink(temp_name)
        raise OutputError(f"Writing {path} failed: {e}", path=str(path)) from e

    logger.info(f"Wrote {path}")
    return path


def write_table(
    path: Union[str, Path],
    columns: Sequence[str],
    rows: List[Mapping[str, Any]],
    comments: Sequence[str] = ()
) -> Path:
    """CSV table of dict rows in the given column order"""
    formatted = ([format_value(row.get(column)) for column in columns] for row in rows)
    return write_rows_atomic(path, columns, formatted, comments)


def emit_snapshot(
    state: Union[SolverState, SplineCoefVector],
    mesh: Mesh,
    path: Union[str, Path],
    resolution: int = 1
) -> Path:
    """
    Solution as two-column ``x,u`` CSV

    With ``resolution`` 1 the rows are the knots. Larger values sample the
    spline at that many points per element, knots included. Values carry
    17 significant digits.
    """
    if resolution < 1:
        raise ValueError(f"Snapshot resolution must be >= 1, got {resolution!r}")
    delta = state.delta if isinstance(state, SolverState) else state
    if resolution == 1:
        xs, u = mesh.nodes, nodal_field(delta, mesh)
    else:
        xs = np.linspace(mesh.a, mesh.b, mesh.N * resolution + 1)
        u = sample_spline(delta, mesh, xs)
    rows = (
        (format(float(x), SNAPSHOT_FORMAT), format(float(value), SNAPSHOT_FORMAT))
        for x, value in zip(xs, u)
    )
    return write_rows_atomic(path, ("x", "u"), rows)


def write_profile(path: Union[str, Path], xs: np.ndarray, values: np.ndarray, name: str = "error") -> Path:
    """Two-column ``x,<name>`` CSV of a pointwise profile"""
    rows = (
        (format(float(x), SNAPSHOT_FORMAT), format(float(v), SNAPSHOT_FORMAT))
        for x, v in zip(xs, values)
    )
    return write_rows_atomic(path, ("x", name), rows)
