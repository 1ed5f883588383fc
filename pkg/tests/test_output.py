"""
Test Experiment Output
"""

import numpy as np
import pytest

from grlw.core.spline_basis import nodal_field
from grlw.exceptions import OutputError
from grlw.experiments.output import (
    emit_snapshot,
    format_value,
    time_label,
    write_profile,
    write_rows_atomic,
    write_table,
)
from grlw.types import SolverState, SplineCoefVector


class TestFormatting:
    """Test cell and file-name formatting"""

    def test_values(self):
        """Test numbers, flags, text and missing cells"""
        assert format_value(None) == ""
        assert format_value(0.1) == "0.1"
        assert format_value(np.float64(2.5)) == "2.5"
        assert format_value(3) == "3"
        assert format_value(np.int64(4)) == "4"
        assert format_value(True) == "True"
        assert format_value("soliton") == "soliton"

    def test_float_round_trip(self):
        """Test printed floats parse back to the same value"""
        value = 4.442883123456789
        assert float(format_value(value)) == value

    def test_time_label(self):
        """Test compact time labels"""
        assert time_label(0.0) == "0"
        assert time_label(10.0) == "10"
        assert time_label(0.01) == "0.01"


class TestWriters:
    """Test CSV writers"""

    def test_table(self, tmp_path):
        """Test column order, missing cells and trailing comments"""
        path = write_table(
            tmp_path / "table.csv",
            ["t", "I1", "L2"],
            [{"t": 0.0, "I1": 1.5, "L2": None}, {"t": 2.0, "I1": 1.25}],
            comments=["reference I1 = 1.5"],
        )
        assert path.read_text(encoding="utf-8").splitlines() == [
            "t,I1,L2",
            "0.0,1.5,",
            "2.0,1.25,",
            "# reference I1 = 1.5",
        ]

    def test_creates_directory(self, tmp_path):
        """Test missing parent directories are created"""
        path = write_rows_atomic(tmp_path / "a" / "b" / "rows.csv", ("x",), [("1",)])
        assert path.exists()

    def test_no_temporary_files_left(self, tmp_path):
        """Test only the destination remains after writing"""
        write_rows_atomic(tmp_path / "rows.csv", ("x",), [("1",), ("2",)])
        assert [p.name for p in tmp_path.iterdir()] == ["rows.csv"]

    def test_replaces_existing(self, tmp_path):
        """Test an existing file is replaced whole"""
        path = tmp_path / "rows.csv"
        path.write_text("stale\n" * 100, encoding="utf-8")
        write_rows_atomic(path, ("x",), [("1",)])
        assert path.read_text(encoding="utf-8") == "x\n1\n"

    def test_unwritable_directory(self, tmp_path):
        """Test a parent path that is a regular file"""
        blocker = tmp_path / "blocker"
        blocker.write_text("", encoding="utf-8")
        with pytest.raises(OutputError) as exc_info:
            write_rows_atomic(blocker / "rows.csv", ("x",), [])
        assert "blocker" in exc_info.value.path

    def test_snapshot_of_zero_state(self, tmp_path, small_mesh):
        """Test the nodal snapshot of u = 0"""
        state = SolverState.initial(SplineCoefVector.zeros(small_mesh))
        path = emit_snapshot(state, small_mesh, tmp_path / "snap.csv")
        lines = path.read_text(encoding="utf-8").splitlines()
        assert lines[0] == "x,u"
        assert len(lines) == small_mesh.N + 2
        assert lines[1:] == [f"{m},0" for m in range(small_mesh.N + 1)]

    def test_snapshot_deterministic(self, tmp_path, small_mesh, random_delta):
        """Test identical input writes identical bytes"""
        first = emit_snapshot(random_delta, small_mesh, tmp_path / "one.csv").read_bytes()
        second = emit_snapshot(random_delta, small_mesh, tmp_path / "two.csv").read_bytes()
        assert first == second

    def test_snapshot_precision(self, tmp_path, small_mesh, random_delta):
        """Test snapshot values round-trip exactly"""
        path = emit_snapshot(random_delta, small_mesh, tmp_path / "snap.csv")
        lines = path.read_text(encoding="utf-8").splitlines()
        values = [float(line.split(",")[1]) for line in lines[1:]]
        assert values == nodal_field(random_delta, small_mesh).tolist()

    def test_fine_snapshot(self, tmp_path, small_mesh, random_delta):
        """Test sampling several points per element keeps the knots exact"""
        path = emit_snapshot(random_delta, small_mesh, tmp_path / "fine.csv", resolution=4)
        lines = path.read_text(encoding="utf-8").splitlines()
        assert len(lines) == 4 * small_mesh.N + 2
        rows = [tuple(float(v) for v in line.split(",")) for line in lines[1:]]
        assert rows[0][0] == small_mesh.a
        assert rows[-1][0] == small_mesh.b
        knots = np.array([u for _, u in rows[::4]])
        assert np.allclose(knots, nodal_field(random_delta, small_mesh), atol=1e-12)

    def test_fine_snapshot_of_constant(self, tmp_path, small_mesh):
        """Test between-knot samples of u = 1"""
        path = emit_snapshot(
            SplineCoefVector.constant(small_mesh, 1.0), small_mesh, tmp_path / "one.csv", resolution=3
        )
        values = [float(line.split(",")[1]) for line in path.read_text(encoding="utf-8").splitlines()[1:]]
        assert np.allclose(values, 1.0, atol=1e-12)

    def test_snapshot_resolution_invalid(self, tmp_path, small_mesh, random_delta):
        """Test zero samples per element"""
        with pytest.raises(ValueError):
            emit_snapshot(random_delta, small_mesh, tmp_path / "bad.csv", resolution=0)

    def test_profile(self, tmp_path):
        """Test a named profile column"""
        path = write_profile(tmp_path / "err.csv", np.array([0.0, 0.5]), np.array([1e-3, -2e-3]))
        assert path.read_text(encoding="utf-8").splitlines() == ["x,error", "0,0.001", "0.5,-0.002"]
