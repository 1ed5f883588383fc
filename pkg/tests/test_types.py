"""
Test grlw Types
"""

import numpy as np
import pytest

from grlw.exceptions import ConfigurationError, DomainError
from grlw.types import (
    GrowthFactorInputs,
    LocalCoordinate,
    Mesh,
    ModelParams,
    Problem,
    RunDiagnostics,
    SolverState,
    SplineCoefVector,
    TimeParams,
)


class TestMesh:
    """Test Mesh"""

    def test_spacing_and_nodes(self):
        """Test element size and knot positions"""
        mesh = Mesh(0.0, 100.0, 500)
        assert mesh.h == pytest.approx(0.2)
        assert mesh.nodes.size == 501
        assert mesh.nodes[0] == 0.0
        assert mesh.nodes[-1] == pytest.approx(100.0)
        assert mesh.node(250) == pytest.approx(50.0)

    def test_from_spacing(self):
        """Test building from h"""
        assert Mesh.from_spacing(0.0, 200.0, 0.125).N == 1600
        assert Mesh.from_spacing(0.0, 120.0, 0.1).N == 1200

    def test_non_integer_spacing(self):
        """Test rejection of h that does not divide the interval"""
        with pytest.raises(ConfigurationError) as info:
            Mesh.from_spacing(0.0, 100.0, 0.3)
        assert info.value.key == "h"

    def test_invalid_mesh(self):
        """Test invalid endpoints and element counts"""
        with pytest.raises(ConfigurationError):
            Mesh(1.0, 0.0, 10)
        with pytest.raises(ConfigurationError):
            Mesh(0.0, 1.0, 4)

    def test_locate(self):
        """Test element lookup"""
        mesh = Mesh(0.0, 10.0, 10)
        assert mesh.locate(0.0) == (0, 0.0)
        m, eta = mesh.locate(3.25)
        assert m == 3
        assert eta == pytest.approx(0.25)

    def test_locate_right_end(self):
        """Test that x = b maps to the last element with eta = 1"""
        mesh = Mesh(0.0, 10.0, 10)
        assert mesh.locate(10.0) == (9, 1.0)

    def test_locate_outside(self):
        """Test lookup outside [a, b]"""
        mesh = Mesh(0.0, 10.0, 10)
        with pytest.raises(DomainError):
            mesh.locate(10.5)
        with pytest.raises(DomainError):
            mesh.locate_many(np.array([-0.1, 1.0]))


class TestLocalCoordinate:
    """Test LocalCoordinate"""

    def test_valid(self):
        """Test valid coordinates"""
        assert float(LocalCoordinate(0.5)) == 0.5

    def test_out_of_range(self):
        """Test coordinates outside [0, 1]"""
        with pytest.raises(DomainError):
            LocalCoordinate(1.5)
        with pytest.raises(ValueError):
            LocalCoordinate(-0.1)


class TestSplineCoefVector:
    """Test SplineCoefVector"""

    def test_indexing(self):
        """Test coefficient and window access"""
        delta = SplineCoefVector(np.arange(11.0))
        assert delta.n_elements == 8
        assert delta.coef(-1) == 0.0
        assert delta.coef(9) == 10.0
        assert list(delta.window(0)) == [0.0, 1.0, 2.0, 3.0]
        assert delta.interior.size == 9

    def test_constant(self, small_mesh):
        """Test the constant field preset"""
        delta = SplineCoefVector.constant(small_mesh, 3.0)
        assert np.allclose(delta.delta, 0.5)
        assert delta.matches(small_mesh)

    def test_rejects_non_finite(self):
        """Test validation of entries"""
        values = np.zeros(11)
        values[3] = np.nan
        with pytest.raises(DomainError):
            SplineCoefVector(values)

    def test_rejects_short(self):
        """Test validation of the length"""
        with pytest.raises(DomainError):
            SplineCoefVector(np.zeros(5))

    def test_copy_is_independent(self):
        """Test that copies do not share storage"""
        delta = SplineCoefVector(np.zeros(11))
        other = delta.copy()
        other.delta[0] = 1.0
        assert delta.delta[0] == 0.0


class TestModelParams:
    """Test ModelParams"""

    def test_single_soliton_presets(self):
        """Test presets give amplitude one"""
        for p in (2, 3, 4):
            params = ModelParams.single_soliton(p)
            assert params.amplitude == pytest.approx(1.0)
            assert params.x0 == 40.0

    def test_derived_values(self):
        """Test speed and nonlinear factor"""
        params = ModelParams(p=3, mu=1.0, c=48 / 5)
        assert params.speed == pytest.approx(10.6)
        assert params.nonlinear_factor == 12
        assert params.amplitude == pytest.approx(2.0)

    def test_invalid(self):
        """Test validation"""
        with pytest.raises(ConfigurationError):
            ModelParams(p=0)
        with pytest.raises(ConfigurationError):
            ModelParams(p=2, mu=0.0)
        with pytest.raises(ConfigurationError):
            ModelParams(p=2.5)


class TestTimeParams:
    """Test TimeParams"""

    def test_step_count(self):
        """Test number of steps"""
        assert TimeParams(dt=0.025, t_end=10.0).n_steps == 400
        assert TimeParams(dt=0.01, t_end=0.05).n_steps == 5

    def test_zero_final_time(self):
        """Test a run without steps"""
        assert TimeParams(dt=0.1, t_end=0.0).n_steps == 0

    def test_non_integer_ratio(self):
        """Test t_end that is not a multiple of dt"""
        with pytest.raises(ConfigurationError) as info:
            TimeParams(dt=0.3, t_end=10.0)
        assert info.value.key == "dt"

    def test_inner_iterations_range(self):
        """Test the corrector count bounds"""
        with pytest.raises(ConfigurationError):
            TimeParams(dt=0.1, t_end=1.0, inner_iterations=6)
        with pytest.raises(ConfigurationError):
            TimeParams(dt=0.1, t_end=1.0, inner_iterations=-1)

    def test_report_times(self):
        """Test report time validation"""
        tp = TimeParams(dt=0.5, t_end=2.0, report_times=[0, 1, 2])
        assert tp.report_times == (0.0, 1.0, 2.0)
        with pytest.raises(ConfigurationError):
            TimeParams(dt=0.5, t_end=2.0, report_times=(2.0, 1.0))
        with pytest.raises(ConfigurationError):
            TimeParams(dt=0.5, t_end=2.0, report_times=(3.0,))


class TestSolverState:
    """Test SolverState"""

    def test_advance(self):
        """Test advancing keeps the previous level"""
        first = SplineCoefVector(np.zeros(11))
        second = SplineCoefVector(np.ones(11))
        state = SolverState.initial(first).advance(second, 0.5)
        assert state.t == 0.5
        assert state.step_index == 1
        assert state.delta_prev is first
        assert state.delta is second


class TestRunDiagnostics:
    """Test RunDiagnostics"""

    def test_to_dict(self):
        """Test flat export"""
        row = RunDiagnostics(t=1.0, I1=1.0, I2=2.0, I3=3.0, amplitude=1.0, peak_x=42.0)
        assert row.to_dict()["peak_x"] == 42.0
        assert row.has_errors is False

    def test_negative_momentum(self):
        """Test I2 validation"""
        with pytest.raises(ValueError):
            RunDiagnostics(t=0.0, I1=0.0, I2=-1.0, I3=0.0)


class TestGrowthFactorInputs:
    """Test GrowthFactorInputs"""

    def test_invalid(self):
        """Test non-finite and non-positive values"""
        with pytest.raises(DomainError):
            GrowthFactorInputs(theta=float("nan"), beta=1.0, lambda_bar=1.0, dt=0.1)
        with pytest.raises(DomainError):
            GrowthFactorInputs(theta=0.0, beta=1.0, lambda_bar=1.0, dt=0.1, h=0.0)


class TestProblem:
    """Test Problem enumeration"""

    def test_values(self):
        """Test problem values"""
        assert Problem("soliton") is Problem.SOLITON
        assert str(Problem.MAXWELLIAN) == "maxwellian"

    def test_properties(self):
        """Test problem properties"""
        assert Problem.SOLITON.table_times == (0.0, 2.0, 4.0, 6.0, 8.0, 10.0)
        assert Problem.INTERACTION.snapshot_times == (0.0, 2.0, 3.0, 4.0, 5.0, 6.0)
