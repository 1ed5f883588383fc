"""
Pytest Configuration
"""

import numpy as np
import pytest

from grlw.analysis.analytic_solutions import soliton_solution
from grlw.core.assembly import fit_initial_coefficients
from grlw.types import Mesh, ModelParams, SplineCoefVector


@pytest.fixture
def rng():
    """Seeded random generator"""
    return np.random.default_rng(20240611)


@pytest.fixture
def small_mesh():
    """Eight unit elements on [0, 8]"""
    return Mesh(0.0, 8.0, 8)


@pytest.fixture
def soliton_params():
    """p = 2 solitary wave of amplitude 1 at x0 = 40"""
    return ModelParams.single_soliton(2)


@pytest.fixture
def soliton_mesh():
    """[0, 100] with h = 0.2"""
    return Mesh.from_spacing(0.0, 100.0, 0.2)


@pytest.fixture
def soliton_delta(soliton_params, soliton_mesh):
    """Coefficients fitted to the exact wave at t = 0"""
    exact = soliton_solution(soliton_params)
    return fit_initial_coefficients(lambda x: exact(x, 0.0), soliton_mesh)


@pytest.fixture
def random_delta(rng, small_mesh):
    """Random coefficients on the small mesh"""
    return SplineCoefVector(rng.normal(size=small_mesh.N + 3))


@pytest.fixture
def out_dir(tmp_path, monkeypatch):
    """Output directory wired through GRLW_OUT_DIR"""
    target = tmp_path / "results"
    monkeypatch.setenv("GRLW_OUT_DIR", str(target))
    return target
