"""
grlw Core

Spline basis, element forms, assembly, banded solves and time stepping.
"""

from .spline_basis import (
    cubic_shape_values,
    cubic_shape_derivs,
    quadratic_weight_values,
    quadratic_weight_derivs,
    nodal_values,
    nodal_field,
    evaluate_spline,
    sample_spline,
)
from .element_forms import ElementMatrices, element_matrices, lumped_lambda, element_lambdas, beta
from .banded_linalg import BandedMatrix, BandedLU, banded_lu_solve, banded_matvec
from .assembly import (
    GammaStencil,
    GlobalSystem,
    BoundaryElimination,
    assemble_step_system,
    apply_boundary_elimination,
    reconstruct_boundary,
    fit_initial_coefficients,
)
from .time_integrator import CrankNicolsonIntegrator, step, run

__all__ = [
    # Basis
    "cubic_shape_values",
    "cubic_shape_derivs",
    "quadratic_weight_values",
    "quadratic_weight_derivs",
    "nodal_values",
    "nodal_field",
    "evaluate_spline",
    "sample_spline",

    # Element forms
    "ElementMatrices",
    "element_matrices",
    "lumped_lambda",
    "element_lambdas",
    "beta",

    # Linear algebra
    "BandedMatrix",
    "BandedLU",
    "banded_lu_solve",
    "banded_matvec",

    # Assembly
    "GammaStencil",
    "GlobalSystem",
    "BoundaryElimination",
    "assemble_step_system",
    "apply_boundary_elimination",
    "reconstruct_boundary",
    "fit_initial_coefficients",

    # Time stepping
    "CrankNicolsonIntegrator",
    "step",
    "run",
]
