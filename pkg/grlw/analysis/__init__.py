"""
grlw Analysis
"""

from .analytic_solutions import (
    exact_soliton,
    two_soliton_initial,
    maxwellian_initial,
    invariants,
    error_norms,
    reference_invariants,
    collect_diagnostics,
)
from .vonneumann import growth_factor, growth_table, stability_scan

__all__ = [
    "exact_soliton",
    "two_soliton_initial",
    "maxwellian_initial",
    "invariants",
    "error_norms",
    "reference_invariants",
    "collect_diagnostics",
    "growth_factor",
    "growth_table",
    "stability_scan",
]
