"""Determinantal arrangements of generic 2 x n matrices.

Thin wrapper over the C++ core. Polynomials live in Z[x1, y1, ..., xn, yn];
graphs are on vertices 1..n.
"""

from ._core import (
    Derivation,
    Graph,
    GraphFormatError,
    NotChordalError,
    ParseError,
    Polynomial,
    a_coeff,
    apply,
    chordal_build_order,
    defining_poly,
    exact_div,
    homotopy_report,
    is_chordal,
    is_logarithmic,
    longest_chordless_cycle,
    membership,
    minor,
    pdim_lower_bound,
    plucker_residual,
    poincare_chordal,
    poincare_complete,
    run_cli,
    saito_check,
    std_basis,
    std_basis_names,
)

__all__ = [
    "Derivation",
    "Graph",
    "GraphFormatError",
    "NotChordalError",
    "ParseError",
    "Polynomial",
    "a_coeff",
    "apply",
    "chordal_build_order",
    "defining_poly",
    "exact_div",
    "homotopy_report",
    "is_chordal",
    "is_logarithmic",
    "longest_chordless_cycle",
    "membership",
    "minor",
    "pdim_lower_bound",
    "plucker_residual",
    "poincare_chordal",
    "poincare_complete",
    "run_cli",
    "saito_check",
    "std_basis",
    "std_basis_names",
]
