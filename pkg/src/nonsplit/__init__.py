"""Extremal admissible polynomials and least non-split prime exponents."""

from .admissible import (AdmissibilityCertificate, AdmissiblePolynomial, ConstraintSystem,
                         build_constraint_matrix, generate_extremal, solve_lp,
                         solve_square_system, verify_admissible)
from .exponent import (ExponentResult, a_of_lambda, b_of_lambda, li_lower_bound, maximize_A,
                       partial_exp, quadratic_lower_bound)

__version__ = "0.1.0"

__all__ = [
    "AdmissibilityCertificate", "AdmissiblePolynomial", "ConstraintSystem", "ExponentResult",
    "a_of_lambda", "b_of_lambda", "build_constraint_matrix", "generate_extremal",
    "li_lower_bound", "maximize_A", "partial_exp", "quadratic_lower_bound", "solve_lp",
    "solve_square_system", "verify_admissible",
]
