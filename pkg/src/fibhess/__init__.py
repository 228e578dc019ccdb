"""Exact computation of generalized bivariate Fibonacci-type polynomials
via a defining recurrence and four Hessenberg determinant/permanent
routes, with named classical specializations (Fibonacci, Pell,
Jacobsthal, second-kind Chebyshev)."""

from .evaluators import (
    BudgetExceeded,
    EvalBudget,
    det_hessenberg,
    det_oracle,
    per_hessenberg,
    per_oracle,
)
from .matrices import (
    HessenbergMatrix,
    ShapeError,
    build_h,
    build_k,
    build_m,
    build_w,
)
from .ring import BivarPoly, GaussianInt, Monomial, i_pow
from .sequences import (
    FAMILIES,
    CrossCheckReport,
    FamilySpec,
    cross_check,
    f_poly,
    f_poly_prefix,
    fib_p_number,
    family_value,
    get_family,
)

__all__ = [
    "BivarPoly",
    "BudgetExceeded",
    "CrossCheckReport",
    "EvalBudget",
    "FAMILIES",
    "FamilySpec",
    "GaussianInt",
    "HessenbergMatrix",
    "Monomial",
    "ShapeError",
    "build_h",
    "build_k",
    "build_m",
    "build_w",
    "cross_check",
    "det_hessenberg",
    "det_oracle",
    "f_poly",
    "f_poly_prefix",
    "family_value",
    "fib_p_number",
    "get_family",
    "i_pow",
    "per_hessenberg",
    "per_oracle",
]

__version__ = "0.1.0"
