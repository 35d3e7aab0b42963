"""Zeta polynomials of Lie algebras over prime fields by echelon enumeration."""

from .class2 import Class2Error, class2_ideal_zeta, compute_X, lambda2_data
from .enumeration import (
    BudgetExhausted,
    EchelonMatrix,
    PivotPattern,
    count,
    count_all_subspaces,
    count_zeta,
    is_closed,
    iter_echelon,
    iterate_patterns,
    reduce_vector,
)
from .ffield import FieldElem, NotPrimeError, PrimeField, check_prime, inverse, is_prime, primes_in_range, reduce
from .liealg import (
    LieRing,
    ParseError,
    adjoint_matrices,
    catalog,
    catalog_entries,
    load_ring,
    lower_central_series,
    parse_presentation,
    validate,
)
from .zeta import (
    DomainError,
    ZetaPoly,
    abelian_zeta,
    closed_form,
    cubic_root_count,
    elliptic_point_count,
    fit_coefficient,
    gaussian_binomial,
    uniformity_report,
)

__version__ = "0.1.0"

__all__ = [
    "Class2Error",
    "class2_ideal_zeta",
    "compute_X",
    "lambda2_data",
    "BudgetExhausted",
    "EchelonMatrix",
    "PivotPattern",
    "count",
    "count_all_subspaces",
    "count_zeta",
    "is_closed",
    "iter_echelon",
    "iterate_patterns",
    "reduce_vector",
    "FieldElem",
    "NotPrimeError",
    "PrimeField",
    "check_prime",
    "inverse",
    "is_prime",
    "primes_in_range",
    "reduce",
    "LieRing",
    "ParseError",
    "adjoint_matrices",
    "catalog",
    "catalog_entries",
    "load_ring",
    "lower_central_series",
    "parse_presentation",
    "validate",
    "DomainError",
    "ZetaPoly",
    "abelian_zeta",
    "closed_form",
    "cubic_root_count",
    "elliptic_point_count",
    "fit_coefficient",
    "gaussian_binomial",
    "uniformity_report",
]
