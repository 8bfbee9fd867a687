"""Exact enumerative invariants of Kalman varieties of partially symmetric tensors.

The package computes the degree factors of generalized Kalman varieties by
multivariate coefficient extraction, the rational generating function of those
factors, degrees of totally isotropic Kalman varieties, codimensions of
repeated-singular-tuple varieties, and hypercubical asymptotic estimates.
Every formula has at least one independent computational path cross-checking
it in the test suite.
"""

from .asympt import (
    AsymptoticEstimate,
    ComparisonRow,
    CriticalConstants,
    CriticalPointReport,
    asymptotic_degree,
    compare_exact_asymptotic,
    critical_constants,
    ratio_to_exact,
    verify_critical_point,
)
from .degrees import (
    CodimVec,
    StabilizationReport,
    TensorFormat,
    binary_degree,
    check_stabilization,
    extract_degree,
    kalman_degree,
    symmetric_degree,
)
from .genfun import (
    RationalSeries,
    build_H,
    build_H_via_determinant,
    expand_series,
    last_row_minors,
    macmahon_check,
    split_H,
)
from .isotropic import (
    SYMMETRIC_PAIR_TABLE,
    IsotropicResult,
    isotropic_degree,
    isotropic_degree_symmetric,
    partition_tuple_codim,
    symmetric_tuple_codim,
)
from .polycore import (
    ExponentVec,
    PolyMatrix,
    TPoly,
    coefficient_of,
    det,
    elementary_symmetric,
    poly_mul,
)

__version__ = "0.1.0"

__all__ = [
    "AsymptoticEstimate",
    "CodimVec",
    "ComparisonRow",
    "CriticalConstants",
    "CriticalPointReport",
    "ExponentVec",
    "IsotropicResult",
    "PolyMatrix",
    "RationalSeries",
    "StabilizationReport",
    "SYMMETRIC_PAIR_TABLE",
    "TPoly",
    "TensorFormat",
    "asymptotic_degree",
    "binary_degree",
    "build_H",
    "build_H_via_determinant",
    "check_stabilization",
    "coefficient_of",
    "compare_exact_asymptotic",
    "critical_constants",
    "det",
    "elementary_symmetric",
    "expand_series",
    "extract_degree",
    "isotropic_degree",
    "isotropic_degree_symmetric",
    "kalman_degree",
    "last_row_minors",
    "macmahon_check",
    "partition_tuple_codim",
    "poly_mul",
    "ratio_to_exact",
    "split_H",
    "symmetric_degree",
    "symmetric_tuple_codim",
    "verify_critical_point",
]
