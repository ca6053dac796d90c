"""Jacobi polynomials with complex parameters on [0, 1].

Finite-part (Hadamard) orthogonality, Jacobi-series expansion and the
analytic solution of the inhomogeneous hypergeometric equation.
"""

from ._core import (
    ChebyshevModel,
    DegreeCapExceeded,
    EvaluationFailure,
    Expression,
    FpjError,
    HypergeomSolution,
    InsufficientData,
    InvalidParameters,
    JacobiBasis,
    JacobiExpansion,
    JacobiParams,
    NonConvergent,
    ParseError,
    PoleError,
    QuadratureFailure,
    RecurrenceBreakdown,
    ResonantEigenvalue,
    beta_fp,
    check_resonance,
    chebyshev_fit,
    expand,
    finite_part_poly_weight,
    finite_part_series,
    finite_part_split,
    gamma,
    jacobi_rodrigues,
    jacobi_via_recurrence,
    lambda_n,
    leading_coefficient,
    log_gamma,
    norm_an,
    parse_complex,
    parse_expression,
    pochhammer,
    reciprocal_gamma,
    solve,
)

__version__ = "0.1.0"
