"""Exact ordinary multinomial coefficients and their consequences.

C(L, a)_q, the coefficient of x^a in (1 + x + ... + x^q)^L, computed by
six independent methods, plus the structures built on it: multibonacci
sequences, partial Bell partition polynomials, and the exact law of sums
of uniform draws on {0..q}.  All arithmetic is arbitrary-precision.
"""

from .backend import active_name as backend_name
from .backend import available as available_backends
from .bell import (
    bell_factorial_full,
    bell_partial,
    bell_truncated_factorial,
    stars_and_bars_identity,
    stirling1_unsigned,
    stirling2,
)
from .coefficients import (
    METHODS,
    CoefficientRow,
    central_trinomial_alternating,
    central_trinomial_direct,
    coeff,
    coeff_demoivre,
    coeff_diagonal,
    coeff_longitudinal,
    coeff_nested_sum,
    coeff_partition_sum,
    row,
    row_generating_function,
    row_longitudinal,
)
from .combinat import (
    WeightedComposition,
    binomial,
    factorial,
    multinomial,
    weighted_compositions,
)
from .distribution import (
    PmfTable,
    moment_identity_check,
    pmf_convolution,
    pmf_demoivre,
    pmf_from_coefficients,
    raw_moments,
    sample_sums,
    uniform_moment,
    weighted_power_sum,
)
from .sequences import (
    FormulaDiscrepancy,
    alternating_discrepancy_report,
    alternating_formula,
    alternating_sum,
    euclidean_split,
    multibonacci,
    multibonacci_compositions,
    multibonacci_diagonal,
    multibonacci_shifted,
)

__version__ = "0.1.0"

__all__ = [
    "CoefficientRow",
    "FormulaDiscrepancy",
    "METHODS",
    "PmfTable",
    "WeightedComposition",
    "alternating_discrepancy_report",
    "alternating_formula",
    "alternating_sum",
    "available_backends",
    "backend_name",
    "bell_factorial_full",
    "bell_partial",
    "bell_truncated_factorial",
    "binomial",
    "central_trinomial_alternating",
    "central_trinomial_direct",
    "coeff",
    "coeff_demoivre",
    "coeff_diagonal",
    "coeff_longitudinal",
    "coeff_nested_sum",
    "coeff_partition_sum",
    "euclidean_split",
    "factorial",
    "moment_identity_check",
    "multibonacci",
    "multibonacci_compositions",
    "multibonacci_diagonal",
    "multibonacci_shifted",
    "multinomial",
    "pmf_convolution",
    "pmf_demoivre",
    "pmf_from_coefficients",
    "raw_moments",
    "row",
    "row_generating_function",
    "row_longitudinal",
    "sample_sums",
    "stars_and_bars_identity",
    "stirling1_unsigned",
    "stirling2",
    "uniform_moment",
    "weighted_compositions",
    "weighted_power_sum",
    "__version__",
]
