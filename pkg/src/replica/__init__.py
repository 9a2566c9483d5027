"""Self-replicating Borwein-like algorithms in arbitrary-precision decimal.

Quadratic, cubic and quartic iteration families with a free parameter w
compute pi and Gamma-function values; the same machinery at w = 0 yields
rapid algorithms for the perimeter of an ellipse.  A certified truncated
series evaluator provides independent oracle values for every limit.
"""

from .algorithms import (
    CONSTANT_RECIPES,
    CUBIC,
    QUADRATIC,
    QUARTIC,
    AlgorithmKind,
    IterationState,
    RunResult,
    constant_limit_oracle,
    measure_orders,
    postprocess_constant,
    replication_invariant,
    run_borwein,
    run_ellipse,
    usable_error_logs,
)
from .errors import (
    DivergenceError,
    DomainError,
    InsufficientTraceError,
    NonConvergenceError,
    PrecisionInsufficientError,
    ReplicaError,
    SlowConvergenceError,
    UnknownConstantError,
    UnsupportedExponentError,
    UnsupportedParameterError,
)
from .precision import (
    PrecisionContext,
    Real,
    make_context,
    matching_digits,
    nth_root,
    pow_rational,
    rat_pow,
    to_sig_digits,
)
from .series import (
    CoupleValues,
    SeriesSpec,
    couple_product,
    ellipse_factor,
    evaluate_series,
    ramanujan_couple,
)
from .transforms import (
    ReplicatedCoefficients,
    cubic_descend,
    cubic_replicate,
    quad_descend,
    quad_replicate,
    quartic_descend,
    quartic_replicate,
)

__version__ = "0.1.0"

__all__ = [
    "AlgorithmKind",
    "CONSTANT_RECIPES",
    "CUBIC",
    "CoupleValues",
    "DivergenceError",
    "DomainError",
    "InsufficientTraceError",
    "IterationState",
    "NonConvergenceError",
    "PrecisionContext",
    "PrecisionInsufficientError",
    "QUADRATIC",
    "QUARTIC",
    "Real",
    "ReplicaError",
    "ReplicatedCoefficients",
    "RunResult",
    "SeriesSpec",
    "SlowConvergenceError",
    "UnknownConstantError",
    "UnsupportedExponentError",
    "UnsupportedParameterError",
    "constant_limit_oracle",
    "couple_product",
    "cubic_descend",
    "cubic_replicate",
    "ellipse_factor",
    "evaluate_series",
    "make_context",
    "matching_digits",
    "measure_orders",
    "nth_root",
    "postprocess_constant",
    "pow_rational",
    "quad_descend",
    "quad_replicate",
    "quartic_descend",
    "quartic_replicate",
    "ramanujan_couple",
    "rat_pow",
    "replication_invariant",
    "run_borwein",
    "run_ellipse",
    "to_sig_digits",
    "usable_error_logs",
]
