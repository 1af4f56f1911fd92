"""Machine-precision verification of logarithmic-mean integral bounds for
functions obeying multiplicative (geometric-arithmetic) convexity laws."""

from .bounds import (
    THEOREM_IDS,
    BoundReport,
    NegativityError,
    ParamError,
    ParamPoint,
    verify,
)
from .convexity import (
    ConvexitySpec,
    ConvexityVerdict,
    Witness,
    check,
    check_function,
    check_power_of_abs_deriv,
    witness_gap,
)
from .expr import (
    DomainError,
    ExprError,
    ExprSyntaxError,
    Expression,
    UnknownIdentifierError,
    parse,
)
from .means import (
    MeanContext,
    NonConvergenceError,
    geometric_path_moment,
    geometric_path_moment_quad,
    geometric_path_moment_series,
    log_mean,
)
from .quad import IntegrandError, QuadResult, integrate

__version__ = "0.1.0"

__all__ = [
    "THEOREM_IDS",
    "BoundReport",
    "ConvexitySpec",
    "ConvexityVerdict",
    "DomainError",
    "ExprError",
    "ExprSyntaxError",
    "Expression",
    "IntegrandError",
    "MeanContext",
    "NegativityError",
    "NonConvergenceError",
    "ParamError",
    "ParamPoint",
    "QuadResult",
    "UnknownIdentifierError",
    "Witness",
    "check",
    "check_function",
    "check_power_of_abs_deriv",
    "geometric_path_moment",
    "geometric_path_moment_quad",
    "geometric_path_moment_series",
    "integrate",
    "log_mean",
    "parse",
    "verify",
    "witness_gap",
    "__version__",
]
