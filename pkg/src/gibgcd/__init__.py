"""Exact GCDs of windowed power sums of Gibonacci sequences."""
from .sequences import (
    FIBONACCI,
    LUCAS,
    GibonacciSpec,
    IdentityResult,
    PreconditionError,
    WindowSpec,
    beta_term,
    characteristic,
    d_function,
    fib,
    fib_pair,
    gamma_term,
    gib_term,
    gib_terms,
    identity_check,
    lucas,
    window_sum,
    window_sum_squares_closed,
)
from .gcd_engine import (
    CaseTag,
    DegenerateSpecError,
    GcdClassification,
    OddKReport,
    OracleReport,
    fib_closed,
    gcd_firstpower_closed,
    gcd_power_bruteforce,
    gcd_power_oracle,
    gcd_squares_classified,
    gcd_squares_closed,
    gcd_squares_parity,
    lucas_closed,
    odd_k_maximality,
    reduce_to_primitive,
)
from .pisano import ModulusError, PisanoResult, fib_pisano, lucas_pisano, pisano_period

__version__ = "0.1.0"
