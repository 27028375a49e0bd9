"""Summatory totient functions, analytic bounds, and their verification.

Fast multiplicative-function sieves feed compensated partial sums of
sum_{k<=N} k^u phi(k)^v (and the Jordan-totient analogue), convergence
ladders extrapolate the limit constants, and a catalog of analytic
lower/upper bounds sandwiches the results.  The hot kernels are
compiled (Cython) with an automatic pure-python fallback.
"""

from ._backend import backend_name
from .bounds import (
    BoundReport,
    BoundValue,
    Side,
    Verdict,
    crossover_m,
    full_report,
    jordan_comparison_upper,
    jordan_exact,
    multiple_sum_upper,
    power_sum_lower,
    refined_dn_bound,
    robin_upper,
    split_refined_upper,
)
from .errors import CapacityError
from .sieve import (
    DIVISOR_SIGMA,
    EULER_PHI,
    MOBIUS,
    MOBIUS_SQUARED,
    Factorization,
    FunctionKind,
    SpfTable,
    build_spf,
    divisor_sum_identity,
    evaluate,
    factorize,
    jordan_kind,
    load_spf,
    save_spf,
    table,
)
from .special import (
    CONSTANTS,
    Constants,
    EulerProductSpec,
    d_infinity,
    euler_product,
    named_product,
    primes_up_to,
    zeta,
    zeta_deriv,
    zeta_prime2_glaisher,
)
from .engine import (
    ConvergenceEstimate,
    ExponentPair,
    Regime,
    SummandKind,
    classify,
    default_ladder,
    dn_multiple_sum,
    e_m,
    ladder_estimate,
    normalized,
    summatory,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "BoundValue",
    "CONSTANTS",
    "CapacityError",
    "Constants",
    "ConvergenceEstimate",
    "DIVISOR_SIGMA",
    "EULER_PHI",
    "EulerProductSpec",
    "ExponentPair",
    "Factorization",
    "FunctionKind",
    "MOBIUS",
    "MOBIUS_SQUARED",
    "Regime",
    "Side",
    "SpfTable",
    "SummandKind",
    "Verdict",
    "backend_name",
    "build_spf",
    "classify",
    "crossover_m",
    "d_infinity",
    "default_ladder",
    "divisor_sum_identity",
    "dn_multiple_sum",
    "e_m",
    "euler_product",
    "evaluate",
    "factorize",
    "full_report",
    "jordan_comparison_upper",
    "jordan_exact",
    "jordan_kind",
    "ladder_estimate",
    "load_spf",
    "multiple_sum_upper",
    "named_product",
    "normalized",
    "power_sum_lower",
    "primes_up_to",
    "refined_dn_bound",
    "robin_upper",
    "save_spf",
    "split_refined_upper",
    "summatory",
    "table",
    "zeta",
    "zeta_deriv",
    "zeta_prime2_glaisher",
]
