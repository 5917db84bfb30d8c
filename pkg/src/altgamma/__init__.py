"""Alternating Hurwitz zeta function and the Gamma~ family built from it.

    zeta_E(z, x) = sum_{n>=0} (-1)^n (n + x)^-z
    Gamma~(x)    = Gamma(x/2) sqrt(pi) / (2 Gamma((x+1)/2))
    psi~(x)      = (log Gamma~)'(x) = -zeta_E(1, x)

Every evaluator returns an :class:`EvalResult` carrying an absolute error
estimate and the method used.
"""

from .alt_zeta import (
    alt_hurwitz_zeta,
    alt_hurwitz_zeta_series,
    alt_zeta_deriv0,
    alt_zeta_deriv0_const,
    eta,
    eta_relation_residual,
    euler_constant_tilde,
)
from .classical import (
    bernoulli_exact,
    bernoulli_numbers,
    beta_function,
    digamma,
    gauss_2f1_unit,
    hurwitz_zeta,
    log_gamma,
    polygamma,
)
from .errors import AltGammaError, DomainError, ParameterError, PoleError
from .oracles import OracleResult, Rigor, alt_zeta_direct, finite_difference, zeta_direct
from .results import (
    DEFAULT_CONFIG,
    EvalConfig,
    EvalResult,
    ExtendedPoint,
    Method,
    PointKind,
    ResidualRecord,
    SpecialForm,
    SpecialValue,
)
from .tilde_digamma import (
    nielsen_beta,
    tilde_digamma,
    tilde_digamma_integer,
    tilde_digamma_integral,
    tilde_digamma_rational_shift,
    tilde_digamma_recursion,
    tilde_digamma_reflection,
    tilde_digamma_series,
    tilde_polygamma,
)
from .tilde_gamma import (
    distribution_identity,
    double_factorial,
    duplication_identity,
    hyper_link_residual,
    log_tilde_gamma,
    recursion_identity,
    reflection_identity,
    tilde_gamma,
    tilde_gamma_beta_integral,
    tilde_gamma_extended,
    tilde_gamma_hadamard,
    tilde_gamma_integer,
    tilde_gamma_laplace,
    tilde_gamma_limit,
    tilde_gamma_product,
)
from .verification import GridSpec, SuiteReport, lerch_identity, run_suite, wallis_check

__version__ = "0.1.0"
