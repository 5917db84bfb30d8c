"""The gamma function attached to the alternating Hurwitz zeta function,

    Gamma~(x) = B(x/2, 1/2) / 2 = sqrt(pi) Gamma(x/2) / (2 Gamma((x+1)/2)),

defined by d/dx log Gamma~(x) = -zeta_E(1, x).

Besides the closed form this module evaluates Gamma~ through each of its
alternative representations (two integrals, two infinite products, a limit
sequence, Gauss's 2F1 at unit argument) so that they can be checked against
one another, extends it to the negative real axis, and exposes the
structural identities as residual checks.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .classical import EPS, _positive, _real, gauss_2f1_unit, log_gamma
from .errors import DomainError, ParameterError
from .quadrature import lattice_trapezoid, tanh_sinh_nodes
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

__all__ = [
    "tilde_gamma",
    "log_tilde_gamma",
    "tilde_gamma_extended",
    "tilde_gamma_integer",
    "tilde_gamma_product",
    "tilde_gamma_hadamard",
    "tilde_gamma_limit",
    "tilde_gamma_laplace",
    "tilde_gamma_beta_integral",
    "hyper_link_residual",
    "recursion_identity",
    "reflection_identity",
    "duplication_identity",
    "distribution_identity",
    "double_factorial",
]

_LOG2 = math.log(2.0)
_HALF_LOG_PI = 0.5 * math.log(math.pi)
_INTEGER_EXACT_MAX = 300
_CHUNK = 1 << 18


def double_factorial(n: int) -> int:
    """n!! with the conventions (-1)!! = 0!! = 1."""
    if n < -1:
        raise ParameterError(f"double factorial undefined for {n}")
    out = 1
    for k in range(n, 1, -2):
        out *= k
    return out


def tilde_gamma_integer(n: int) -> SpecialValue:
    """Exact Gamma~(n) for a positive integer n: (n-2)!!/(n-1)!!, times pi/2
    when n is odd."""
    if int(n) != n or n < 1:
        raise ParameterError(f"n must be a positive integer, got {n!r}")
    n = int(n)
    ratio = Fraction(double_factorial(n - 2), double_factorial(n - 1))
    if n % 2 == 0:
        return SpecialValue.of(SpecialForm.RATIONAL, ratio)
    return SpecialValue.of(SpecialForm.RATIONAL_TIMES_PI, ratio / 2)


def log_tilde_gamma(x, config: EvalConfig | None = None) -> EvalResult:
    """log Gamma~(x) for x > 0, safe against overflow for large and small x."""
    x = _positive(x)
    ga = log_gamma(0.5 * x, config)
    gb = log_gamma(0.5 * (x + 1.0), config)
    value = ga.value - gb.value + _HALF_LOG_PI - _LOG2
    err = ga.abs_error_estimate + gb.abs_error_estimate + 4 * EPS * (abs(ga.value) + abs(gb.value) + 1.0)
    return EvalResult(value, err, Method.CLOSED_FORM, ga.terms_used + gb.terms_used)


def tilde_gamma(x, config: EvalConfig | None = None) -> EvalResult:
    """Gamma~(x) for x > 0.

    Positive integers up to 300 return the correctly rounded exact value;
    everything else goes through :func:`log_tilde_gamma`.
    """
    x = _positive(x)
    if x == math.floor(x) and x <= _INTEGER_EXACT_MAX:
        exact = tilde_gamma_integer(int(x)).numeric
        return EvalResult(exact, 0.5 * EPS * exact, Method.CLOSED_FORM, 0)
    lg = log_tilde_gamma(x, config)
    value = math.exp(lg.value)
    return EvalResult(value, value * (lg.abs_error_estimate + EPS), Method.CLOSED_FORM, lg.terms_used)


def tilde_gamma_extended(x, config: EvalConfig | None = None) -> ExtendedPoint:
    """Gamma~ on the whole real line.

    Poles at 0, -2, -4, ... and zeros at -1, -3, ... are returned as markers.
    Other negative x are reached by running Gamma~(x) = (x+1)/x Gamma~(x+2)
    backwards from a positive argument.
    """
    x = _real(x, "x")
    if x > 0:
        r = tilde_gamma(x, config)
        return ExtendedPoint(PointKind.FINITE, r.value, r.abs_error_estimate)
    if x == math.floor(x):
        return ExtendedPoint.pole() if int(x) % 2 == 0 else ExtendedPoint.zero()
    steps = math.ceil(-x / 2.0) + 1
    factor = 1.0
    for j in range(steps):
        y = x + 2 * j
        factor *= (y + 1.0) / y
    base = tilde_gamma(x + 2 * steps, config)
    value = factor * base.value
    err = abs(factor) * base.abs_error_estimate + 2 * (steps + 1) * EPS * abs(value)
    return ExtendedPoint(PointKind.FINITE, value, err)


def _chunked_sum(term, count: int) -> tuple[float, float]:
    """Sum ``term(k)`` for k = 1..count in numpy chunks.

    Returns ``(sum, last_term)``.
    """
    total = 0.0
    last = 0.0
    for start in range(1, count + 1, _CHUNK):
        k = np.arange(start, min(start + _CHUNK, count + 1), dtype=np.float64)
        t = term(k)
        total += float(np.sum(t))
        last = float(t[-1])
    return total, last


def tilde_gamma_product(x, pairs: int = 1_000_000) -> EvalResult:
    """Truncated generalised Wallis product

        Gamma~(x) ~ 1/x prod_{k<=pairs} (2k / (x+2k)) ((x+2k-1) / (2k-1)).

    The factors behave like 1 + x/(4k^2), so the missing tail is about
    ``pairs`` times the log of the last factor; that product, with a 1.5
    safety factor, is the reported error.
    """
    x = _positive(x)
    pairs = int(pairs)
    if pairs < 1:
        raise ParameterError("pairs must be >= 1")

    def factor_log(k):
        return np.log1p(x / (2 * k - 1)) - np.log1p(x / (2 * k))

    log_sum, last = _chunked_sum(factor_log, pairs)
    value = math.exp(log_sum - math.log(x))
    err = value * (1.5 * pairs * abs(last) + 4 * EPS * (abs(log_sum) + 1.0) + 1e-16 * math.log2(pairs + 1))
    return EvalResult(value, err, Method.PRODUCT, pairs)


def tilde_gamma_hadamard(x, pairs: int = 100_000) -> EvalResult:
    """Weierstrass-type product

        Gamma~(x) = 1/x exp(x log 2) prod_k (e^{-x/k} (1 + x/k))^{(-1)^(k+1)}

    truncated after 2*pairs factors. The exponent series converges only
    conditionally, so consecutive factors (2j-1, 2j) are combined before
    summation; the alternating tail is bounded by its first omitted term.
    """
    x = _positive(x)
    pairs = int(pairs)
    if pairs < 1:
        raise ParameterError("pairs must be >= 1")

    def g(k):
        u = x / k
        return np.log1p(u) - u

    def pair_term(j):
        return g(2 * j - 1) - g(2 * j)

    log_sum, _ = _chunked_sum(pair_term, pairs)
    log_value = -math.log(x) + x * _LOG2 + log_sum
    value = math.exp(log_value)
    omitted = abs(float(g(np.float64(2 * pairs + 1))))
    err = value * (omitted + 4 * EPS * (abs(log_value) + x + 1.0) + 1e-16 * math.log2(pairs + 1))
    return EvalResult(value, err, Method.PRODUCT, 2 * pairs)


def tilde_gamma_limit(x, n: int) -> EvalResult:
    """n-th element of the limit sequence

        n!!/(n-1)!! prod_{k=0}^{n} (k+x)^{-(-1)^k}        (n even)
        (n-1)!!/n!! prod_{k=0}^{n} (k+x)^{-(-1)^k}        (n odd)

    evaluated in log space. Both prefactors equal exp(sum_{k<=n} (-1)^k log k),
    so the element is (1/x) exp(-sum_{k=1}^{n} (-1)^k log(1 + x/k)); the
    returned value is the sequence element itself, not an extrapolation.
    """
    x = _positive(x)
    n = int(n)
    if not 1 <= n <= 10**7:
        raise ParameterError(f"n must be in [1, 1e7], got {n}")

    def term(k):
        sign = np.where(k % 2 == 0, 1.0, -1.0)
        return -sign * np.log1p(x / k)

    log_sum, _ = _chunked_sum(term, n)
    log_value = log_sum - math.log(x)
    value = math.exp(log_value)
    nxt = math.log1p(x / (n + 1))
    err = value * (nxt + 4 * EPS * (abs(log_value) + 1.0) + 1e-16 * math.log2(n + 1))
    return EvalResult(value, err, Method.LIMIT_SEQUENCE, n)


def tilde_gamma_laplace(x, config: EvalConfig | None = None) -> EvalResult:
    """Gamma~(x) = int_0^inf e^{-x t} (1 - e^{-2t})^{-1/2} dt.

    With t = u^2 the integrand becomes 2u e^{-x u^2} / sqrt(1 - e^{-2u^2}),
    whose continuation to negative u is even and analytic; the half-line
    trapezoid rule then converges geometrically.
    """
    cfg = config or DEFAULT_CONFIG
    x = _positive(x)
    tol = cfg.target_abs_error
    # tail beyond T is below e^{-xT} / (x sqrt(1 - e^{-2T}))
    t_cut = max(math.log(10.0 / (x * tol)) / x, 1.0)
    u_cut = math.sqrt(t_cut)

    def integrand(u):
        u2 = u * u
        with np.errstate(divide="ignore", invalid="ignore"):
            body = 2.0 * u / np.sqrt(-np.expm1(-2.0 * u2))
        body = np.where(u2 < 1e-300, math.sqrt(2.0), body)
        return body * np.exp(-x * u2)

    value, err, evals = lattice_trapezoid(integrand, 0.0, u_cut, u_cut / 8.0,
                                          cfg.quadrature_levels, tol, even=True)
    return EvalResult(value, err + 0.1 * tol, Method.QUADRATURE, evals)


def tilde_gamma_beta_integral(x, config: EvalConfig | None = None) -> EvalResult:
    """Gamma~(x) = (1/2) int_0^1 t^{x/2-1} (1-t)^{-1/2} dt.

    t = sin^2(theta) turns this into int_0^{pi/2} sin^{x-1}(theta) dtheta,
    which is regular at pi/2 and, for x < 1, keeps an integrable power
    singularity at 0; a tanh-sinh map of [0, pi/2] absorbs it.
    """
    cfg = config or DEFAULT_CONFIG
    x = _positive(x)
    half_pi = 0.5 * math.pi
    lo = -math.asinh(50.0 / (math.pi * min(x, 1.0)))
    hi = math.asinh(50.0 / math.pi) + 0.5 * math.log1p(x)

    def integrand(u):
        log_s, log_1ms, log_ds = tanh_sinh_nodes(u)
        theta = half_pi * np.exp(log_s)
        near_zero = log_s < math.log(0.5)
        with np.errstate(divide="ignore"):
            log_sin = np.where(
                near_zero,
                math.log(half_pi) + log_s + np.log(np.sinc(theta / math.pi)),
                np.log(np.cos(half_pi * np.exp(log_1ms))),
            )
        return np.exp((x - 1.0) * log_sin + math.log(half_pi) + log_ds)

    value, err, evals = lattice_trapezoid(integrand, lo, hi, 0.5, cfg.quadrature_levels,
                                          cfg.target_abs_error)
    return EvalResult(value, err, Method.QUADRATURE, evals)


def hyper_link_residual(x, config: EvalConfig | None = None) -> float:
    """|x Gamma~(x) - 2F1(1/2, x/2; x/2 + 1; 1)|."""
    x = _positive(x)
    lhs = x * tilde_gamma(x, config).value
    rhs = gauss_2f1_unit(0.5, 0.5 * x, 0.5 * x + 1.0, config).value
    return abs(lhs - rhs)


def recursion_identity(x, n: int, config: EvalConfig | None = None,
                       tolerance: float = 1e-10) -> ResidualRecord:
    """Check (Gamma~(x+n))^{(-1)^n} = prod_{k<n} (2(x+k)/pi)^{(-1)^k} Gamma~(x)
    in log space."""
    x = _positive(x)
    n = int(n)
    if n < 1:
        raise ParameterError("n must be >= 1")
    sign_n = 1.0 if n % 2 == 0 else -1.0
    lhs = sign_n * log_tilde_gamma(x + n, config).value
    logs = [(1.0 if k % 2 == 0 else -1.0) * math.log(2.0 * (x + k) / math.pi) for k in range(n)]
    rhs = math.fsum(logs) + log_tilde_gamma(x, config).value
    return ResidualRecord.compare("tilde_gamma_recursion", {"x": x, "n": n}, lhs, rhs, tolerance)


def _log_cot_half_pi(x: float) -> float:
    """log cot(pi x / 2) for 0 < x < 1 without losing digits near x = 1."""
    if x > 0.5:
        return math.log(math.tan(0.5 * math.pi * (1.0 - x)))
    return -math.log(math.tan(0.5 * math.pi * x))


def reflection_identity(x, config: EvalConfig | None = None,
                        tolerance: float = 1e-10) -> ResidualRecord:
    """Check Gamma~(x) / Gamma~(1-x) = cot(pi x / 2) for 0 < x < 1, in log space."""
    x = _real(x, "x")
    if not 0.0 < x < 1.0:
        raise DomainError(f"reflection needs 0 < x < 1, got {x!r}")
    lhs = log_tilde_gamma(x, config).value - log_tilde_gamma(1.0 - x, config).value
    rhs = _log_cot_half_pi(x)
    return ResidualRecord.compare("tilde_gamma_reflection", {"x": x}, lhs, rhs, tolerance)


def duplication_identity(x, config: EvalConfig | None = None,
                         tolerance: float = 1e-10) -> ResidualRecord:
    """Check Gamma~(2x) = (sqrt(pi)/2) Gamma(x) / Gamma(x + 1/2), in log space."""
    x = _positive(x)
    lhs = log_tilde_gamma(2.0 * x, config).value
    rhs = _HALF_LOG_PI - _LOG2 + log_gamma(x, config).value - log_gamma(x + 0.5, config).value
    return ResidualRecord.compare("tilde_gamma_duplication", {"x": x}, lhs, rhs, tolerance)


def distribution_identity(x, n: int, config: EvalConfig | None = None,
                          tolerance: float = 1e-10) -> ResidualRecord:
    """Check Gamma~(n x) = n^{-1/2} prod_{j<n} Gamma~(x + j/n)^{(-1)^j} for odd n."""
    x = _positive(x)
    if int(n) != n or n < 1 or n % 2 == 0:
        raise ParameterError(f"distribution formula needs a positive odd n, got {n!r}")
    n = int(n)
    lhs = log_tilde_gamma(n * x, config).value
    parts = [(1.0 if j % 2 == 0 else -1.0) * log_tilde_gamma(x + j / n, config).value
             for j in range(n)]
    rhs = -0.5 * math.log(n) + math.fsum(parts)
    return ResidualRecord.compare("tilde_gamma_distribution", {"x": x, "n": n}, lhs, rhs, tolerance)
