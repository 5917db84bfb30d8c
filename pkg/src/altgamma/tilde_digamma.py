"""The digamma and polygamma functions of Gamma~,

    psi~(x) = d/dx log Gamma~(x) = -zeta_E(1, x),
    psi~^(n)(x) = (-1)^(n+1) n! zeta_E(n+1, x),

with three independent evaluation routes for psi~ and residual checks for
its recursion, reflection and special values.

Sign convention: psi~ is *minus* Nielsen's beta function,
psi~(x) = (psi(x/2) - psi((x+1)/2)) / 2, so psi~(1) = -log 2.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .alt_zeta import alt_hurwitz_zeta
from .classical import EPS, MAX_POLYGAMMA_ORDER, _positive, _real, digamma
from .errors import DomainError, ParameterError
from .quadrature import exp_sinh_nodes, lattice_trapezoid
from .results import (
    DEFAULT_CONFIG,
    EvalConfig,
    EvalResult,
    Method,
    ResidualRecord,
    SpecialForm,
    SpecialValue,
)

__all__ = [
    "nielsen_beta",
    "tilde_digamma",
    "tilde_digamma_series",
    "tilde_digamma_integral",
    "tilde_polygamma",
    "tilde_digamma_integer",
    "tilde_digamma_recursion",
    "tilde_digamma_reflection",
    "tilde_digamma_rational_shift",
]

_LOG2 = math.log(2.0)
_INTEGER_EXACT_MAX = 300
_CHUNK = 1 << 18


def nielsen_beta(x, config: EvalConfig | None = None) -> EvalResult:
    """Nielsen's beta function (psi((x+1)/2) - psi(x/2)) / 2 for x > 0."""
    x = _positive(x)
    a = digamma(0.5 * x, config)
    b = digamma(0.5 * (x + 1.0), config)
    value = 0.5 * (b.value - a.value)
    err = 0.5 * (a.abs_error_estimate + b.abs_error_estimate) + EPS * abs(value)
    return EvalResult(value, err, Method.CLOSED_FORM, a.terms_used + b.terms_used)


def tilde_digamma_integer(n: int) -> SpecialValue:
    """Exact psi~(n) = +-log 2 + (alternating harmonic partial sum)."""
    if int(n) != n or n < 1:
        raise ParameterError(f"n must be a positive integer, got {n!r}")
    n = int(n)
    s = sum((Fraction(-1 if k % 2 else 1, k) for k in range(1, n)), Fraction(0))
    if n % 2 == 0:
        return SpecialValue.of(SpecialForm.LOG2_PLUS_RATIONAL, 1, s)
    return SpecialValue.of(SpecialForm.LOG2_PLUS_RATIONAL, -1, -s)


def tilde_digamma(x, config: EvalConfig | None = None) -> EvalResult:
    """psi~(x) = -beta(x) for x > 0.

    Positive integers up to 300 return the correctly rounded exact value.
    """
    x = _positive(x)
    if x == math.floor(x) and x <= _INTEGER_EXACT_MAX:
        exact = tilde_digamma_integer(int(x)).numeric
        return EvalResult(exact, EPS * abs(exact), Method.CLOSED_FORM, 0)
    r = nielsen_beta(x, config)
    return EvalResult(-r.value, r.abs_error_estimate, r.method, r.terms_used)


def tilde_digamma_series(x, terms: int = 100_000) -> EvalResult:
    """psi~(x) = -1/x + log 2 + sum_k (-1)^k (1/k - 1/(k+x)), summed over
    ``terms`` consecutive (odd, even) pairs of k.

    The remainder of the alternating series is bounded by its first omitted
    term.
    """
    x = _positive(x)
    terms = int(terms)
    if terms < 1:
        raise ParameterError("terms must be >= 1")
    total = 0.0
    for start in range(1, terms + 1, _CHUNK):
        j = np.arange(start, min(start + _CHUNK, terms + 1), dtype=np.float64)
        odd = 2 * j - 1
        even = 2 * j
        total += float(np.sum(x / (even * (even + x)) - x / (odd * (odd + x))))
    value = -1.0 / x + _LOG2 + total
    k = 2.0 * terms + 1.0
    omitted = x / (k * (k + x))
    err = omitted + 4 * EPS * (1.0 / x + 1.0) + 1e-16 * math.log2(terms + 1)
    return EvalResult(value, err, Method.LIMIT_SEQUENCE, 2 * terms)


def tilde_digamma_integral(x, config: EvalConfig | None = None) -> EvalResult:
    """psi~(x) = -int_0^inf e^{-x t} / (1 + e^{-t}) dt by exp-sinh quadrature."""
    cfg = config or DEFAULT_CONFIG
    x = _positive(x)
    lo = -math.asinh(92.0 / math.pi)
    hi = math.asinh((2.0 / math.pi) * max(math.log(60.0 / x), 1.0)) + 0.3

    def integrand(u):
        t, log_dt = exp_sinh_nodes(u)
        return np.exp(-x * t - np.log1p(np.exp(-t)) + log_dt)

    value, err, evals = lattice_trapezoid(integrand, lo, hi, 0.25, cfg.quadrature_levels,
                                          cfg.target_abs_error)
    return EvalResult(-value, err, Method.QUADRATURE, evals)


def tilde_polygamma(n: int, x, config: EvalConfig | None = None) -> EvalResult:
    """psi~^(n)(x) = (-1)^(n+1) n! zeta_E(n+1, x)."""
    if int(n) != n or n < 0:
        raise ParameterError(f"order must be a nonnegative integer, got {n!r}")
    n = int(n)
    if n > MAX_POLYGAMMA_ORDER:
        raise ParameterError(f"order must be <= {MAX_POLYGAMMA_ORDER}, got {n}")
    r = alt_hurwitz_zeta(n + 1, x, config)
    scale = math.factorial(n) * (1 if n % 2 else -1)
    return EvalResult(scale * r.value, abs(scale) * r.abs_error_estimate, r.method, r.terms_used)


def _alternating_reciprocals(x: float, n: int, first_sign: float) -> float:
    return math.fsum(first_sign * (1.0 if k % 2 == 0 else -1.0) / (x + k) for k in range(n))


def tilde_digamma_recursion(x, n: int, config: EvalConfig | None = None,
                            tolerance: float = 1e-10) -> ResidualRecord:
    """Check psi~(x+n) against the shift formula

        psi~(x) + sum_{k<n} (-1)^k / (x+k)          (n even)
        -psi~(x) + sum_{k<n} (-1)^(k+1) / (x+k)     (n odd).
    """
    x = _positive(x)
    n = int(n)
    if n < 1:
        raise ParameterError("n must be >= 1")
    lhs = tilde_digamma(x + n, config).value
    base = tilde_digamma(x, config).value
    if n % 2 == 0:
        rhs = base + _alternating_reciprocals(x, n, 1.0)
    else:
        rhs = -base + _alternating_reciprocals(x, n, -1.0)
    return ResidualRecord.compare("tilde_digamma_recursion", {"x": x, "n": n}, lhs, rhs, tolerance)


def tilde_digamma_reflection(x, config: EvalConfig | None = None,
                             tolerance: float = 1e-10) -> ResidualRecord:
    """Check psi~(x) + psi~(1-x) = -pi / sin(pi x) for 0 < x < 1."""
    x = _real(x, "x")
    if not 0.0 < x < 1.0:
        raise DomainError(f"reflection needs 0 < x < 1, got {x!r}")
    lhs = tilde_digamma(x, config).value + tilde_digamma(1.0 - x, config).value
    s = math.sin(math.pi * (1.0 - x)) if x > 0.5 else math.sin(math.pi * x)
    rhs = -math.pi / s
    return ResidualRecord.compare("tilde_digamma_reflection", {"x": x}, lhs, rhs, tolerance)


def tilde_digamma_rational_shift(p: int, q: int, n: int, config: EvalConfig | None = None,
                                 tolerance: float = 1e-10) -> ResidualRecord:
    """Check psi~(n + p/q) = +-psi~(p/q) + sum_{k<n} s_k q / (qk + p).

    The sign in front of psi~(p/q) is + for even n and - for odd n; the
    summand signs are (-1)^k for even n and (-1)^(k+1) for odd n, matching
    :func:`tilde_digamma_recursion`. Any representation of p/q is accepted.
    """
    if int(q) != q or q == 0 or int(p) != p:
        raise ParameterError(f"p and q must be integers with q != 0, got {p!r}, {q!r}")
    shift = Fraction(int(p), int(q))
    if shift <= 0:
        raise DomainError(f"p/q must be positive, got {shift}")
    n = int(n)
    if n < 1:
        raise ParameterError("n must be >= 1")
    p, q = shift.numerator, shift.denominator
    lhs = tilde_digamma(float(shift + n), config).value
    base = tilde_digamma(float(shift), config).value
    first = 1.0 if n % 2 == 0 else -1.0
    total = math.fsum(first * (1.0 if k % 2 == 0 else -1.0) * q / (q * k + p) for k in range(n))
    rhs = first * base + total
    return ResidualRecord.compare("tilde_digamma_rational_shift", {"p": p, "q": q, "n": n},
                                  lhs, rhs, tolerance)
