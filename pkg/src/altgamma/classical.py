"""Classical special functions: log-gamma, digamma, polygamma, Beta, the
Hurwitz zeta function and Gauss's 2F1 at unit argument.

Every evaluator returns an :class:`~altgamma.results.EvalResult` whose error
estimate combines the truncation error of the asymptotic series with a
rounding floor proportional to the magnitude of the intermediate sums.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, ParameterError, PoleError
from .results import DEFAULT_CONFIG, EvalConfig, EvalResult, Method

__all__ = [
    "BernoulliTable",
    "bernoulli_numbers",
    "bernoulli_exact",
    "log_gamma",
    "digamma",
    "polygamma",
    "hurwitz_zeta",
    "beta_function",
    "gauss_2f1_unit",
    "MAX_BERNOULLI",
    "MAX_POLYGAMMA_ORDER",
]

EPS = 2.220446049250313e-16
MAX_BERNOULLI = 64
MAX_POLYGAMMA_ORDER = 12
STIRLING_CUTOFF = 10.0
_HALF_LOG_2PI = 0.9189385332046727418


def _tangent_bernoulli(count: int) -> list[Fraction]:
    """Exact B_0..B_count from the integer tangent-number recurrence."""
    m = count // 2
    tangent = [0] * (m + 1)
    if m >= 1:
        tangent[1] = 1
    for k in range(2, m + 1):
        tangent[k] = (k - 1) * tangent[k - 1]
    for k in range(2, m + 1):
        for j in range(k, m + 1):
            tangent[j] = (j - k) * tangent[j - 1] + (j - k + 2) * tangent[j]
    out = [Fraction(0)] * (count + 1)
    out[0] = Fraction(1)
    if count >= 1:
        out[1] = Fraction(-1, 2)
    for k in range(1, m + 1):
        sign = 1 if k % 2 else -1
        out[2 * k] = Fraction(sign * 2 * k * tangent[k], 4**k * (4**k - 1))
    return out


# Built once at import; read-only afterwards.
_BERNOULLI_EXACT: tuple[Fraction, ...] = tuple(_tangent_bernoulli(MAX_BERNOULLI))
# B_{2k} / (2k)!  for the Euler-Maclaurin tail
_EM_COEF: tuple[float, ...] = tuple(
    float(_BERNOULLI_EXACT[2 * k] / math.factorial(2 * k)) for k in range(MAX_BERNOULLI // 2 + 1)
)
# B_{2k} / (2k (2k-1))  for Stirling's series
_STIRLING_COEF: tuple[float, ...] = tuple(
    float(_BERNOULLI_EXACT[2 * k] / (2 * k * (2 * k - 1))) if k else 0.0
    for k in range(MAX_BERNOULLI // 2 + 1)
)


@dataclass(frozen=True)
class BernoulliTable:
    """B_0..B_n as floats, with the convention B_1 = -1/2."""

    values: tuple[float, ...]

    def __getitem__(self, k: int) -> float:
        return self.values[k]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


def bernoulli_exact(count: int) -> tuple[Fraction, ...]:
    if not 1 <= count <= MAX_BERNOULLI:
        raise ParameterError(f"bernoulli count must be in [1, {MAX_BERNOULLI}], got {count}")
    return _BERNOULLI_EXACT[: count + 1]


def bernoulli_numbers(count: int) -> BernoulliTable:
    """Return B_0..B_count rounded to binary64."""
    return BernoulliTable(tuple(float(b) for b in bernoulli_exact(count)))


def _real(x, name: str) -> float:
    try:
        x = float(x)
    except (TypeError, ValueError):
        raise DomainError(f"{name} must be a real number, got {x!r}") from None
    if not math.isfinite(x):
        raise DomainError(f"{name} must be finite, got {x!r}")
    return x


def _positive(x, name: str = "x") -> float:
    x = _real(x, name)
    if x <= 0.0:
        raise DomainError(f"{name} must be > 0, got {x!r}")
    return x


def _raise_argument(x: float) -> tuple[float, float, int]:
    """Shift x up past the Stirling cutoff.

    Returns ``(y, log_prod, m)`` with ``y = x + m`` and
    ``log_prod = log(x (x+1) ... (x+m-1))``.
    """
    if x >= STIRLING_CUTOFF:
        return x, 0.0, 0
    m = math.ceil(STIRLING_CUTOFF - x)
    prod = 1.0
    for k in range(m):
        prod *= x + k
    return x + m, math.log(prod), m


def log_gamma(x, config: EvalConfig | None = None) -> EvalResult:
    """log Gamma(x) for x > 0 by Stirling's series after argument raising."""
    cfg = config or DEFAULT_CONFIG
    x = _positive(x)
    y, log_prod, m = _raise_argument(x)
    main = (y - 0.5) * math.log(y) - y + _HALF_LOG_2PI
    inv_y2 = 1.0 / (y * y)
    power = 1.0 / y
    tail = 0.0
    trunc = 0.0
    used = 0
    kmax = cfg.bernoulli_count // 2
    for k in range(1, kmax + 1):
        term = _STIRLING_COEF[k] * power
        if abs(term) <= 0.25 * EPS * abs(main):
            trunc = abs(term)
            break
        tail += term
        used = k
        power *= inv_y2
    else:
        trunc = abs(_STIRLING_COEF[kmax] * power)
    value = main + tail - log_prod
    rounding = 4 * EPS * (abs(main) + abs(log_prod) + m * 1.0 + abs(value))
    return EvalResult(value, trunc + rounding, Method.CLOSED_FORM, used + m)


def _log_abs_gamma(x: float, config: EvalConfig) -> tuple[float, int, float]:
    """(log|Gamma(x)|, sign, error) for any real x that is not a pole."""
    if x > 0:
        r = log_gamma(x, config)
        return r.value, 1, r.abs_error_estimate
    if x == math.floor(x):
        raise PoleError(f"Gamma has a pole at {x!r}")
    # reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
    red = x - 2.0 * round(x / 2.0)
    s = math.sin(math.pi * red)
    r = log_gamma(1.0 - x, config)
    value = math.log(math.pi) - math.log(abs(s)) - r.value
    return value, (1 if s > 0 else -1), r.abs_error_estimate + 4 * EPS * (abs(value) + 1.0)


def digamma(x, config: EvalConfig | None = None) -> EvalResult:
    """psi(x) = d/dx log Gamma(x) for x > 0."""
    cfg = config or DEFAULT_CONFIG
    x = _positive(x)
    shift = 0.0
    y = x
    while y < STIRLING_CUTOFF:
        shift += 1.0 / y
        y += 1.0
    main = math.log(y) - 0.5 / y
    inv_y2 = 1.0 / (y * y)
    power = inv_y2
    tail = 0.0
    trunc = 0.0
    used = 0
    kmax = cfg.bernoulli_count // 2
    for k in range(1, kmax + 1):
        term = float(_BERNOULLI_EXACT[2 * k]) / (2 * k) * power
        if abs(term) <= 0.25 * EPS * abs(main):
            trunc = abs(term)
            break
        tail -= term
        used = k
        power *= inv_y2
    value = main + tail - shift
    rounding = 4 * EPS * (abs(main) + abs(shift) + abs(value))
    return EvalResult(value, trunc + rounding, Method.CLOSED_FORM, used + int(y - x + 0.5))


def _em_split(z: float, config: EvalConfig) -> int:
    return max(config.euler_maclaurin_shift, math.ceil(abs(z)) + 5)


def _em_regular(z: float, a: float, n_split: int, config: EvalConfig) -> tuple[float, float, float, int]:
    """Euler-Maclaurin pieces of zeta(z, a) other than the pole term.

    Returns ``(value, truncation, magnitude, terms)`` where ``value`` is
    ``sum_{n<N} (n+a)^-z + (N+a)^-z / 2 + Bernoulli tail`` and
    ``magnitude`` is the sum of absolute values of everything added, used
    for the rounding floor.
    """
    direct = [(n + a) ** -z for n in range(n_split)]
    base = n_split + a
    half = 0.5 * base ** -z
    head = math.fsum(direct) + half
    magnitude = math.fsum(abs(t) for t in direct) + abs(half)
    # term_k = B_2k/(2k)! * z(z+1)...(z+2k-2) * base^(-z-2k+1)
    rising = z
    power = base ** (-z - 1.0)
    inv_b2 = 1.0 / (base * base)
    kmax = config.bernoulli_count // 2
    tail = 0.0
    trunc = 0.0
    prev = math.inf
    used = 0
    for k in range(1, kmax + 2):
        if k > 1:
            rising *= (z + 2 * k - 3) * (z + 2 * k - 2)
            power *= inv_b2
        term = _EM_COEF[k] * rising * power
        if k > kmax or abs(term) > abs(prev) or abs(term) <= 0.125 * EPS * abs(head):
            trunc = abs(term)
            break
        tail += term
        magnitude += abs(term)
        prev = term
        used = k
    return head + tail, trunc, magnitude, n_split + used


def hurwitz_zeta(z, x, config: EvalConfig | None = None) -> EvalResult:
    """zeta(z, x) = sum_{n>=0} (n+x)^-z, continued analytically to all real
    z != 1 by Euler-Maclaurin summation."""
    cfg = config or DEFAULT_CONFIG
    z = _real(z, "z")
    x = _positive(x)
    if z == 1.0:
        raise PoleError("hurwitz_zeta has a pole at z = 1")
    n_split = _em_split(z, cfg)
    regular, trunc, magnitude, used = _em_regular(z, x, n_split, cfg)
    pole = (n_split + x) ** (1.0 - z) / (z - 1.0)
    value = regular + pole
    rounding = 4 * EPS * (magnitude + abs(pole))
    return EvalResult(value, trunc + rounding, Method.EULER_MACLAURIN, used)


def polygamma(n: int, x, config: EvalConfig | None = None) -> EvalResult:
    """psi^(n)(x) = (-1)^(n+1) n! zeta(n+1, x); n = 0 is the digamma."""
    if int(n) != n or n < 0:
        raise ParameterError(f"polygamma order must be a nonnegative integer, got {n!r}")
    n = int(n)
    if n > MAX_POLYGAMMA_ORDER:
        raise ParameterError(f"polygamma order must be <= {MAX_POLYGAMMA_ORDER}, got {n}")
    if n == 0:
        return digamma(x, config)
    zr = hurwitz_zeta(n + 1, x, config)
    scale = math.factorial(n) * (-1 if n % 2 == 0 else 1)
    return EvalResult(scale * zr.value, abs(scale) * zr.abs_error_estimate,
                      Method.EULER_MACLAURIN, zr.terms_used)


def beta_function(x, y, config: EvalConfig | None = None) -> EvalResult:
    """B(x, y) = Gamma(x) Gamma(y) / Gamma(x + y) for x, y > 0."""
    x = _positive(x, "x")
    y = _positive(y, "y")
    a = log_gamma(x, config)
    b = log_gamma(y, config)
    c = log_gamma(x + y, config)
    log_value = a.value + b.value - c.value
    value = math.exp(log_value)
    log_err = (a.abs_error_estimate + b.abs_error_estimate + c.abs_error_estimate
               + 2 * EPS * abs(log_value))
    return EvalResult(value, value * log_err + EPS * value, Method.CLOSED_FORM,
                      a.terms_used + b.terms_used + c.terms_used)


def gauss_2f1_unit(a, b, c, config: EvalConfig | None = None) -> EvalResult:
    """2F1(a, b; c; 1) by Gauss's summation theorem.

    Requires ``c - a - b > 0`` and ``c`` not a nonpositive integer. The ratio
    is formed in log space with explicit sign tracking so that negative
    gamma arguments are allowed.
    """
    cfg = config or DEFAULT_CONFIG
    a, b, c = _real(a, "a"), _real(b, "b"), _real(c, "c")
    if not c - a - b > 0:
        raise DomainError(f"Gauss summation needs c - a - b > 0, got {c - a - b!r}")
    if c <= 0 and c == math.floor(c):
        raise DomainError(f"c must not be a nonpositive integer, got {c!r}")
    if a == 0.0 or b == 0.0:
        return EvalResult(1.0, 0.0, Method.CLOSED_FORM, 0)
    # 1/Gamma vanishes at the poles of the denominator: the series terminates
    # with zero sum
    for d in (c - a, c - b):
        if d <= 0 and d == math.floor(d):
            return EvalResult(0.0, 0.0, Method.CLOSED_FORM, 0)
    parts = [_log_abs_gamma(c, cfg), _log_abs_gamma(c - a - b, cfg),
             _log_abs_gamma(c - a, cfg), _log_abs_gamma(c - b, cfg)]
    log_value = parts[0][0] + parts[1][0] - parts[2][0] - parts[3][0]
    sign = parts[0][1] * parts[1][1] * parts[2][1] * parts[3][1]
    value = sign * math.exp(log_value)
    log_err = sum(p[2] for p in parts) + 2 * EPS * abs(log_value)
    return EvalResult(value, abs(value) * (log_err + EPS), Method.CLOSED_FORM, 4)
