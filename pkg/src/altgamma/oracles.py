"""Slow reference computations.

These deliberately avoid every trick used by the fast evaluators: plain
partial sums with a provable tail bound, and central differences. They are
meant for cross-checking, and may be orders of magnitude slower.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable

import numpy as np

from .classical import EPS, _positive, _real
from .errors import DomainError, ParameterError

__all__ = ["Rigor", "OracleResult", "zeta_direct", "alt_zeta_direct", "finite_difference"]

_CHUNK = 1 << 18
_FD_CURVATURE = 10.0


class Rigor(str, Enum):
    BOUNDED_TAIL = "bounded_tail"
    EMPIRICAL = "empirical"


@dataclass(frozen=True)
class OracleResult:
    """A reference value. With ``BOUNDED_TAIL`` rigor the true value lies
    within ``bound`` of ``value``; ``EMPIRICAL`` bounds are heuristics."""

    value: float
    rigor: Rigor
    bound: float

    def __float__(self) -> float:
        return self.value


def _count(n, name: str) -> int:
    if int(n) != n or n < 1:
        raise ParameterError(f"{name} must be a positive integer, got {n!r}")
    return int(n)


def _chunked(fn, count: int) -> tuple[float, float]:
    parts, mass = [], 0.0
    for start in range(0, count, _CHUNK):
        k = np.arange(start, min(start + _CHUNK, count), dtype=np.float64)
        v = fn(k)
        parts.append(float(np.sum(v)))
        mass += float(np.sum(np.abs(v)))
    return math.fsum(parts), mass


def zeta_direct(z, x, terms: int) -> OracleResult:
    """sum_{n < terms} (n + x)^-z, with the integral bound on the tail."""
    z = _real(z, "z")
    x = _positive(x)
    terms = _count(terms, "terms")
    if z <= 1.0:
        raise DomainError(f"direct summation needs z > 1, got {z!r}")
    value, mass = _chunked(lambda k: (k + x) ** -z, terms)
    edge = terms + x
    if edge > 1.0:
        # sum_{n >= T} f(n) <= int_{T-1}^inf f for decreasing f
        tail = (edge - 1.0) ** (1.0 - z) / (z - 1.0)
    else:
        tail = edge**-z + edge ** (1.0 - z) / (z - 1.0)
    rounding = 4 * EPS * mass * max(1.0, math.log2(terms))
    return OracleResult(value, Rigor.BOUNDED_TAIL, tail + rounding)


def alt_zeta_direct(z, x, pairs: int) -> OracleResult:
    """sum_{n < 2 pairs} (-1)^n (n + x)^-z, summed as (even, odd) pairs.

    The omitted tail of an alternating series with decreasing terms is
    bounded by its first term, (2 pairs + x)^-z.
    """
    z = _real(z, "z")
    x = _positive(x)
    pairs = _count(pairs, "pairs")
    if z <= 0.0:
        raise DomainError(f"the alternating series needs z > 0, got {z!r}")

    def pair(j):
        a = 2.0 * j + x
        # a^-z - (a+1)^-z without cancellation
        return -(a**-z) * np.expm1(-z * np.log1p(1.0 / a))

    value, mass = _chunked(pair, pairs)
    tail = (2.0 * pairs + x) ** -z
    rounding = 4 * EPS * mass * max(1.0, math.log2(pairs))
    return OracleResult(value, Rigor.BOUNDED_TAIL, tail + rounding)


def finite_difference(f: Callable, x, step) -> OracleResult:
    """Central difference (f(x+h) - f(x-h)) / 2h.

    ``f`` may return a float or anything with a ``value`` attribute. The
    bound is the heuristic 10 h^2 plus the rounding amplification.
    """
    x = _real(x, "x")
    step = _real(step, "step")
    if step <= 0.0:
        raise ParameterError(f"step must be positive, got {step!r}")

    def call(t):
        r = f(t)
        return float(getattr(r, "value", r))

    hi, lo = call(x + step), call(x - step)
    value = (hi - lo) / (2.0 * step)
    rounding = EPS * (abs(hi) + abs(lo)) / step
    return OracleResult(value, Rigor.EMPIRICAL, _FD_CURVATURE * step * step + rounding)
