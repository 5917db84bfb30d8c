"""Identity harness.

Every identity is a named check that turns one grid point (plus any inner
parameters) into :class:`ResidualRecord` objects. ``run_suite`` evaluates a
selection of them and returns a deterministic :class:`SuiteReport`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable, Mapping

import numpy as np

from .alt_zeta import (
    alt_hurwitz_zeta,
    alt_hurwitz_zeta_series,
    alt_zeta_deriv0,
    alt_zeta_deriv0_const,
    eta,
)
from .classical import (
    _positive,
    gauss_2f1_unit,
    hurwitz_zeta,
    polygamma,
)
from .errors import ParameterError
from .oracles import finite_difference
from .results import DEFAULT_CONFIG, EvalConfig, PointKind, ResidualRecord
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
    duplication_identity,
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

__all__ = [
    "Spacing",
    "GridSpec",
    "IdentitySummary",
    "SuiteReport",
    "IDENTITIES",
    "default_grids",
    "run_suite",
    "lerch_identity",
    "wallis_check",
    "WALLIS_CONSTANT",
    "zeta_distribution_identity",
    "polygamma_bridge",
    "alt_zeta_method_agreement",
    "tilde_gamma_method_agreement",
    "tilde_digamma_method_agreement",
    "log_convexity_records",
]

# pi/2 - (Wallis partial product with n factors) ~ (pi/8)/n; rounded up
WALLIS_CONSTANT = 0.4

CLOSED_TOL = 1e-10
TRUNCATED_TOL = 1e-6
LIMIT_TOL = 1e-5
LIMIT_STEPS = 1_000_000
FD_STEP = 1e-5


class Spacing(str, Enum):
    LINEAR = "linear"
    LOGARITHMIC = "logarithmic"


@dataclass(frozen=True)
class GridSpec:
    start: float
    stop: float
    count: int
    spacing: Spacing = Spacing.LINEAR

    def __post_init__(self):
        object.__setattr__(self, "spacing", Spacing(self.spacing))
        object.__setattr__(self, "start", float(self.start))
        object.__setattr__(self, "stop", float(self.stop))
        if int(self.count) != self.count:
            raise ParameterError(f"grid count must be an integer, got {self.count!r}")
        object.__setattr__(self, "count", int(self.count))
        if not (math.isfinite(self.start) and math.isfinite(self.stop)):
            raise ParameterError("grid ends must be finite")
        # a one-point grid with start == stop is allowed for single evaluations
        if self.count == 1:
            if self.start != self.stop:
                raise ParameterError("a one-point grid needs start == stop")
        elif self.count < 1 or not self.start < self.stop:
            raise ParameterError("grid needs start < stop and count >= 2")
        if self.spacing is Spacing.LOGARITHMIC and self.start <= 0.0:
            raise ParameterError("logarithmic grid needs start > 0")

    @classmethod
    def linear(cls, start, stop, count) -> GridSpec:
        return cls(start, stop, count, Spacing.LINEAR)

    @classmethod
    def logarithmic(cls, start, stop, count) -> GridSpec:
        return cls(start, stop, count, Spacing.LOGARITHMIC)

    def points(self) -> list[float]:
        if self.count == 1:
            return [self.start]
        if self.spacing is Spacing.LINEAR:
            pts = np.linspace(self.start, self.stop, self.count)
        else:
            pts = np.geomspace(self.start, self.stop, self.count)
        # pin the ends exactly
        pts[0], pts[-1] = self.start, self.stop
        return [float(p) for p in pts]


@dataclass(frozen=True)
class IdentitySummary:
    identity_id: str
    count: int
    max_residual: float
    fail_count: int


@dataclass(frozen=True)
class SuiteReport:
    records: tuple[ResidualRecord, ...]
    summaries: tuple[IdentitySummary, ...] = field(default=())

    @classmethod
    def from_records(cls, records: Iterable[ResidualRecord]) -> SuiteReport:
        ordered = tuple(sorted(records, key=ResidualRecord.sort_key))
        by_id: dict[str, list[ResidualRecord]] = {}
        for r in ordered:
            by_id.setdefault(r.identity_id, []).append(r)
        summaries = tuple(
            IdentitySummary(
                key,
                len(recs),
                max(_tested_residual(r) for r in recs),
                sum(not r.passed for r in recs),
            )
            for key, recs in by_id.items()
        )
        return cls(ordered, summaries)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def records_for(self, identity_id: str) -> list[ResidualRecord]:
        return [r for r in self.records if r.identity_id == identity_id]

    def as_dict(self) -> dict:
        identities = []
        for s in self.summaries:
            identities.append({
                "id": s.identity_id,
                "records": [r.as_dict() for r in self.records_for(s.identity_id)],
                "max_residual": s.max_residual,
                "fail_count": s.fail_count,
            })
        return {"identities": identities, "pass": self.passed}


def _tested_residual(r: ResidualRecord) -> float:
    """The smaller of the two residuals, i.e. the one the pass test is
    effectively judged on."""
    return min(r.abs_residual, r.rel_residual)


# -- single-point checks ------------------------------------------------------


def lerch_identity(x, config: EvalConfig | None = None, tolerance: float = 1e-11) -> ResidualRecord:
    """log Gamma~(x) against zeta_E'(0, x) + eta'(0)."""
    x = _positive(x)
    lhs = log_tilde_gamma(x, config).value
    rhs = alt_zeta_deriv0(x, config).value + alt_zeta_deriv0_const().numeric
    return ResidualRecord.compare("lerch", {"x": x}, lhs, rhs, tolerance)


def wallis_check(pairs: int, constant: float = WALLIS_CONSTANT) -> ResidualRecord:
    """prod_{k<=pairs} 4k^2 / (4k^2 - 1) against pi/2, tolerance constant/pairs."""
    if int(pairs) != pairs or pairs < 1:
        raise ParameterError(f"pairs must be a positive integer, got {pairs!r}")
    pairs = int(pairs)
    logs = []
    for start in range(1, pairs + 1, 1 << 18):
        k = np.arange(start, min(start + (1 << 18), pairs + 1), dtype=np.float64)
        logs.append(float(np.sum(-np.log1p(-0.25 / (k * k)))))
    lhs = math.exp(math.fsum(logs))
    return ResidualRecord.compare("wallis", {"pairs": pairs}, lhs, 0.5 * math.pi, constant / pairs)


def zeta_distribution_identity(s, x, n: int, config: EvalConfig | None = None,
                               tolerance: float = CLOSED_TOL) -> ResidualRecord:
    """zeta_E(s, n x) = n^-s sum_{j<n} (-1)^j zeta_E(s, x + j/n) for odd n."""
    x = _positive(x)
    if int(n) != n or n < 1 or n % 2 == 0:
        raise ParameterError(f"distribution formula needs a positive odd n, got {n!r}")
    n = int(n)
    lhs = alt_hurwitz_zeta(s, n * x, config).value
    parts = [(1.0 if j % 2 == 0 else -1.0) * alt_hurwitz_zeta(s, x + j / n, config).value
             for j in range(n)]
    rhs = n ** -float(s) * math.fsum(parts)
    return ResidualRecord.compare("zeta_distribution", {"s": s, "x": x, "n": n}, lhs, rhs, tolerance)


def polygamma_bridge(n: int, x, config: EvalConfig | None = None,
                     tolerance: float = CLOSED_TOL) -> ResidualRecord:
    """psi~^(n)(x) from classical polygamma at x/2 and (x+1)/2 against
    (-1)^(n+1) n! zeta_E(n+1, x) from the accelerated alternating series."""
    x = _positive(x)
    n = int(n)
    if n == 0:
        lhs = -nielsen_beta(x, config).value
    else:
        lhs = 2.0 ** -(n + 1) * (polygamma(n, 0.5 * x, config).value
                                 - polygamma(n, 0.5 * (x + 1.0), config).value)
    scale = math.factorial(n) * (1 if n % 2 else -1)
    rhs = scale * alt_hurwitz_zeta_series(n + 1, x, config).value
    return ResidualRecord.compare("polygamma_bridge", {"n": n, "x": x}, lhs, rhs, tolerance)


def alt_zeta_method_agreement(z, x, config: EvalConfig | None = None) -> ResidualRecord:
    """Split evaluator against the accelerated series, within the sum of
    their error estimates plus 1e-12."""
    a = alt_hurwitz_zeta(z, x, config)
    b = alt_hurwitz_zeta_series(z, x, config)
    tol = a.abs_error_estimate + b.abs_error_estimate + 1e-12
    return ResidualRecord.compare("alt_zeta_methods", {"z": z, "x": x}, a.value, b.value, tol)


def _pairwise(identity_id: str, x: float, results: list, slack: float) -> list[ResidualRecord]:
    out = []
    for i in range(len(results)):
        for j in range(i + 1, len(results)):
            a, b = results[i], results[j]
            tol = a.abs_error_estimate + b.abs_error_estimate + slack
            out.append(ResidualRecord.compare(
                identity_id, {"x": x, "route_a": i, "route_b": j}, a.value, b.value, tol))
    return out


def tilde_gamma_method_agreement(x, config: EvalConfig | None = None) -> list[ResidualRecord]:
    """Closed form, Laplace integral, Beta integral and Hadamard product
    (1e5 pairs), compared pairwise."""
    x = _positive(x)
    results = [
        tilde_gamma(x, config),
        tilde_gamma_laplace(x, config),
        tilde_gamma_beta_integral(x, config),
        tilde_gamma_hadamard(x, 100_000),
    ]
    return _pairwise("tilde_gamma_methods", x, results, 0.0)


def tilde_digamma_method_agreement(x, config: EvalConfig | None = None) -> list[ResidualRecord]:
    """Nielsen split, defining series (1e5 pairs) and integral, pairwise."""
    x = _positive(x)
    split = nielsen_beta(x, config)
    results = [
        type(split)(-split.value, split.abs_error_estimate, split.method, split.terms_used),
        tilde_digamma_series(x, 100_000),
        tilde_digamma_integral(x, config),
    ]
    return _pairwise("tilde_digamma_methods", x, results, 1e-10)


def log_convexity_records(points: list[float], config: EvalConfig | None = None,
                          tolerance: float = 1e-9) -> list[ResidualRecord]:
    """Second differences of log Gamma~ over every arithmetic triple of the
    grid; a record fails only if the difference is below -tolerance."""
    logs = [log_tilde_gamma(p, config).value for p in points]
    out = []
    m = len(points)
    for d in range(1, (m - 1) // 2 + 1):
        for i in range(m - 2 * d):
            second = logs[i] - 2.0 * logs[i + d] + logs[i + 2 * d]
            out.append(ResidualRecord.compare(
                "log_convexity",
                {"x_lo": points[i], "x_mid": points[i + d], "x_hi": points[i + 2 * d]},
                min(second, 0.0), 0.0, tolerance))
    return out


# -- registry -----------------------------------------------------------------


@dataclass(frozen=True)
class _Identity:
    default_grid: GridSpec
    run: Callable[[list[float], EvalConfig], list[ResidualRecord]]
    summary: str


def _each(fn):
    def run(points, cfg):
        out = []
        for p in points:
            r = fn(p, cfg)
            out.extend(r if isinstance(r, list) else [r])
        return out
    return run


def _integer(p: float) -> int:
    n = round(p)
    if abs(n - p) > 1e-9:
        raise ParameterError(f"grid point {p!r} is not an integer")
    return int(n)


def _gamma_integer(p, cfg):
    n = _integer(p)
    exact = tilde_gamma_integer(n).numeric
    # the general log-space route, not the exact shortcut
    lhs = math.exp(log_tilde_gamma(n, cfg).value)
    return ResidualRecord.compare("tilde_gamma_integer", {"n": n}, lhs, exact, 1e-12)


def _digamma_integer(p, cfg):
    n = _integer(p)
    exact = tilde_digamma_integer(n).numeric
    lhs = -nielsen_beta(n, cfg).value
    return ResidualRecord.compare("tilde_digamma_integer", {"n": n}, lhs, exact, 1e-12)


def _poles(p, cfg):
    n = _integer(p)
    if n > 0:
        raise ParameterError(f"marker check needs a nonpositive integer, got {n}")
    expected = PointKind.POLE if n % 2 == 0 else PointKind.ZERO
    got = tilde_gamma_extended(n, cfg).kind
    return ResidualRecord.compare("tilde_gamma_markers", {"x": n}, float(got is expected), 1.0, 0.0)


def _extension(p, cfg):
    lhs = tilde_gamma_extended(p, cfg).as_float()
    rhs = tilde_gamma(1.0 - p, cfg).value / math.tan(0.5 * math.pi * p)
    return ResidualRecord.compare("tilde_gamma_extension", {"x": p}, lhs, rhs, CLOSED_TOL)


def _hyper(p, cfg):
    lhs = p * tilde_gamma(p, cfg).value
    rhs = gauss_2f1_unit(0.5, 0.5 * p, 0.5 * p + 1.0, cfg).value
    return ResidualRecord.compare("hyper_link", {"x": p}, lhs, rhs, 1e-11)


def _eta(p, cfg):
    lhs = eta(p, cfg).value
    rhs = -math.expm1((1.0 - p) * math.log(2.0)) * hurwitz_zeta(p, 1.0, cfg).value
    return ResidualRecord.compare("eta_relation", {"z": p}, lhs, rhs, CLOSED_TOL)


def _flat(p, cfg):
    return ResidualRecord.compare("alt_zeta_flatness", {"x": p},
                                  alt_hurwitz_zeta(0.0, p, cfg).value, 0.5, 1e-11)


def _deriv0(p, cfg):
    fd = finite_difference(lambda z: alt_hurwitz_zeta(z, p, cfg), 0.0, FD_STEP)
    return ResidualRecord.compare("alt_zeta_deriv0", {"x": p}, alt_zeta_deriv0(p, cfg).value,
                                  fd.value, TRUNCATED_TOL)


def _digamma_fd(p, cfg):
    fd = finite_difference(lambda t: log_tilde_gamma(t, cfg), p, FD_STEP)
    return ResidualRecord.compare("digamma_bridge", {"x": p}, tilde_digamma(p, cfg).value,
                                  fd.value, TRUNCATED_TOL)


def _ladder(points, cfg):
    out = []
    for n in (1, 2):
        for p in points:
            fd = finite_difference(lambda t: tilde_polygamma(n - 1, t, cfg), p, FD_STEP)
            out.append(ResidualRecord.compare("polygamma_ladder", {"n": n, "x": p},
                                              tilde_polygamma(n, p, cfg).value, fd.value, 1e-5))
    return out


def _positivity(p, cfg):
    v = alt_hurwitz_zeta(2.0, p, cfg).value
    return ResidualRecord.compare("alt_zeta_positivity", {"x": p}, min(v, 0.0), 0.0, 0.0)


def _digamma_negative(p, cfg):
    v = tilde_digamma(p, cfg).value
    return ResidualRecord.compare("tilde_digamma_negative", {"x": p}, float(v < 0.0), 1.0, 0.0)


def _product(p, cfg):
    return ResidualRecord.compare("tilde_gamma_product", {"x": p},
                                  tilde_gamma_product(p).value, tilde_gamma(p, cfg).value,
                                  TRUNCATED_TOL)


def _hadamard(p, cfg):
    return ResidualRecord.compare("tilde_gamma_hadamard", {"x": p},
                                  tilde_gamma_hadamard(p).value, tilde_gamma(p, cfg).value,
                                  TRUNCATED_TOL)


def _limit(p, cfg):
    return ResidualRecord.compare("tilde_gamma_limit", {"x": p},
                                  tilde_gamma_limit(p, LIMIT_STEPS).value,
                                  tilde_gamma(p, cfg).value, LIMIT_TOL)


def _over(inner: Iterable, fn):
    inner = tuple(inner)

    def run(points, cfg):
        return [fn(p, k, cfg) for k in inner for p in points]
    return run


_X = GridSpec.linear(0.1, 10.0, 100)
_UNIT = GridSpec.linear(0.02, 0.98, 49)
_INTS = GridSpec.linear(1, 20, 20)
_SHIFT_PAIRS = ((1, 2), (1, 3), (2, 3), (3, 4))
_ZETA_Z = (0.5, 1.0, 1.5, 2.0, 3.0)

IDENTITIES: dict[str, _Identity] = {
    "tilde_gamma_recursion": _Identity(
        _X, _over(range(1, 7), lambda p, n, c: recursion_identity(p, n, c)),
        "Gamma~ shift by n = 1..6"),
    "tilde_gamma_reflection": _Identity(
        _UNIT, _each(lambda p, c: reflection_identity(p, c)),
        "Gamma~(x) / Gamma~(1-x) = cot(pi x / 2)"),
    "tilde_gamma_duplication": _Identity(
        _X, _each(lambda p, c: duplication_identity(p, c)),
        "Gamma~(2x) via classical Gamma"),
    "tilde_gamma_distribution": _Identity(
        _X, _over((1, 3, 5), lambda p, n, c: distribution_identity(p, n, c)),
        "Gamma~(n x) as an alternating product, n = 1, 3, 5"),
    "zeta_distribution": _Identity(
        _X, _over(((s, n) for s in (2.0, 3.0) for n in (1, 3, 5)),
                  lambda p, sn, c: zeta_distribution_identity(sn[0], p, sn[1], c)),
        "zeta_E(s, n x) as an alternating sum, s = 2, 3"),
    "hyper_link": _Identity(_X, _each(_hyper), "x Gamma~(x) = 2F1(1/2, x/2; x/2+1; 1)"),
    "tilde_gamma_integer": _Identity(_INTS, _each(_gamma_integer), "Gamma~(n) exact values"),
    "tilde_gamma_markers": _Identity(
        GridSpec.linear(-6, 0, 7), _each(_poles), "poles at even, zeros at odd nonpositive n"),
    "tilde_gamma_extension": _Identity(
        GridSpec.linear(-5.9, -0.1, 30), _each(_extension),
        "continued Gamma~ against reflection"),
    "tilde_digamma_integer": _Identity(_INTS, _each(_digamma_integer), "psi~(n) exact values"),
    "tilde_digamma_recursion": _Identity(
        _X, _over(range(1, 7), lambda p, n, c: tilde_digamma_recursion(p, n, c, 1e-11)),
        "psi~ shift by n = 1..6"),
    "tilde_digamma_reflection": _Identity(
        _UNIT, _each(lambda p, c: tilde_digamma_reflection(p, c, 1e-11)),
        "psi~(x) + psi~(1-x) = -pi / sin(pi x)"),
    "tilde_digamma_rational_shift": _Identity(
        GridSpec.linear(1, 6, 6),
        lambda pts, c: [tilde_digamma_rational_shift(p, q, _integer(n), c, 1e-11)
                        for p, q in _SHIFT_PAIRS for n in pts],
        "psi~(n + p/q) from psi~(p/q)"),
    "polygamma_bridge": _Identity(
        _X, _over(range(4), lambda p, n, c: polygamma_bridge(n, p, c)),
        "psi~^(n) from classical polygamma against the alternating series"),
    "polygamma_ladder": _Identity(
        GridSpec.linear(0.5, 10.0, 20), _ladder, "finite differences of psi~^(n-1)"),
    "digamma_bridge": _Identity(
        GridSpec.linear(0.5, 10.0, 20), _each(_digamma_fd),
        "finite difference of log Gamma~ against psi~"),
    "lerch": _Identity(_X, _each(lambda p, c: lerch_identity(p, c)),
                       "log Gamma~ = zeta_E'(0, x) + eta'(0)"),
    "alt_zeta_deriv0": _Identity(_X, _each(_deriv0),
                                 "closed-form zeta_E'(0, x) against a finite difference"),
    "eta_relation": _Identity(GridSpec.linear(1.5, 4.0, 6), _each(_eta),
                              "eta(z) = (1 - 2^(1-z)) zeta(z)"),
    "alt_zeta_flatness": _Identity(_X, _each(_flat), "zeta_E(0, x) = 1/2"),
    "alt_zeta_positivity": _Identity(GridSpec.linear(0.2, 20.0, 100), _each(_positivity),
                                     "zeta_E(2, x) >= 0"),
    "tilde_digamma_negative": _Identity(GridSpec.linear(0.02, 1.0, 50), _each(_digamma_negative),
                                        "psi~ < 0 on (0, 1]"),
    "log_convexity": _Identity(_X, lambda pts, c: log_convexity_records(pts, c),
                               "second differences of log Gamma~ >= 0"),
    "wallis": _Identity(GridSpec.logarithmic(1, 1e6, 7),
                        lambda pts, c: [wallis_check(_integer(p)) for p in pts],
                        "Wallis partial products"),
    "alt_zeta_methods": _Identity(
        GridSpec.logarithmic(0.25, 4.0, 5),
        _over(_ZETA_Z, lambda p, z, c: alt_zeta_method_agreement(z, p, c)),
        "split evaluator against accelerated series"),
    "tilde_gamma_methods": _Identity(
        GridSpec.logarithmic(0.25, 10.0, 7), _each(tilde_gamma_method_agreement),
        "four routes to Gamma~"),
    "tilde_digamma_methods": _Identity(
        GridSpec.logarithmic(0.1, 10.0, 6), _each(tilde_digamma_method_agreement),
        "three routes to psi~"),
    "tilde_gamma_product": _Identity(GridSpec.linear(0.5, 2.0, 4), _each(_product),
                                     "truncated Wallis-type product, 1e6 pairs"),
    "tilde_gamma_hadamard": _Identity(GridSpec.linear(0.5, 2.0, 4), _each(_hadamard),
                                      "truncated Weierstrass-type product, 1e5 pairs"),
    "tilde_gamma_limit": _Identity(GridSpec.linear(0.5, 2.0, 4), _each(_limit),
                                   "limit sequence at n = 1e6"),
}


def default_grids() -> dict[str, GridSpec]:
    return {key: ident.default_grid for key, ident in IDENTITIES.items()}


def run_suite(grids: Mapping[str, GridSpec | None] | None = None,
              config: EvalConfig | None = None) -> SuiteReport:
    """Run the selected identities. ``None`` runs everything on default
    grids; a ``None`` grid value picks that identity's default grid."""
    cfg = config or DEFAULT_CONFIG
    if grids is None:
        grids = default_grids()
    unknown = sorted(set(grids) - set(IDENTITIES))
    if unknown:
        raise ParameterError(f"unknown identity id(s): {', '.join(unknown)}")
    records: list[ResidualRecord] = []
    for key in sorted(grids):
        ident = IDENTITIES[key]
        grid = grids[key] or ident.default_grid
        records.extend(ident.run(grid.points(), cfg))
    return SuiteReport.from_records(records)
