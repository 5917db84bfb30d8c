"""Value types returned by the evaluators and the identity harness."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from decimal import Decimal, localcontext
from enum import Enum
from fractions import Fraction

from .errors import ParameterError

__all__ = [
    "Method",
    "EvalResult",
    "EvalConfig",
    "DEFAULT_CONFIG",
    "PointKind",
    "ExtendedPoint",
    "SpecialForm",
    "SpecialValue",
    "ResidualRecord",
]

_PI = Decimal("3.14159265358979323846264338327950288419716939937510582097494")


class Method(str, Enum):
    CLOSED_FORM = "closed_form"
    EULER_MACLAURIN = "euler_maclaurin"
    ACCELERATED_SERIES = "accelerated_series"
    QUADRATURE = "quadrature"
    PRODUCT = "product"
    LIMIT_SEQUENCE = "limit_sequence"


@dataclass(frozen=True)
class EvalResult:
    """A computed value together with an absolute error estimate.

    ``terms_used`` counts whatever unit of work the method iterates over:
    series terms, product factors, quadrature nodes.
    """

    value: float
    abs_error_estimate: float
    method: Method
    terms_used: int = 0

    def __post_init__(self):
        if not self.abs_error_estimate >= 0.0:
            raise ValueError(f"negative or NaN error estimate {self.abs_error_estimate!r}")

    def __float__(self) -> float:
        return self.value

    def as_dict(self) -> dict:
        return {
            "value": self.value,
            "abs_error_estimate": self.abs_error_estimate,
            "method": self.method.value,
            "terms_used": self.terms_used,
        }


@dataclass(frozen=True)
class EvalConfig:
    """Accuracy knobs shared by series, products and quadratures.

    ``euler_maclaurin_shift`` is the minimum number of terms summed directly
    before the Euler-Maclaurin tail takes over; the actual split point also
    grows with ``|z|``.
    """

    target_abs_error: float = 1e-14
    max_terms: int = 1_000_000
    quadrature_levels: int = 12
    euler_maclaurin_shift: int = 10
    bernoulli_count: int = 30

    def __post_init__(self):
        if not (self.target_abs_error > 0.0 and math.isfinite(self.target_abs_error)):
            raise ParameterError("target_abs_error must be a positive finite number")
        if self.max_terms < 1:
            raise ParameterError("max_terms must be positive")
        if self.quadrature_levels < 1:
            raise ParameterError("quadrature_levels must be positive")
        if self.euler_maclaurin_shift < 1:
            raise ParameterError("euler_maclaurin_shift must be positive")
        if self.bernoulli_count < 2 or self.bernoulli_count % 2 or self.bernoulli_count > 64:
            raise ParameterError("bernoulli_count must be even and in [2, 64]")

    def with_overrides(self, **kwargs) -> EvalConfig:
        """Return a copy with the non-None keyword values replaced."""
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})


DEFAULT_CONFIG = EvalConfig()


class PointKind(str, Enum):
    FINITE = "finite"
    POLE = "pole"
    ZERO = "zero"


@dataclass(frozen=True)
class ExtendedPoint:
    """Value of a meromorphic function at a real point, with poles and exact
    zeros encoded as markers instead of ``inf``/``0.0``."""

    kind: PointKind
    value: float | None = None
    abs_error_estimate: float = 0.0

    def __post_init__(self):
        if (self.kind is PointKind.FINITE) != (self.value is not None):
            raise ValueError("value must be present exactly for finite points")

    @classmethod
    def pole(cls) -> ExtendedPoint:
        return cls(PointKind.POLE)

    @classmethod
    def zero(cls) -> ExtendedPoint:
        return cls(PointKind.ZERO)

    def as_float(self) -> float:
        if self.kind is PointKind.POLE:
            return math.inf
        if self.kind is PointKind.ZERO:
            return 0.0
        return self.value


class SpecialForm(str, Enum):
    RATIONAL = "rational"
    RATIONAL_TIMES_PI = "rational_times_pi"
    # coefficient * log 2 + offset
    LOG2_PLUS_RATIONAL = "rational_times_log2_plus_rational"
    # coefficient * log(pi / 2)
    RATIONAL_TIMES_LOG_HALF_PI = "rational_times_log_half_pi"


_SYMBOL = {
    SpecialForm.RATIONAL: "",
    SpecialForm.RATIONAL_TIMES_PI: "pi",
    SpecialForm.LOG2_PLUS_RATIONAL: "log(2)",
    SpecialForm.RATIONAL_TIMES_LOG_HALF_PI: "log(pi/2)",
}


@dataclass(frozen=True)
class SpecialValue:
    """An exact constant ``coefficient * symbol + offset`` with its binary64
    rendering.

    The coefficient is ``numerator / denominator``; ``offset`` is only
    non-zero for :attr:`SpecialForm.LOG2_PLUS_RATIONAL`.
    """

    form: SpecialForm
    numerator: int
    denominator: int = 1
    offset: Fraction = field(default=Fraction(0))

    def __post_init__(self):
        if self.denominator <= 0:
            raise ValueError("denominator must be positive")
        g = math.gcd(self.numerator, self.denominator)
        if g > 1:
            object.__setattr__(self, "numerator", self.numerator // g)
            object.__setattr__(self, "denominator", self.denominator // g)
        object.__setattr__(self, "offset", Fraction(self.offset))

    @classmethod
    def of(cls, form: SpecialForm, coefficient, offset=0) -> SpecialValue:
        c = Fraction(coefficient)
        return cls(form, c.numerator, c.denominator, Fraction(offset))

    @property
    def coefficient(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    @property
    def numeric(self) -> float:
        # 50 significant digits, then a single correctly rounded conversion
        with localcontext() as ctx:
            ctx.prec = 50
            c = Decimal(self.numerator) / Decimal(self.denominator)
            off = Decimal(self.offset.numerator) / Decimal(self.offset.denominator)
            if self.form is SpecialForm.RATIONAL:
                return float(self.coefficient + self.offset)
            if self.form is SpecialForm.RATIONAL_TIMES_PI:
                return float(c * _PI + off)
            if self.form is SpecialForm.LOG2_PLUS_RATIONAL:
                return float(c * Decimal(2).ln() + off)
            return float(c * (_PI / 2).ln() + off)

    def __float__(self) -> float:
        return self.numeric

    def __str__(self) -> str:
        c = self.coefficient
        sym = _SYMBOL[self.form]
        if not sym:
            text = str(c + self.offset)
        else:
            if c == 1:
                text = sym
            elif c == -1:
                text = "-" + sym
            else:
                text = f"{c}*{sym}"
            if self.offset:
                sign = "+" if self.offset > 0 else "-"
                text = f"{text} {sign} {abs(self.offset)}"
        return text

    def as_dict(self) -> dict:
        return {"form": self.form.value, "exact": str(self), "numeric": self.numeric}


def _rel(abs_residual: float, lhs: float, rhs: float) -> float:
    scale = max(abs(lhs), abs(rhs), 1e-300)
    return abs_residual / scale


@dataclass(frozen=True)
class ResidualRecord:
    """One identity checked at one point.

    ``inputs`` is an ordered tuple of ``(name, value)`` pairs so that records
    hash and sort deterministically.
    """

    identity_id: str
    inputs: tuple[tuple[str, float], ...]
    lhs: float
    rhs: float
    abs_residual: float
    rel_residual: float
    tolerance: float
    passed: bool

    @classmethod
    def compare(cls, identity_id: str, inputs, lhs: float, rhs: float,
                tolerance: float) -> ResidualRecord:
        if isinstance(inputs, dict):
            inputs = tuple(inputs.items())
        inputs = tuple((str(k), float(v)) for k, v in inputs)
        lhs, rhs = float(lhs), float(rhs)
        if lhs == rhs:
            # covers matching infinities
            abs_res = 0.0
        else:
            abs_res = abs(lhs - rhs)
        rel_res = _rel(abs_res, lhs, rhs) if math.isfinite(abs_res) else math.inf
        ok = abs_res <= tolerance or rel_res <= tolerance
        return cls(identity_id, inputs, lhs, rhs, abs_res, rel_res, float(tolerance), bool(ok))

    @property
    def inputs_dict(self) -> dict[str, float]:
        return dict(self.inputs)

    def sort_key(self):
        return (self.identity_id, self.inputs)

    def as_dict(self) -> dict:
        return {
            "inputs": self.inputs_dict,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "abs_residual": self.abs_residual,
            "rel_residual": self.rel_residual,
            "tolerance": self.tolerance,
            "pass": self.passed,
        }
