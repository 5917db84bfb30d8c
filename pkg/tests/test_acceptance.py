"""Acceptance criteria, one test each.

Each test prints a single ``[PASS]``/``[FAIL]`` line, and the lines are
repeated in the terminal summary. Run directly with ``python
tests/test_acceptance.py`` for the lines alone.
"""

import csv
import io
import json
import math
import subprocess
import sys

import jsonschema
import pytest

from altgamma import (
    PointKind,
    alt_hurwitz_zeta,
    alt_hurwitz_zeta_series,
    alt_zeta_deriv0,
    alt_zeta_deriv0_const,
    eta,
    gauss_2f1_unit,
    hurwitz_zeta,
    log_gamma,
    log_tilde_gamma,
    nielsen_beta,
    tilde_digamma,
    tilde_digamma_integral,
    tilde_digamma_rational_shift,
    tilde_digamma_recursion,
    tilde_digamma_reflection,
    tilde_digamma_series,
    tilde_gamma,
    tilde_gamma_beta_integral,
    tilde_gamma_extended,
    tilde_gamma_hadamard,
    tilde_gamma_integer,
    tilde_gamma_laplace,
    tilde_gamma_product,
    tilde_polygamma,
)
from altgamma.oracles import finite_difference
from altgamma.verification import (
    GridSpec,
    log_convexity_records,
    polygamma_bridge,
    wallis_check,
    WALLIS_CONSTANT,
    zeta_distribution_identity,
)

RESULTS: list[str] = []

DEFAULT_X = GridSpec.linear(0.1, 10.0, 100).points()
UNIT_X = GridSpec.linear(0.02, 0.98, 49).points()
HALF_PI = 0.5 * math.pi
LOG2 = math.log(2.0)


class Checks:
    """Collects (description, worst observed, limit) triples for one criterion."""

    def __init__(self):
        self.items = []

    def le(self, what: str, observed: float, limit: float):
        self.items.append((what, observed, limit, observed <= limit))

    def true(self, what: str, ok: bool):
        self.items.append((what, 0.0 if ok else 1.0, 0.0, bool(ok)))

    @property
    def ok(self) -> bool:
        return all(i[3] for i in self.items)

    def detail(self) -> str:
        bad = [i for i in self.items if not i[3]]
        shown = bad or self.items
        return "; ".join(f"{w}: {o:.2e} <= {lim:.0e}" if lim else f"{w}: {'ok' if ok else 'NO'}"
                         for w, o, lim, ok in shown[:4])


def report(label: str, checks: Checks):
    line = f"[{'PASS' if checks.ok else 'FAIL'}] {label} ({checks.detail()})"
    RESULTS.append(line)
    print(line)
    assert checks.ok, line


def rel(a: float, b: float) -> float:
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


def test_ac01_tilde_gamma_at_one():
    c = Checks()
    c.le("closed form", abs(tilde_gamma(1).value - HALF_PI), 1e-12)
    c.le("log route", abs(math.exp(log_tilde_gamma(1).value) - HALF_PI), 1e-12)
    c.le("Laplace quadrature", abs(tilde_gamma_laplace(1).value - HALF_PI), 1e-9)
    c.le("Beta quadrature", abs(tilde_gamma_beta_integral(1).value - HALF_PI), 1e-9)
    report("AC01 Gamma~(1) = pi/2", c)


def test_ac02_integer_values_and_markers():
    c = Checks()
    worst = worst_log = 0.0
    for n in range(1, 21):
        exact = tilde_gamma_integer(n).numeric
        worst = max(worst, rel(tilde_gamma(n).value, exact))
        worst_log = max(worst_log, rel(math.exp(log_tilde_gamma(n).value), exact))
    c.le("tilde_gamma(n) vs exact", worst, 1e-12)
    c.le("general log-space route vs exact", worst_log, 1e-12)
    c.true("poles at 0,-2,-4,-6",
           all(tilde_gamma_extended(x).kind is PointKind.POLE for x in (0, -2, -4, -6)))
    c.true("zeros at -1,-3,-5",
           all(tilde_gamma_extended(x).kind is PointKind.ZERO for x in (-1, -3, -5)))
    report("AC02 integer special values, pole/zero markers", c)


def test_ac03_recursion():
    c = Checks()
    worst = 0.0
    for x in DEFAULT_X:
        worst = max(worst, rel(tilde_gamma(x + 1).value * tilde_gamma(x).value, math.pi / (2 * x)))
    c.le("Gamma~(x+1) Gamma~(x) = pi/(2x)", worst, 1e-10)
    worst = 0.0
    for n in range(2, 7):
        s = 1 if n % 2 == 0 else -1
        for x in DEFAULT_X:
            lhs = tilde_gamma(x + n).value ** s
            prod = math.prod((2 * (x + k) / math.pi) ** (1 if k % 2 == 0 else -1) for k in range(n))
            worst = max(worst, rel(lhs, prod * tilde_gamma(x).value))
    c.le("general shift, n = 2..6", worst, 1e-10)
    report("AC03 recursion", c)


def test_ac04_reflection():
    c = Checks()
    worst = max(rel(tilde_gamma(x).value / tilde_gamma(1 - x).value, 1 / math.tan(math.pi * x / 2))
                for x in UNIT_X)
    c.le("Gamma~(x)/Gamma~(1-x) = cot(pi x/2)", worst, 1e-10)
    report("AC04 reflection", c)


def test_ac05_duplication_distribution():
    c = Checks()
    worst = 0.0
    for x in DEFAULT_X:
        rhs = math.sqrt(math.pi) / 2 * math.exp(log_gamma(x).value - log_gamma(x + 0.5).value)
        worst = max(worst, rel(tilde_gamma(2 * x).value, rhs))
    c.le("duplication", worst, 1e-10)
    worst = 0.0
    for n in (1, 3, 5):
        for x in DEFAULT_X:
            prod = math.prod(tilde_gamma(x + j / n).value ** (1 if j % 2 == 0 else -1) for j in range(n))
            worst = max(worst, rel(tilde_gamma(n * x).value, prod / math.sqrt(n)))
    c.le("distribution n = 1, 3, 5", worst, 1e-10)
    recs = [zeta_distribution_identity(s, x, n, tolerance=1e-10)
            for s in (2, 3) for n in (1, 3, 5) for x in DEFAULT_X]
    c.le("zeta distribution s = 2, 3", max(min(r.abs_residual, r.rel_residual) for r in recs), 1e-10)
    report("AC05 duplication and distribution", c)


def test_ac06_lerch():
    c = Checks()
    const = alt_zeta_deriv0_const().numeric
    worst = max(abs(log_tilde_gamma(x).value - alt_zeta_deriv0(x).value - const) for x in DEFAULT_X)
    c.le("log Gamma~ = zeta_E'(0,x) + zeta_E'(0)", worst, 1e-11)
    c.le("zeta_E'(0) vs log sqrt(pi/2)", abs(const - 0.5 * math.log(math.pi / 2)), 1e-13)
    fd = finite_difference(lambda z: eta(z), 0.0, 1e-5)
    c.le("zeta_E'(0) vs finite difference", abs(const - fd.value), 1e-6)
    report("AC06 Lerch-type formula", c)


def test_ac07_hypergeometric_link():
    c = Checks()
    worst = max(abs(x * tilde_gamma(x).value - gauss_2f1_unit(0.5, x / 2, x / 2 + 1).value)
                for x in DEFAULT_X)
    c.le("x Gamma~(x) = 2F1(1/2, x/2; x/2+1; 1)", worst, 1e-11)
    report("AC07 2F1 link", c)


def test_ac08_digamma_three_way():
    c = Checks()
    worst = 0.0
    for x in (0.1, 0.5, 1, 2, 3.7, 10):
        vals = [-nielsen_beta(x).value, tilde_digamma_series(x, 10**5).value,
                tilde_digamma_integral(x).value]
        worst = max(worst, max(abs(a - b) for a in vals for b in vals))
    c.le("split / series / integral pairwise", worst, 1e-9)
    c.le("psi~(1) = -log 2", abs(tilde_digamma(1).value + LOG2), 1e-12)
    c.le("psi~(2) = log 2 - 1", abs(tilde_digamma(2).value - (LOG2 - 1)), 1e-12)
    c.le("psi~(1) via Nielsen split", abs(-nielsen_beta(1).value + LOG2), 1e-12)
    c.le("psi~(2) via Nielsen split", abs(-nielsen_beta(2).value - (LOG2 - 1)), 1e-12)
    report("AC08 psi~ three-way agreement", c)


def test_ac09_digamma_identities():
    c = Checks()
    rec = max(tilde_digamma_recursion(x, n).abs_residual for x in DEFAULT_X for n in range(1, 7))
    c.le("recursion n = 1..6", rec, 1e-11)
    refl = max(tilde_digamma_reflection(x).abs_residual for x in UNIT_X)
    c.le("reflection", refl, 1e-11)
    shift = max(tilde_digamma_rational_shift(p, q, n).abs_residual
                for p, q, n in ((1, 2, 1), (1, 3, 2), (2, 3, 1), (3, 4, 3)))
    c.le("rational shifts", shift, 1e-11)
    report("AC09 psi~ recursion, reflection, rational shifts", c)


def test_ac10_polygamma_bridge():
    c = Checks()
    worst = 0.0
    for n in range(4):
        sign_fact = math.factorial(n) * (1 if n % 2 else -1)
        for x in DEFAULT_X:
            a = tilde_polygamma(n, x).value
            b = sign_fact * alt_hurwitz_zeta_series(n + 1, x).value
            worst = max(worst, min(abs(a - b), rel(a, b)))
            r = polygamma_bridge(n, x)
            worst = max(worst, min(r.abs_residual, r.rel_residual))
    c.le("psi~^(n) = (-1)^(n+1) n! zeta_E(n+1, x), n = 0..3", worst, 1e-10)
    ladder = 0.0
    for n in (1, 2):
        for x in GridSpec.linear(0.5, 10, 20).points():
            fd = finite_difference(lambda t: tilde_polygamma(n - 1, t), x, 1e-5)
            ladder = max(ladder, abs(fd.value - tilde_polygamma(n, x).value))
    c.le("finite-difference ladder", ladder, 1e-5)
    report("AC10 polygamma bridge", c)


def test_ac11_log_convexity():
    c = Checks()
    recs = log_convexity_records(DEFAULT_X)
    c.le("min second difference (negated)", max(-r.lhs for r in recs), 1e-9)
    c.true(f"all {len(recs)} triples checked", len(recs) == 2450)
    c.true("zeta_E(2, x) >= 0", all(alt_hurwitz_zeta(2, x).value >= 0 for x in DEFAULT_X))
    report("AC11 weak log-convexity", c)


def test_ac12_products():
    c = Checks()
    for x in (0.5, 1, 2):
        closed = tilde_gamma(x).value
        c.le(f"Hadamard 1e5 at {x}", abs(tilde_gamma_hadamard(x, 10**5).value - closed), 1e-4)
        c.le(f"Wallis-type 1e6 at {x}", abs(tilde_gamma_product(x, 10**6).value - closed), 5e-7)
    w = wallis_check(10**4)
    c.le("Wallis 1e4 vs pi/2", w.abs_residual, WALLIS_CONSTANT / 10**4)
    report("AC12 product representations", c)


def test_ac13_alt_zeta_methods():
    c = Checks()
    excess = -math.inf
    for z in (0.5, 1, 1.5, 2, 3):
        for x in (0.25, 0.5, 1, 2, 5):
            a, b = alt_hurwitz_zeta(z, x), alt_hurwitz_zeta_series(z, x)
            excess = max(excess, abs(a.value - b.value) - (a.abs_error_estimate + b.abs_error_estimate))
    c.le("split vs series minus summed estimates", excess, 0.0)
    c.le("zeta_E(0, x) = 1/2", max(abs(alt_hurwitz_zeta(0, x).value - 0.5) for x in DEFAULT_X), 1e-11)
    worst = max(abs(eta(z).value + math.expm1((1 - z) * LOG2) * hurwitz_zeta(z, 1).value)
                for z in (1.5, 2, 3, 4))
    c.le("eta relation", worst, 1e-10)
    report("AC13 alternating zeta cross-checks", c)


VERIFY_SCHEMA = {
    "type": "object",
    "required": ["identities", "pass"],
    "properties": {
        "pass": {"type": "boolean"},
        "identities": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "records", "max_residual"],
                "properties": {
                    "id": {"type": "string"},
                    "max_residual": {"type": ["number", "null"]},
                    "records": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["inputs", "lhs", "rhs", "abs_residual", "rel_residual", "pass"],
                            "properties": {
                                "inputs": {"type": "object",
                                           "additionalProperties": {"type": "number"}},
                                "lhs": {"type": ["number", "null"]},
                                "rhs": {"type": ["number", "null"]},
                                "abs_residual": {"type": ["number", "null"]},
                                "rel_residual": {"type": ["number", "null"]},
                                "pass": {"type": "boolean"},
                            },
                        },
                    },
                },
            },
        },
    },
}


def _cli(*args):
    return subprocess.run([sys.executable, "-m", "altgamma", *args],
                          capture_output=True, text=True, timeout=300)


def test_ac14_cli_end_to_end():
    c = Checks()
    proc = _cli("--format", "json", "verify")
    c.true("verify exits 0", proc.returncode == 0)
    try:
        doc = json.loads(proc.stdout)
        jsonschema.validate(doc, VERIFY_SCHEMA)
        c.true("verify JSON is schema-valid and passes", doc["pass"] is True)
    except (ValueError, jsonschema.ValidationError):
        c.true("verify JSON is schema-valid and passes", False)
    proc = _cli("--format", "json", "eval", "tilde-gamma", "1")
    c.true("eval tilde-gamma 1 round-trips",
           proc.returncode == 0 and '"value": 1.5707963267948966' in proc.stdout
           and json.loads(proc.stdout)["value"] == HALF_PI)
    proc = _cli("--format", "csv", "table", "tilde-gamma", "linear", "1", "4", "4")
    header = next(csv.reader(io.StringIO(proc.stdout)), None)
    c.true("table CSV header", proc.returncode == 0 and header == ["x", "value", "abs_error_estimate"])
    c.true("usage error exits 2", _cli("eval", "no-such-function", "1").returncode == 2)
    c.true("domain error exits 3", _cli("eval", "tilde-gamma", "-1").returncode == 3)
    report("AC14 CLI end-to-end", c)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
