# ---
# jupyter:
#   jupytext:
#     formats: py:light
# ---

# # A tour of Gamma~
#
# Gamma~(x) = Gamma(x/2) sqrt(pi) / (2 Gamma((x+1)/2)) is the gamma-like
# function whose log-derivative is minus the alternating Hurwitz zeta at
# z = 1. This script evaluates it a few ways and checks the answers agree.

import math

import numpy as np

import altgamma as ag

# The closed form at a few points, with the error estimate that every
# evaluator returns alongside its value.

for x in (0.5, 1, 2, 3.7, 10):
    r = ag.tilde_gamma(x)
    print(f"{x:5}  {r.value:.16f}  +- {r.abs_error_estimate:.1e}  [{r.method.value}]")

# Positive integers have exact double-factorial values. Odd n picks up a
# factor of pi/2.

for n in range(1, 9):
    sv = ag.tilde_gamma_integer(n)
    print(n, sv, sv.numeric)

# ## Independent routes
#
# The same number from two integrals and two infinite products. The
# products converge slowly, which is the point of printing their errors.

x = 1.3
closed = ag.tilde_gamma(x).value
routes = {
    "laplace": ag.tilde_gamma_laplace(x),
    "beta": ag.tilde_gamma_beta_integral(x),
    "hadamard": ag.tilde_gamma_hadamard(x, 10**5),
    "product": ag.tilde_gamma_product(x, 10**6),
    "limit": ag.tilde_gamma_limit(x, 10**6),
}
for name, r in routes.items():
    print(f"{name:9} {r.value:.15f}  diff {abs(r.value - closed):.2e}  est {r.abs_error_estimate:.2e}")

# How fast do the products close in? The Wallis-type product's error falls
# like 1/n, so each decade of pairs buys one digit.

for pairs in (10, 100, 1000, 10**4, 10**5):
    err = abs(ag.tilde_gamma_product(x, pairs).value - closed)
    print(f"{pairs:>7}  {err:.3e}  {err * pairs:.4f}")

# ## The negative axis
#
# The recursion Gamma~(x+1) Gamma~(x) = pi/(2x) pushes Gamma~ onto negative
# x. Even non-positive integers become poles and odd negative integers
# become zeros.

for x in np.arange(-6, 0.5, 0.5):
    p = ag.tilde_gamma_extended(float(x))
    shown = f"{p.value: .6f}" if p.kind is ag.PointKind.FINITE else p.kind.value
    print(f"{x:5.1f}  {shown}")

# Log-convexity on the positive axis shows up as non-negative second
# differences of log Gamma~.

xs = np.linspace(0.1, 10, 100)
logs = np.array([ag.log_tilde_gamma(float(t)).value for t in xs])
second = logs[:-2] - 2 * logs[1:-1] + logs[2:]
print("min second difference:", second.min())
print("reflection at 0.3:", ag.tilde_gamma(0.3).value / ag.tilde_gamma(0.7).value,
      1 / math.tan(math.pi * 0.3 / 2))
