# ---
# jupyter:
#   jupytext:
#     formats: py:light
# ---

# # psi~ and the identity harness
#
# psi~(x) = -zeta_E(1, x) is the log-derivative of Gamma~. It equals minus
# Nielsen's beta function. Three routes compute it. We compare them, then
# run the full identity suite.

import math

import altgamma as ag
from altgamma.verification import GridSpec, run_suite

for x in (0.1, 0.5, 1, 2, 3.7, 10):
    split = ag.tilde_digamma(x).value
    series = ag.tilde_digamma_series(x, 10**5).value
    integral = ag.tilde_digamma_integral(x).value
    print(f"{x:5}  {split: .15f}  {series - split: .1e}  {integral - split: .1e}")

# Integer values are log 2 plus an alternating harmonic sum, with the sign
# of log 2 flipping with parity.

for n in range(1, 7):
    sv = ag.tilde_digamma_integer(n)
    print(n, sv, sv.numeric)

# A shift by one flips the sign of psi~. That makes psi~(3/2) = pi/2 - 2.

print(ag.tilde_digamma(1.5).value, math.pi / 2 - 2)
print(ag.tilde_digamma_rational_shift(1, 2, 1))

# Higher derivatives come from the alternating zeta at integer z.

for n in range(4):
    print(n, ag.tilde_polygamma(n, 2.0).value)

# ## The suite
#
# run_suite evaluates every registered identity over its default grid. A
# record passes when either the absolute or the relative residual is under
# its tolerance.

report = run_suite()
for s in report.summaries:
    print(f"{s.identity_id:<30} {s.count:>5}  max {s.max_residual:.1e}  fails {s.fail_count}")
print("overall pass:", report.passed, "records:", len(report.records))

# A single identity on a custom grid:

small = run_suite({"lerch": GridSpec.linear(0.1, 5, 50)})
print(len(small.records), small.passed)
