# ---
# jupyter:
#   jupytext:
#     formats: py:light
# ---

# # The alternating Hurwitz zeta function
#
# zeta_E(z, x) = sum_n (-1)^n (n + x)^-z. The library evaluates it by
# splitting into two ordinary Hurwitz zetas,
# 2^-z (zeta(z, x/2) - zeta(z, (x+1)/2)), and separately by an accelerated
# alternating series. Here the two are compared.

import math

import altgamma as ag

for z in (0.5, 1.0, 1.5, 2.0, 3.0):
    row = []
    for x in (0.25, 1.0, 5.0):
        a = ag.alt_hurwitz_zeta(z, x)
        b = ag.alt_hurwitz_zeta_series(z, x)
        row.append(f"{a.value: .12f} ({abs(a.value - b.value):.0e})")
    print(f"z={z:3}", "  ".join(row))

# z = 1 is where each Hurwitz piece has its pole. The split is computed as a
# fused difference, so nothing special happens there. zeta_E(1, 1) is log 2.

for dz in (-1e-3, -1e-8, 0.0, 1e-8, 1e-3):
    print(f"{1 + dz:.8f}  {ag.alt_hurwitz_zeta(1 + dz, 1.0).value:.16f}")
print("log 2     ", math.log(2))

# At z = 0 the value is 1/2 for every x, and the z-derivative there is
# the log of Gamma~ up to a constant.

const = ag.alt_zeta_deriv0_const().numeric
for x in (0.5, 1, 2, 7):
    d = ag.alt_zeta_deriv0(x).value
    print(x, ag.alt_hurwitz_zeta(0, x).value, d + const, ag.log_tilde_gamma(x).value)

# Dirichlet eta is the x = 1 case, tied to the Riemann zeta by
# (1 - 2^(1-z)) zeta(z).

for z in (1.5, 2, 3, 4):
    lhs = ag.eta(z).value
    rhs = -math.expm1((1 - z) * math.log(2)) * ag.hurwitz_zeta(z, 1).value
    print(z, lhs, rhs)
print("pi^2/12 =", math.pi**2 / 12)
