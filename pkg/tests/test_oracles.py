import math

import pytest

from altgamma import DomainError, ParameterError, log_gamma, log_tilde_gamma
from altgamma.oracles import Rigor, alt_zeta_direct, finite_difference, zeta_direct


def test_zeta_direct_basel():
    r = zeta_direct(2, 1, 10**6)
    assert r.rigor is Rigor.BOUNDED_TAIL
    assert abs(r.value - math.pi**2 / 6) <= r.bound <= 1.01e-6


def test_zeta_direct_apery():
    r = zeta_direct(3, 1, 10**4)
    assert abs(r.value - 1.2020569031595942) <= min(r.bound, 5e-9)


def test_zeta_direct_single_term():
    r = zeta_direct(2, 1, 1)
    assert r.value == 1.0
    assert r.bound == pytest.approx(1.0)
    assert math.pi**2 / 6 - 1 <= r.bound


@pytest.mark.parametrize("x", [0.05, 0.3, 1.0, 7.5])
@pytest.mark.parametrize("z", [1.1, 2.0, 4.5])
def test_zeta_direct_bound_holds(z, x):
    import mpmath as mp
    for terms in (1, 3, 50):
        r = zeta_direct(z, x, terms)
        assert abs(r.value - float(mp.zeta(z, x))) <= r.bound


def test_zeta_direct_rejects_divergent():
    with pytest.raises(DomainError):
        zeta_direct(1.0, 1, 10)
    with pytest.raises(ParameterError):
        zeta_direct(2, 1, 0)


def test_alt_zeta_direct_log2():
    r = alt_zeta_direct(1, 1, 10**6)
    assert r.bound <= 1e-6
    assert abs(r.value - math.log(2)) <= r.bound


def test_alt_zeta_direct_pi_squared_over_12():
    r = alt_zeta_direct(2, 1, 10**4)
    assert abs(r.value - math.pi**2 / 12) <= min(r.bound, 1e-8)


@pytest.mark.parametrize("z, x", [(0.5, 0.3), (1.5, 2.0), (3.0, 0.7)])
def test_alt_zeta_direct_one_pair(z, x):
    r = alt_zeta_direct(z, x, 1)
    assert r.value == pytest.approx(x**-z - (1 + x) ** -z, rel=1e-15)
    assert r.bound == pytest.approx((2 + x) ** -z, rel=1e-12)


def test_alt_zeta_direct_rejects_nonpositive_z():
    with pytest.raises(DomainError):
        alt_zeta_direct(0.0, 1.0, 5)


def test_finite_difference_log_tilde_gamma():
    r = finite_difference(log_tilde_gamma, 1.0, 1e-5)
    assert r.rigor is Rigor.EMPIRICAL
    assert abs(r.value + math.log(2)) <= 1e-6


def test_finite_difference_identity_map():
    r = finite_difference(lambda t: t, 3.25, 1e-3)
    assert r.value == pytest.approx(1.0, abs=1e-12)


def test_finite_difference_log_gamma_at_one():
    r = finite_difference(log_gamma, 1.0, 1e-5)
    assert abs(r.value + 0.5772156649015329) <= 1e-6


def test_finite_difference_bound_is_heuristic_h_squared():
    r = finite_difference(lambda t: t * t, 0.0, 1e-2)
    assert r.bound >= 10 * 1e-4


def test_finite_difference_bad_step():
    with pytest.raises(ParameterError):
        finite_difference(math.sin, 0.0, 0.0)
