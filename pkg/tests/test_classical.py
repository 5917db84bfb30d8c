import math
from fractions import Fraction

import mpmath as mp
import pytest

from altgamma import (
    DomainError,
    EvalConfig,
    Method,
    ParameterError,
    PoleError,
    bernoulli_exact,
    bernoulli_numbers,
    beta_function,
    digamma,
    gauss_2f1_unit,
    hurwitz_zeta,
    log_gamma,
    polygamma,
)
from altgamma.oracles import zeta_direct

EULER_GAMMA = 0.5772156649015329


class TestBernoulli:
    def test_first_three(self):
        assert list(bernoulli_numbers(2)) == [1.0, -0.5, 1 / 6]

    def test_b4(self):
        assert bernoulli_exact(4)[4] == Fraction(-1, 30)

    def test_odd_vanish(self):
        table = bernoulli_exact(41)
        assert table[3] == 0
        assert all(table[k] == 0 for k in range(3, 42, 2))

    def test_against_mpmath(self):
        for k, b in enumerate(bernoulli_exact(64)):
            if k == 1:
                assert b == Fraction(-1, 2)
                continue
            assert b == Fraction(mp.bernfrac(k)[0], mp.bernfrac(k)[1])

    @pytest.mark.parametrize("count", [0, 65, -1])
    def test_range(self, count):
        with pytest.raises(ParameterError):
            bernoulli_numbers(count)


class TestLogGamma:
    def test_one(self, within):
        within(log_gamma(1).value, 0.0, 5e-15)

    def test_half(self, within):
        within(log_gamma(0.5).value, 0.5 * math.log(math.pi), 1e-14)

    def test_five(self, within):
        within(log_gamma(5).value, math.log(24), 1e-14)

    @pytest.mark.parametrize("x", [1e-8, 0.01, 0.37, 2.5, 9.99, 10.0, 33.3, 1e3, 1e7])
    def test_estimate_covers_error(self, x):
        r = log_gamma(x)
        assert r.abs_error_estimate < 1e-12 * max(1.0, abs(r.value))
        assert abs(r.value - float(mp.loggamma(x))) <= r.abs_error_estimate

    @pytest.mark.parametrize("bad", [0.0, -1.5, math.nan, math.inf, "a"])
    def test_domain(self, bad):
        with pytest.raises(DomainError):
            log_gamma(bad)


class TestDigamma:
    def test_one(self, within):
        within(digamma(1).value, -EULER_GAMMA, 1e-14)

    def test_two(self, within):
        within(digamma(2).value, 1 - EULER_GAMMA, 1e-14)

    def test_half(self, within):
        within(digamma(0.5).value, -EULER_GAMMA - 2 * math.log(2), 1e-14)

    @pytest.mark.parametrize("x", [1e-6, 0.2, 1.7, 12.0, 500.0])
    def test_estimate_covers_error(self, x):
        r = digamma(x)
        assert abs(r.value - float(mp.digamma(x))) <= r.abs_error_estimate

    def test_domain(self):
        with pytest.raises(DomainError):
            digamma(-0.5)


class TestPolygamma:
    def test_trigamma_one(self, within):
        within(polygamma(1, 1).value, math.pi**2 / 6, 1e-14)

    def test_order_zero_delegates(self):
        assert polygamma(0, 1).value == digamma(1).value

    def test_tetragamma_one(self, within):
        apery = zeta_direct(3, 1, 10**5)
        within(polygamma(2, 1).value, -2 * apery.value, 2 * apery.bound + 1e-14)
        within(polygamma(2, 1).value, -2.4041138063191885, 1e-14)

    @pytest.mark.parametrize("n", range(1, 13))
    def test_against_mpmath(self, n):
        for x in (0.3, 2.0, 15.0):
            r = polygamma(n, x)
            assert abs(r.value - float(mp.polygamma(n, x))) <= r.abs_error_estimate

    def test_order_limits(self):
        with pytest.raises(ParameterError):
            polygamma(13, 1.0)
        with pytest.raises(ParameterError):
            polygamma(1.5, 1.0)


class TestHurwitz:
    def test_basel(self, within):
        within(hurwitz_zeta(2, 1).value, math.pi**2 / 6, 1e-14)

    def test_z_zero(self, within):
        within(hurwitz_zeta(0, 0.25).value, 0.25, 1e-14)
        for x in (0.1, 1.0, 3.3):
            within(hurwitz_zeta(0, x).value, 0.5 - x, 1e-13)

    def test_half_shift(self, within):
        within(hurwitz_zeta(2, 0.5).value, math.pi**2 / 2, 1e-13)

    def test_pole(self):
        with pytest.raises(PoleError):
            hurwitz_zeta(1, 1)
        # a pole is a domain error too
        with pytest.raises(DomainError):
            hurwitz_zeta(1.0, 2.0)

    @pytest.mark.parametrize("z", [-6.5, -2.0, -0.5, 0.5, 0.999, 1.001, 2.5, 9.0, 30.0])
    @pytest.mark.parametrize("x", [0.05, 0.5, 1.0, 4.2, 25.0])
    def test_estimate_covers_error(self, z, x):
        r = hurwitz_zeta(z, x)
        assert r.method is Method.EULER_MACLAURIN
        assert abs(r.value - float(mp.zeta(z, x))) <= r.abs_error_estimate

    def test_config_changes_work_not_value(self):
        tight = hurwitz_zeta(2.5, 0.4)
        loose = hurwitz_zeta(2.5, 0.4, EvalConfig(bernoulli_count=8))
        assert abs(tight.value - loose.value) <= tight.abs_error_estimate + loose.abs_error_estimate


class TestBeta:
    def test_half_half(self, within):
        within(beta_function(0.5, 0.5).value, math.pi, 5e-14)

    def test_one_half(self, within):
        within(beta_function(1, 0.5).value, 2.0, 1e-14)

    def test_two_three(self, within):
        within(beta_function(2, 3).value, 1 / 12, 1e-15)

    def test_domain(self):
        with pytest.raises(DomainError):
            beta_function(0.0, 1.0)


class TestGauss:
    def test_half_half_three_halves(self, within):
        within(gauss_2f1_unit(0.5, 0.5, 1.5).value, math.pi / 2, 1e-13)

    @pytest.mark.parametrize("b, c", [(0.3, 2.0), (-4.5, 1.0), (7.0, 9.5)])
    def test_zero_parameter(self, b, c):
        assert gauss_2f1_unit(0, b, c).value == 1.0

    def test_half_one_two(self, within):
        within(gauss_2f1_unit(0.5, 1, 2).value, 2.0, 1e-13)

    def test_negative_arguments(self):
        for a, b, c in ((-0.5, 0.25, 1.3), (-2.5, -1.25, -0.5), (0.3, -3.7, 0.1)):
            r = gauss_2f1_unit(a, b, c)
            ref = float(mp.hyp2f1(a, b, c, 1))
            assert abs(r.value - ref) <= r.abs_error_estimate + 1e-15

    def test_terminating_zero(self):
        # c - a = -1 makes 1/Gamma(c - a) vanish
        assert gauss_2f1_unit(2.0, -5.0, 1.0).value == 0.0

    def test_divergent(self):
        with pytest.raises(DomainError):
            gauss_2f1_unit(1.0, 1.0, 2.0)
        with pytest.raises(DomainError):
            gauss_2f1_unit(-3.5, -2.5, -2.0)
