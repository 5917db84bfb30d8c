import mpmath as mp
import pytest

mp.mp.dps = 40


def ref_tilde_gamma(x):
    x = mp.mpf(x)
    return mp.gamma(x / 2) * mp.sqrt(mp.pi) / (2 * mp.gamma((x + 1) / 2))


def ref_tilde_digamma(x):
    x = mp.mpf(x)
    return (mp.digamma(x / 2) - mp.digamma((x + 1) / 2)) / 2


def ref_alt_zeta(z, x):
    z, x = mp.mpf(z), mp.mpf(x)
    if z == 1:
        return -ref_tilde_digamma(x)
    return 2**-z * (mp.zeta(z, x / 2) - mp.zeta(z, (x + 1) / 2))


@pytest.fixture
def within():
    """Assert |got - want| <= tol, reporting both numbers on failure."""
    def check(got, want, tol):
        got = float(got)
        want = float(want)
        assert abs(got - want) <= tol, f"got {got!r}, want {want!r}, diff {abs(got - want):.3e} > {tol:.1e}"
    return check


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
