import pytest
from mpmath import mp
from scipy.special import ellipk

from src.utils.exceptions import DomainError, PoisonedPointError
from src.utils.numerics import (coth, cot_derivative_polynomial, eval_G, inner_sum, inner_tail, lemniscate_constant,
                                lemniscate_constant_gamma, parse_complex, relative_difference)

I = mp.mpc(0, 1)


def test_parse_complex():

    assert parse_complex("0+2i") == mp.mpc(0, 2)
    assert parse_complex("0.5-1.5i") == mp.mpc(0.5, -1.5)
    assert parse_complex("+3i") == mp.mpc(0, 3)
    assert parse_complex("2") == mp.mpc(2, 0)

    with pytest.raises(DomainError):
        parse_complex("two")


def test_lemniscate_constant():

    assert mp.nstr(lemniscate_constant(53), 14) == "2.6220575542921"

    with mp.workprec(256):
        assert abs(lemniscate_constant(256) - lemniscate_constant_gamma(256)) < mp.mpf(2) ** -240

    # varpi = sqrt(2) K(1/sqrt 2) with scipy's parameter m = k^2
    assert float(lemniscate_constant(128)) == pytest.approx(2 ** 0.5 * ellipk(0.5), rel=1e-14)

    with pytest.raises(DomainError):
        lemniscate_constant(32)


def test_hurwitz_values_from_q_series():

    varpi = lemniscate_constant(128)

    assert abs(eval_G(1, I) + mp.pi) < mp.mpf("1e-12")
    assert abs(eval_G(2, I) - varpi ** 4 / 15) < mp.mpf("1e-12")
    assert abs(eval_G(3, I)) < mp.mpf("1e-20")
    assert abs(eval_G(4, I) - varpi ** 8 / 525) < mp.mpf("1e-12")


def test_q_series_converges():

    for tau in (I, mp.mpc(0.5, 1), mp.mpc(0, 2)):
        for k in (1, 2, 3, 5):
            assert abs(eval_G(k, tau, 40) - eval_G(k, tau, 80)) < mp.mpf("1e-20")


def test_eval_G_domain():

    with pytest.raises(DomainError, match="Im\\(tau\\) must be positive"):
        eval_G(2, mp.mpc(1, -1))

    with pytest.raises(DomainError):
        eval_G(2, mp.mpc(0, 0.1))

    with pytest.raises(DomainError):
        eval_G(0, I)


def test_cot_derivative_polynomials():

    assert cot_derivative_polynomial(0) == (0, 1)
    assert cot_derivative_polynomial(1) == (-1, 0, -1)
    assert cot_derivative_polynomial(2) == (0, 2, 0, 2)


@pytest.mark.parametrize("p", [1, 2, 3])
@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("tau", [I, mp.mpc(0, 2)])
def test_inner_sum_against_truncated_summation(p, m, tau):

    L = 200

    direct = mp.fsum(1 / (m + l * tau) ** (2 * p) for l in range(-L, L + 1))

    # sum_{|l| > L} (m + l tau)^(-2p) through the Hurwitz zeta function at the shifted arguments
    shift = m / tau

    direct += (mp.zeta(2 * p, L + 1 + shift) + mp.zeta(2 * p, L + 1 - shift)) / tau ** (2 * p)

    closed = inner_sum(p, m, tau)

    assert abs(closed - direct) / abs(closed) < mp.mpf("1e-20")


@pytest.mark.parametrize("p, m, nmax", [(1, 1, 10), (2, 3, 50), (3, -2, 5)])
def test_inner_tail_completes_the_truncated_sum(p, m, nmax):

    tau = mp.mpc(0.5, 2)

    head = mp.fsum(1 / (m + l * tau) ** (2 * p) for l in range(-nmax, nmax + 1))

    assert abs(head + inner_tail(p, m, tau, nmax) - inner_sum(p, m, tau)) < mp.mpf("1e-30")


def test_inner_sum_rejects_zero_row():

    with pytest.raises(DomainError):
        inner_sum(1, 0, I)


def test_coth():

    assert abs(coth(mp.mpf(1)) - mp.coth(1)) < mp.mpf("1e-30")
    assert abs(coth(mp.mpc(-3, 0.5)) - mp.coth(mp.mpc(-3, 0.5))) < mp.mpf("1e-30")
    assert coth(mp.mpf(10000)) == 1

    with pytest.raises(PoisonedPointError):
        coth(mp.pi * 1j)


def test_relative_difference():

    assert relative_difference(mp.mpf(2), mp.mpf(1)) == mp.mpf(0.5)
    assert relative_difference(mp.mpf(0), mp.mpf("1e-3")) == mp.mpf("1e-3")
