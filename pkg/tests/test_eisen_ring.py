from fractions import Fraction

import numpy as np
import pytest
from mpmath import mp

from src.ring.eisen_ring import (G2, G4, G6, ONE, PI2, TAU2, ZERO, ClosedFormValue, EisensteinCombination,
                                 Monomial, RingElement, eisenstein_generator, hurwitz_value, normalize_element,
                                 normalize_higher_G, pi_tau, specialize_i)
from src.utils.exceptions import DomainError
from src.utils.numerics import eval_closed_form, eval_G, eval_ring_element, parse_complex


def random_element(rng, size=4):

    terms = {}

    for _ in range(size):
        a, b = rng.integers(-3, 4, size=2)
        c, d, e = rng.integers(0, 3, size=3)
        terms[Monomial(int(a), int(b), int(c), int(d), int(e))] = Fraction(int(rng.integers(-9, 10)),
                                                                           int(rng.integers(1, 7)))

    return RingElement(terms)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def test_ring_axioms(rng):

    for _ in range(25):

        x, y, z = random_element(rng), random_element(rng), random_element(rng)

        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x + y == y + x
        assert x * y == y * x
        assert x + ZERO == x
        assert x * ONE == x
        assert (x - x).is_zero()


def test_zero_coefficients_are_dropped():

    x = RingElement({Monomial(1, -1): 0, Monomial(): 2})

    assert len(x) == 1
    assert x == 2


def test_negative_eisenstein_exponent_is_rejected():

    with pytest.raises(DomainError):
        Monomial(c=-1)


def test_canonical_order_puts_higher_g_weight_first():

    x = pi_tau(2, -2, -Fraction(2, 15)) + G4 + pi_tau(1, -1, Fraction(2, 3)) * G2

    assert [m for m, _ in x] == [Monomial(d=1), Monomial(1, -1, c=1), Monomial(2, -2)]


@pytest.mark.parametrize("k, expected", [
    (4, G4 ** 2 * Fraction(3, 7)),
    (5, G4 * G6 * Fraction(5, 11)),
    (6, G4 ** 3 * Fraction(18, 143) + G6 ** 2 * Fraction(25, 143)),
])
def test_normalize_higher_G(k, expected):
    assert normalize_higher_G(k) == expected


def test_normalize_higher_G_rejects_weight_two():

    with pytest.raises(DomainError):
        normalize_higher_G(1)


@pytest.mark.parametrize("k", range(4, 11))
def test_normalize_higher_G_is_homogeneous(k):
    assert set(normalize_higher_G(k).weight_decomposition()) == {2 * k}


def test_normalize_higher_G_against_q_series():

    with mp.workprec(128):

        tau = parse_complex("0+2i")

        for k in range(4, 9):
            assert abs(eval_ring_element(normalize_higher_G(k), tau) - eval_G(k, tau)) < mp.mpf("1e-10")


def test_normalize_element_substitutes_G8():

    form = EisensteinCombination({4: ONE, 1: PI2 * TAU2})

    assert normalize_element(form) == G4 ** 2 * Fraction(3, 7) + PI2 * TAU2 * G2
    assert normalize_element(G4 + G6) == G4 + G6


def test_specialize_i_generators():

    assert specialize_i(G2) == ClosedFormValue({(1, 0): -1})
    assert specialize_i(G4) == ClosedFormValue({(0, 4): Fraction(1, 15)})
    assert specialize_i(G6).is_zero()
    assert specialize_i(TAU2) == ClosedFormValue({(0, 0): -1})
    assert specialize_i(ZERO).is_zero()


def test_specialize_i_is_a_homomorphism(rng):

    for _ in range(25):

        x, y = random_element(rng), random_element(rng)

        assert specialize_i(x * y) == specialize_i(x) * specialize_i(y)
        assert specialize_i(x + y) == specialize_i(x) + specialize_i(y)


def test_hurwitz_values():

    assert hurwitz_value(1) == ClosedFormValue({(1, 0): -1})
    assert hurwitz_value(2) == ClosedFormValue({(0, 4): Fraction(1, 15)})
    assert hurwitz_value(3).is_zero()
    assert hurwitz_value(4) == ClosedFormValue({(0, 8): Fraction(1, 525)})


def test_hurwitz_values_against_q_series():

    with mp.workprec(128):

        for k in range(2, 8):
            exact = eval_closed_form(hurwitz_value(k), 128)
            assert abs(eval_G(k, mp.mpc(0, 1)) - exact) < mp.mpf("1e-12")


def test_eisenstein_generator_keeps_G2():
    assert eisenstein_generator(1) == G2
    assert eisenstein_generator(3) == G6


def test_pi_tau_balance():
    assert (pi_tau(2, -2) * G4).is_pi_tau_balanced()
    assert not (pi_tau(1, 0) * G2).is_pi_tau_balanced()
