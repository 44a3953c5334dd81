# -*- coding: utf-8 -*-
"""
High-precision numerical kernel: q-series of Eisenstein series, closed-form inner lattice sums, the lemniscate
constant and numeric evaluation of exact results. All functions work at the current ``mpmath.mp`` precision
unless they take an explicit precision.
"""
import re
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

import mpmath
from mpmath import mp
from sympy import divisor_sigma

from src.ring.eisen_ring import ClosedFormValue, RingElement
from src.utils.exceptions import DomainError, PoisonedPointError

DEFAULT_PRECISION_BITS = 128

DEFAULT_Q_TERMS = 64

# Below this the q-series needs far more terms than the defaults provide
MIN_IMAGINARY_PART = "0.25"

_COMPLEX_LITERAL = re.compile(
    r"^\s*(?P<re>[+-]?\d+(?:\.\d*)?(?:[eE][+-]?\d+)?)?\s*"
    r"(?:(?P<sign>[+-])\s*(?P<im>\d+(?:\.\d*)?(?:[eE][+-]?\d+)?)?\s*[ij])?\s*$"
)


def parse_complex(text: str) -> mpmath.mpc:
    """
    Parse a literal like "0.5+2i", "0-1i", "2" or "+3i" without going through binary floats.
    """

    match = _COMPLEX_LITERAL.match(text)

    if not match or (match.group("re") is None and match.group("sign") is None):
        raise DomainError(f"cannot parse complex literal {text!r}, expected the form a+bi")

    real = mp.mpf(match.group("re") or 0)

    imag = mp.mpf(0)

    if match.group("sign") is not None:

        imag = mp.mpf(match.group("im") or 1)

        if match.group("sign") == "-":
            imag = -imag

    return mp.mpc(real, imag)


def check_upper_half_plane(tau, ctx=mp) -> mpmath.mpc:

    tau = ctx.mpc(tau)

    if tau.imag <= 0:
        raise DomainError("Im(tau) must be positive")

    if tau.imag < ctx.mpf(MIN_IMAGINARY_PART):
        raise DomainError("Im(tau) < 1/4 is not supported")

    return tau


@lru_cache(maxsize=None)
def _sigma(n: int, power: int) -> int:
    return int(divisor_sigma(n, power))


def eval_G(k: int, tau, terms: int = DEFAULT_Q_TERMS) -> mpmath.mpc:
    """
    Eisenstein series G_{2k}(tau) from its q-expansion.

    For k >= 2 this is 2 zeta(2k) + 2 (2 pi i)^(2k) / (2k-1)! * sum sigma_{2k-1}(n) q^n. For k = 1 the lattice
    sum is taken with the outer index on the integer part, m + n tau, which differs from the usual G_2 by
    -2 pi i / tau.

    Parameters
    ----------
    k : int
        Half the weight, k >= 1.
    tau : complex
        Point of the upper half plane.
    terms : int
        Number of q-series terms.
    """

    if k < 1:
        raise DomainError(f"Eisenstein series start at weight 2, got weight {2 * k}")

    if terms < 1:
        raise DomainError("the q-series needs at least one term")

    tau = check_upper_half_plane(tau)

    q = mp.exp(2j * mp.pi * tau)

    series = mp.fsum(_sigma(n, 2 * k - 1) * q ** n for n in range(1, terms + 1))

    value = 2 * mp.zeta(2 * k) + 2 * (2j * mp.pi) ** (2 * k) / mp.factorial(2 * k - 1) * series

    if k == 1:
        value -= 2j * mp.pi / tau

    return value


@lru_cache(maxsize=None)
def cot_derivative_polynomial(n: int) -> Tuple[int, ...]:
    """
    Integer coefficients (lowest degree first) of P_n with d^n/dx^n cot(x) = P_n(cot(x)).

    P_0(c) = c and P_{n+1}(c) = -(1 + c^2) P_n'(c).
    """

    if n == 0:
        return (0, 1)

    previous = cot_derivative_polynomial(n - 1)

    derivative = [i * previous[i] for i in range(1, len(previous))]

    result = [0] * (len(derivative) + 2)

    for i, value in enumerate(derivative):
        result[i] -= value
        result[i + 2] -= value

    return tuple(result)


def inner_sum(p: int, m: int, tau, ctx=mp) -> mpmath.mpc:
    """
    sum_{l in Z} (m + l tau)^(-2p) in closed form.

    With w = m / tau, sum_l (w + l)^(-s) = (-1)^(s-1) / (s-1)! * pi^s * P_{s-1}(cot(pi w)), i.e. repeated
    differentiation of the partial fraction expansion of pi cot(pi w).

    Parameters
    ----------
    ctx : mpmath context, optional
        Context to evaluate in. Worker threads pass their own, since ``mp`` changes its precision internally.
    """

    if m == 0:
        raise DomainError("the m = 0 row has a pole; it contributes 2 zeta(2p) / tau^(2p) separately")

    if p < 1:
        raise DomainError(f"p must be >= 1, got {p}")

    tau = check_upper_half_plane(tau, ctx)

    s = 2 * p

    cot_value = ctx.cot(ctx.pi * m / tau)

    value = ctx.polyval(list(reversed(cot_derivative_polynomial(s - 1))), cot_value)

    return -(ctx.pi ** s) * value / (ctx.factorial(s - 1) * tau ** s)


def inner_tail(p: int, m: int, tau, nmax: int, ctx=mp) -> mpmath.mpc:
    """
    sum_{|l| > nmax} (m + l tau)^(-2p) = tau^(-2p) [zeta(2p, nmax + 1 + m/tau) + zeta(2p, nmax + 1 - m/tau)].
    """

    if nmax < 0:
        raise DomainError(f"nmax must be >= 0, got {nmax}")

    tau = check_upper_half_plane(tau, ctx)

    shift = ctx.mpc(m) / tau

    return (ctx.zeta(2 * p, nmax + 1 + shift) + ctx.zeta(2 * p, nmax + 1 - shift)) / tau ** (2 * p)


def coth(z, ctx=mp) -> mpmath.mpc:
    """
    Hyperbolic cotangent through exponentials of -2|Re z|, so large arguments tend to +-1 without overflow.

    Raises
    ------
    PoisonedPointError
        When |sinh z| <= 1e-12, i.e. next to a pole.
    """

    z = ctx.mpc(z)

    if abs(ctx.sinh(z)) <= ctx.mpf("1e-12"):
        raise PoisonedPointError(f"coth has a pole next to {ctx.nstr(z, 15)}")

    sign = 1 if z.real >= 0 else -1

    decay = ctx.exp(-2 * sign * z)

    return sign * (1 + decay) / (1 - decay)


def lemniscate_constant(precision_bits: int = DEFAULT_PRECISION_BITS) -> mpmath.mpf:
    """
    varpi = pi / agm(1, sqrt 2) = 2.6220575542921...
    """

    if precision_bits < 53:
        raise DomainError("the lemniscate constant needs at least 53 bits")

    with mp.workprec(precision_bits):
        value = mp.pi / mp.agm(1, mp.sqrt(2))

    return value


def lemniscate_constant_gamma(precision_bits: int = DEFAULT_PRECISION_BITS) -> mpmath.mpf:
    """
    varpi = Gamma(1/4)^2 / (2 sqrt(2 pi)); independent route used for cross-checks.
    """

    with mp.workprec(precision_bits):
        value = mp.gamma(mp.mpf(1) / 4) ** 2 / (2 * mp.sqrt(2 * mp.pi))

    return value


def _rational(value: Fraction) -> mpmath.mpf:
    return mp.mpf(value.numerator) / value.denominator


def eval_ring_element(x: RingElement, tau, terms: int = DEFAULT_Q_TERMS) -> mpmath.mpc:
    """
    Numeric value of a ring element at tau, with G_2, G_4, G_6 from their q-series.
    """

    tau = check_upper_half_plane(tau)

    if x.is_zero():
        return mp.mpc(0)

    needed = {2: max(m.c for m, _ in x), 4: max(m.d for m, _ in x), 6: max(m.e for m, _ in x)}

    generators = {weight: eval_G(weight // 2, tau, terms) for weight, power in needed.items() if power > 0}

    pi2 = mp.pi ** 2
    tau2 = tau ** 2

    total = []

    for monomial, coeff in x:

        value = _rational(coeff) * pi2 ** monomial.a * tau2 ** monomial.b

        for weight, power in ((2, monomial.c), (4, monomial.d), (6, monomial.e)):
            if power:
                value *= generators[weight] ** power

        total.append(value)

    return mp.fsum(total)


def eval_closed_form(v: ClosedFormValue, precision_bits: int = DEFAULT_PRECISION_BITS) -> mpmath.mpf:
    """
    Numeric value of sum coeff * pi^x * varpi^y.
    """

    varpi = lemniscate_constant(precision_bits)

    with mp.workprec(precision_bits):
        value = mp.fsum(_rational(coeff) * mp.pi ** x * varpi ** y for (x, y), coeff in v)

    return value


def relative_difference(reference, candidate) -> mpmath.mpf:
    """
    |reference - candidate| / |reference|, falling back to the absolute difference when the reference vanishes.
    """

    scale = abs(reference)

    difference = abs(reference - candidate)

    return difference / scale if scale > 0 else difference


def cauchy_numeric(p: int, one_sided: bool = False, terms: int = 60) -> mpmath.mpf:
    """
    sum_{m != 0} coth(m pi) / m^(4p+3) summed numerically.

    coth(m pi) - 1 = 2 e^(-2 m pi) / (1 - e^(-2 m pi)) decays geometrically, so the series splits into
    zeta(4p+3) plus a short correction.
    """

    if p < 0:
        raise DomainError(f"p must be >= 0, got {p}")

    s = 4 * p + 3

    correction = mp.fsum(2 * mp.exp(-2 * m * mp.pi) / (-mp.expm1(-2 * m * mp.pi) * mp.mpf(m) ** s)
                         for m in range(1, terms + 1))

    value = mp.zeta(s) + correction

    return value if one_sided else 2 * value
