# -*- coding: utf-8 -*-
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Dict, List, Tuple

import numpy as np

from src.pipeline_components.reducer import MultipleEisensteinReducer
from src.ring.eisen_ring import ZERO, ClosedFormValue, RingElement, pi_tau
from src.ring.index import CothIndex, Family, IndexTuple
from src.utils.exact_core import bernoulli, zeta_even_coefficient
from src.utils.exceptions import DomainError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AlphaTable(object):
    """
    Coefficients of X * prod_{l=1}^{n-1} (X - l)(X + l) = sum_k alpha(n, k) X^k.

    Attributes
    ----------
    n : int
        Degree parameter, the polynomial has degree 2n - 1.
    coeffs : dict
        alpha(n, k) for the odd k in [1, 2n - 1]; even coefficients vanish.
    """

    n: int
    coeffs: Dict[int, int]

    def expand(self) -> List[int]:
        """
        Dense coefficient list, index = power of X.
        """

        dense = [0] * (2 * self.n)

        for k, value in self.coeffs.items():
            dense[k] = value

        return dense


@lru_cache(maxsize=None)
def alpha_table(n: int) -> AlphaTable:

    if n < 1:
        raise DomainError(f"alpha(n, k) is defined for n >= 1, got {n}")

    # object dtype keeps Python integers, so the convolution stays exact
    poly = np.array([0, 1], dtype=object)

    for l in range(1, n):
        poly = np.convolve(poly, np.array([-l * l, 0, 1], dtype=object))

    return AlphaTable(n, {k: int(poly[k]) for k in range(1, 2 * n, 2)})


def alpha(n: int, k: int) -> int:
    """
    alpha(n, k); zero outside [0, 2n - 1] and for even k.
    """
    return alpha_table(n).coeffs.get(k, 0)


def cauchy_closed_form(p: int, one_sided: bool = False) -> ClosedFormValue:
    """
    Exact value of sum_{m != 0} coth(m pi) / m^(4p+3).

    Parameters
    ----------
    p : int
        p >= 0.
    one_sided : bool
        Return the sum over m >= 1 only (half of the two-sided value).

    Returns
    -------
    ClosedFormValue
        A rational multiple of pi^(4p+3).
    """

    if p < 0:
        raise DomainError(f"p must be >= 0, got {p}")

    total = Fraction(0)

    for nu in range(2 * p + 3):

        partner = 4 * p + 4 - 2 * nu

        total += (-1) ** (nu + 1) * bernoulli(2 * nu) * bernoulli(partner) / (factorial(2 * nu) * factorial(partner))

    total *= 2 ** (4 * p + 3)

    if one_sided:
        total /= 2

    return ClosedFormValue({(4 * p + 3, 0): total})


def sinh_inner_identity(nu: int) -> List[Tuple[int, RingElement]]:
    """
    Express 1/sinh^(2 nu)(m pi i / tau) through the inner lattice sums S_j(m) = sum_l (m + l tau)^(-2j).

    Returns
    -------
    list of (int, RingElement)
        Pairs (j, coeff_j) with 1/sinh^(2 nu) = sum_j coeff_j S_j(m), where

            coeff_j = 2^(2 nu)/(2 nu - 1)! * alpha(nu, 2j - 1) * (2j - 1)! * (2 pi i / tau)^(-2j)

        and (2 pi i / tau)^(-2j) = (-4)^(-j) pi^(-2j) tau^(2j).
    """

    if nu < 1:
        raise DomainError(f"nu must be >= 1, got {nu}")

    prefactor = Fraction(2 ** (2 * nu), factorial(2 * nu - 1))

    terms = []

    for j in range(1, nu + 1):

        a = alpha(nu, 2 * j - 1)

        if a == 0:
            continue

        coeff = prefactor * a * factorial(2 * j - 1) / Fraction(-4) ** j

        terms.append((j, pi_tau(-j, j, coeff)))

    return terms


class CothSeriesSolver(object):
    """
    Solves the alternating-binomial recursion for the coth-weighted series C_r^<2k>(2p_1, ..., 2p_r; tau).

    Since sum_mu C(k, mu)(-1)^(k-mu) coth^(2 mu) = (coth^2 - 1)^k = sinh^(-2k), the left-hand side of the
    recursion is triangular in C^<2 mu> with unit diagonal, and every right-hand side is a combination of
    multiple Eisenstein-type series of depth r + 1 supplied by the reducer.

    Attributes
    ----------
    reducer : MultipleEisensteinReducer
        Source of the G~ closed forms.
    cache : dict
        Solved levels C^<0>, ..., C^<2k> per exponent signature.
    """

    def __init__(self, reducer: MultipleEisensteinReducer = None):

        self.reducer = reducer if reducer is not None else MultipleEisensteinReducer()

        self.cache: Dict[Tuple[int, ...], List[RingElement]] = {}

    def coth_reduce(self, c: CothIndex) -> RingElement:
        """
        Exact formula for C_r^<2k>(2p_1, ..., 2p_r; tau).

        Parameters
        ----------
        c : CothIndex
            Exponent signature and k.

        Returns
        -------
        RingElement
            Laurent in pi^2; pi^(2k) tau^(2(p_1+...+p_r)) times it is a polynomial.
        """

        if c.k < 0:
            raise DomainError(f"the coth power must be non-negative, got {c.power}")

        halves = c.base.halves

        levels = self.cache.setdefault(halves, [])

        if not levels:
            # coth^0 = 1 leaves the star series
            levels.append(self.reducer.reduce_multi(IndexTuple(halves, Family.STAR)))

        while len(levels) <= c.k:

            k = len(levels)

            lower = ZERO

            for mu in range(k):
                lower = lower + levels[mu] * (comb(k, mu) * (-1) ** (k - mu))

            levels.append(self._recursion_rhs(halves, k) - lower)

            logger.debug("Solved level 2k = %d for %s", 2 * k, c.base.exponents)

        return levels[c.k]

    def _recursion_rhs(self, halves: Tuple[int, ...], k: int) -> RingElement:

        r = len(halves)

        zeta_product = Fraction(1)

        for p in halves:
            zeta_product *= zeta_even_coefficient(p)

        rhs = ZERO

        for h, coeff in sinh_inner_identity(k):

            extended = IndexTuple(halves + (h,), Family.FULL)

            full = self.reducer.reduce_multi(extended)

            zero_row = pi_tau(sum(halves) + h, -(sum(halves) + h), 2 ** (r + 1) * zeta_product * zeta_even_coefficient(h))

            rhs = rhs + coeff * (full - zero_row)

        return rhs

    def membership_scaled(self, c: CothIndex) -> RingElement:
        """
        pi^(2k) tau^(2(p_1+...+p_r)) C_r^<2k>, which has no negative exponents.
        """
        return self.coth_reduce(c) * pi_tau(c.k, sum(c.base.halves))
