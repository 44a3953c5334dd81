# -*- coding: utf-8 -*-
import threading
from fractions import Fraction
from math import comb, factorial
from typing import List

from src.ring.eisen_ring import ZERO, RingElement, pi_tau
from src.utils.exceptions import DomainError


class BernoulliCache(object):
    """
    Append-only table of Bernoulli numbers B_0, B_1, ... (convention B_1 = -1/2).

    Entries are produced by the defining recurrence sum_{j=0}^{n} C(n+1, j) B_j = 0 and never change once stored.
    Extension of the table is guarded by a lock so a shared instance can be used from several threads.

    Attributes
    ----------
    table : list of Fraction
        B_n at position n.
    """

    def __init__(self):

        self.table: List[Fraction] = [Fraction(1)]

        self._lock = threading.Lock()

    def __getitem__(self, n: int) -> Fraction:

        if n < 0:
            raise DomainError(f"Bernoulli numbers are indexed by n >= 0, got {n}")

        if n < len(self.table):
            return self.table[n]

        with self._lock:

            while len(self.table) <= n:

                m = len(self.table)

                if m >= 3 and m % 2 == 1:
                    self.table.append(Fraction(0))
                    continue

                partial = sum(comb(m + 1, j) * self.table[j] for j in range(m))

                self.table.append(-partial / (m + 1))

        return self.table[n]


_BERNOULLI = BernoulliCache()


def bernoulli(n: int) -> Fraction:
    """
    The Bernoulli number B_n with B_1 = -1/2.
    """
    return _BERNOULLI[n]


def binomial(n: int, k: int) -> Fraction:
    """
    C(n, k), extended by zero outside 0 <= k <= n.

    The reduction formulas sum over unrestricted splittings and rely on out-of-range binomials vanishing.
    """

    if n < 0:
        raise DomainError(f"binomial expects n >= 0, got {n}")

    if k < 0 or k > n:
        return Fraction(0)

    return Fraction(comb(n, k))


def zeta_even_coefficient(l: int) -> Fraction:
    """
    The rational r with zeta(2l) = r * pi^(2l) (Euler).
    """

    if l <= 0:
        raise DomainError(f"zeta_even expects l >= 1, got {l}")

    sign = 1 if l % 2 == 1 else -1

    return sign * bernoulli(2 * l) * Fraction(2) ** (2 * l) / (2 * factorial(2 * l))


def zeta_even(l: int) -> RingElement:
    """
    zeta(2l) as the ring element r * pi^(2l).
    """
    return pi_tau(l, 0, zeta_even_coefficient(l))


def zeta_dagger(k: int) -> RingElement:
    """
    zeta(k) for even k and 0 for odd k.
    """

    if k < 1:
        raise DomainError(f"zeta_dagger expects k >= 1, got {k}")

    if k % 2 == 1:
        return ZERO

    return zeta_even(k // 2)
