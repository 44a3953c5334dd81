# -*- coding: utf-8 -*-
import logging
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Tuple

from src.ring.eisen_ring import ONE, ZERO, EisensteinCombination, RingElement, normalize_element, pi_tau
from src.ring.index import Family, IndexTuple
from src.utils.exact_core import binomial, zeta_dagger, zeta_even, zeta_even_coefficient
from src.utils.exceptions import DomainError

logger = logging.getLogger(__name__)


class Side(Enum):
    FIRST = "first"
    SECOND = "second"


@dataclass(frozen=True)
class PartialFractionTerm(object):
    """
    One summand of 1/((x+c_1)^s_1 (x+c_2)^s_2), namely

        coeff_sign * binom / ((c_side - c_other)^difference_power * (x + c_side)^k)

    Attributes
    ----------
    side : Side
        Whose pole survives.
    k : int
        Remaining exponent of the surviving pole.
    coeff_sign : int
        (-1)^s_other.
    binom : Fraction
        C(difference_power - 1, s_other - 1).
    difference_power : int
        Power of (c_side - c_other); k + difference_power = s_1 + s_2.
    """

    side: Side
    k: int
    coeff_sign: int
    binom: Fraction
    difference_power: int

    def evaluate(self, x, c1, c2):

        own, other = (c1, c2) if self.side is Side.FIRST else (c2, c1)

        return self.coeff_sign * self.binom / ((own - other) ** self.difference_power * (x + own) ** self.k)


def partial_fraction(s1: int, s2: int) -> List[PartialFractionTerm]:
    """
    Expansion data of 1/((x+c_1)^s_1 (x+c_2)^s_2) over k_1 + k_2 = s_1 + s_2, k_1, k_2 >= 1.

    Terms whose binomial vanishes are omitted.
    """

    if s1 < 1 or s2 < 1:
        raise DomainError(f"partial fractions need positive exponents, got ({s1}, {s2})")

    terms = []

    for k1 in range(1, s1 + s2):

        k2 = s1 + s2 - k1

        first = binomial(k2 - 1, s2 - 1)

        if first:
            terms.append(PartialFractionTerm(Side.FIRST, k1, (-1) ** s2, first, k2))

        second = binomial(k1 - 1, s1 - 1)

        if second:
            terms.append(PartialFractionTerm(Side.SECOND, k2, (-1) ** s1, second, k1))

    return terms


def star_to_full(t: IndexTuple, x: RingElement) -> RingElement:
    """
    Add the m = 0 row prod_j 2 zeta(2p_j) / tau^(2p_j) to a star-series value.
    """

    if t.family is not Family.STAR:
        raise DomainError(f"star_to_full expects a star tuple, got {t.family.value}")

    return x + _zero_row(t.halves)


def _zero_row(halves: Tuple[int, ...]) -> RingElement:

    row = ONE

    for p in halves:
        row = row * pi_tau(0, -p, 2) * zeta_even(p)

    return row


def _star_depth1_form(p: int) -> EisensteinCombination:
    return EisensteinCombination({p: ONE, 0: pi_tau(p, -p, -2 * zeta_even_coefficient(p))})


class MultipleEisensteinReducer(object):
    """
    Reduces multiple Eisenstein-type series to closed forms in Q[pi^2, tau^2, G_2, G_4, G_6].

    Depth two has a closed formula (:meth:`reduce_depth2`). Higher depths are handled by
    :meth:`reduce_multi`, which repeatedly merges the last two indices of a star tuple with the partial fraction
    expansion until only depth-one star series remain. Results are cached per tuple.

    Attributes
    ----------
    cache : dict
        Maps (halves, family) to the normalized ring element already computed.
    """

    def __init__(self):

        self.cache: Dict[Tuple[Tuple[int, ...], Family], RingElement] = {}

    def star_depth1(self, p: int) -> RingElement:
        """
        G~*_{2p} = G_{2p} - 2 zeta(2p) / tau^(2p), normalized.
        """

        if p < 1:
            raise DomainError(f"p must be >= 1, got {p}")

        return normalize_element(_star_depth1_form(p))

    def reduce_depth2(self, p: int, q: int) -> RingElement:
        """
        Closed form of G~_{2p,2q}.

        Parameters
        ----------
        p, q : int
            Exponent halves, both >= 1.

        Returns
        -------
        RingElement
            G_{2(p+q)} + sum over l_1 + l_2 = p + q of the zeta-weighted G_{2l} terms plus the constant
            4/tau^(2(p+q)) [zeta(2p)zeta(2q) - zeta(2(p+q))/2 - sum zeta(2l_1)zeta(2l_2)(...)].
        """

        if p < 1 or q < 1:
            raise DomainError(f"p and q must be >= 1, got ({p}, {q})")

        s = p + q

        form = EisensteinCombination({s: ONE})

        constant = zeta_even_coefficient(p) * zeta_even_coefficient(q) - zeta_even_coefficient(s) / 2

        for l1 in range(1, s):

            l2 = s - l1

            first = binomial(2 * l2 - 1, 2 * q - 1)
            second = binomial(2 * l1 - 1, 2 * p - 1)

            form.add_term(l1, pi_tau(l2, -l2, 2 * zeta_even_coefficient(l2) * first))
            form.add_term(l2, pi_tau(l1, -l1, 2 * zeta_even_coefficient(l1) * second))

            constant -= zeta_even_coefficient(l1) * zeta_even_coefficient(l2) * (first + second)

        form.add_term(0, pi_tau(s, -s, 4 * constant))

        return normalize_element(form)

    def star_recursion_step(self, t: IndexTuple) -> List[Tuple[IndexTuple, RingElement]]:
        """
        Lower the depth of a star tuple by one.

        The last two lattice variables are split into the diagonal n_{r-1} = n_r, which merges their exponents,
        and the off-diagonal part, which is expanded in partial fractions. Summing the off-diagonal difference
        n_{r-1} - n_r over the non-zero integers gives 2 zeta^dagger of its power, so only even splittings survive.

        Returns
        -------
        list of (IndexTuple, RingElement)
            Star tuples of depth r - 1 with their coefficients; the merged tuple comes first with coefficient 1.
        """

        if t.family is not Family.STAR:
            raise DomainError(f"the recursion runs on star tuples, got {t.family.value}")

        if t.depth < 2:
            raise DomainError("the recursion step needs depth >= 2")

        head = t.halves[:-2]
        p_prev, p_last = t.halves[-2:]

        children = [(IndexTuple(head + (p_prev + p_last,), Family.STAR), ONE)]

        for term in partial_fraction(2 * p_prev, 2 * p_last):

            difference_sum = zeta_dagger(term.difference_power)

            if difference_sum.is_zero():
                continue

            coeff = difference_sum * pi_tau(0, -term.difference_power // 2, 2 * term.coeff_sign * term.binom)

            children.append((IndexTuple(head + (term.k // 2,), Family.STAR), coeff))

        return children

    def reduce_multi(self, t: IndexTuple) -> RingElement:
        """
        Closed form of G~_{2p_1,...,2p_r} (full family) or G~*_{2p_1,...,2p_r} (star family).

        Parameters
        ----------
        t : IndexTuple
            Any depth r >= 1.

        Returns
        -------
        RingElement
            Normalized closed form, weight-homogeneous of weight 2(p_1 + ... + p_r).
        """

        if t.family is Family.COTH:
            raise DomainError("coth tuples are reduced by the hyperbolic solver")

        key = (t.halves, t.family)

        if key in self.cache:
            return self.cache[key]

        star = self._reduce_star(t.halves)

        result = star if t.family is Family.STAR else star_to_full(t.with_family(Family.STAR), star)

        self.cache[key] = result

        logger.debug("Reduced %s to %d terms", t.label(), len(result))

        return result

    def _reduce_star(self, halves: Tuple[int, ...]) -> RingElement:

        pending: Dict[Tuple[int, ...], RingElement] = {halves: ONE}

        resolved = EisensteinCombination()

        while pending:

            lowered: Dict[Tuple[int, ...], RingElement] = defaultdict(lambda: ZERO)

            for current, coeff in pending.items():

                if len(current) == 1:
                    resolved = resolved + _star_depth1_form(current[0]).scale(coeff)
                    continue

                for child, weight in self.star_recursion_step(IndexTuple(current, Family.STAR)):
                    lowered[child.halves] = lowered[child.halves] + coeff * weight

            pending = {tup: coeff for tup, coeff in lowered.items() if not coeff.is_zero()}

        return normalize_element(resolved)
