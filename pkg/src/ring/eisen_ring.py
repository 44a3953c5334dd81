# -*- coding: utf-8 -*-
"""
Exact target algebra of the reduction pipeline.

Every symbolic result lives in the ring of Laurent monomials

    pi^(2a) * tau^(2b) * G_2^c * G_4^d * G_6^e     (c, d, e >= 0)

with rational coefficients. Higher Eisenstein series G_8, G_10, ... are never generators: they only occur in the
transient :class:`EisensteinCombination` form and are eliminated by :func:`normalize_element`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, Mapping, Optional, Tuple, Union

from src.utils.exceptions import DomainError

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class Monomial(object):
    """
    Exponent vector of a single monomial.

    Attributes
    ----------
    a : int
        Exponent of pi^2 (may be negative).
    b : int
        Exponent of tau^2 (may be negative).
    c : int
        Exponent of G_2.
    d : int
        Exponent of G_4.
    e : int
        Exponent of G_6.
    """

    a: int = 0
    b: int = 0
    c: int = 0
    d: int = 0
    e: int = 0

    def __post_init__(self):

        if min(self.c, self.d, self.e) < 0:
            raise DomainError(f"Eisenstein exponents must be non-negative, got {self}")

    @property
    def weight(self) -> int:
        # tau carries weight 0 in this grading
        return 2 * self.a + 2 * self.c + 4 * self.d + 6 * self.e

    @property
    def g_weight(self) -> int:
        return 2 * self.c + 4 * self.d + 6 * self.e

    def sort_key(self) -> Tuple[int, ...]:
        return (self.weight, self.g_weight, self.e, self.d, self.c, self.a, self.b)

    def times(self, other: "Monomial") -> "Monomial":
        return Monomial(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d, self.e + other.e)


class RingElement(object):
    """
    Sparse Q-linear combination of :class:`Monomial` in canonical form.

    Zero coefficients are never stored and the terms are kept sorted by descending
    ``Monomial.sort_key()``, so two elements are equal exactly when their term tuples are equal.
    Instances are immutable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Monomial, Scalar]] = None):

        cleaned = {}

        for monomial, coeff in (terms or {}).items():

            coeff = Fraction(coeff)

            if coeff != 0:
                cleaned[monomial] = coeff

        self._terms = tuple(sorted(cleaned.items(), key=lambda item: item[0].sort_key(), reverse=True))

    # ------ Constructors ------

    @classmethod
    def constant(cls, value: Scalar) -> "RingElement":
        return cls({Monomial(): value})

    @classmethod
    def monomial(cls, coeff: Scalar = 1, a: int = 0, b: int = 0, c: int = 0, d: int = 0, e: int = 0) -> "RingElement":
        return cls({Monomial(a, b, c, d, e): coeff})

    @classmethod
    def _from_pairs(cls, pairs) -> "RingElement":

        accumulated: Dict[Monomial, Fraction] = {}

        for monomial, coeff in pairs:
            accumulated[monomial] = accumulated.get(monomial, Fraction(0)) + coeff

        return cls(accumulated)

    # ------ Inspection ------

    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self) -> Tuple[Tuple[Monomial, Fraction], ...]:
        return self._terms

    def __iter__(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, monomial: Monomial) -> Fraction:
        return self.terms.get(monomial, Fraction(0))

    def weight_decomposition(self) -> Dict[int, "RingElement"]:
        """
        Partition the terms by ``Monomial.weight``.

        Returns
        -------
        dict
            Maps every occurring weight to the sub-element made of the terms of that weight.
        """

        classes: Dict[int, Dict[Monomial, Fraction]] = {}

        for monomial, coeff in self._terms:
            classes.setdefault(monomial.weight, {})[monomial] = coeff

        return {weight: RingElement(part) for weight, part in classes.items()}

    def is_pi_tau_balanced(self) -> bool:
        """
        True when pi^2 and tau^-2 occur in lockstep (a + b = 0) in every monomial.
        """
        return all(monomial.a + monomial.b == 0 for monomial, _ in self._terms)

    # ------ Arithmetic ------

    def __add__(self, other):

        other = _coerce(other)

        if other is None:
            return NotImplemented

        return RingElement._from_pairs(self._terms + other._terms)

    __radd__ = __add__

    def __neg__(self):
        return RingElement({monomial: -coeff for monomial, coeff in self._terms})

    def __sub__(self, other):

        other = _coerce(other)

        if other is None:
            return NotImplemented

        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):

        if isinstance(other, (int, Fraction)):
            return RingElement({monomial: coeff * other for monomial, coeff in self._terms})

        if not isinstance(other, RingElement):
            return NotImplemented

        return RingElement._from_pairs(
            (left.times(right), lc * rc) for left, lc in self._terms for right, rc in other._terms
        )

    __rmul__ = __mul__

    def __pow__(self, exponent: int):

        if not isinstance(exponent, int) or exponent < 0:
            raise DomainError("only non-negative integer powers of ring elements are defined")

        result = ONE

        for _ in range(exponent):
            result = result * self

        return result

    def __eq__(self, other):

        other = _coerce(other)

        if other is None:
            return NotImplemented

        return self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __repr__(self):

        from src.utils.rendering import render_text

        return f"RingElement({render_text(self)})"


def _coerce(value) -> Optional[RingElement]:

    if isinstance(value, RingElement):
        return value

    if isinstance(value, (int, Fraction)):
        return RingElement.constant(value)

    return None


ZERO = RingElement()
ONE = RingElement.constant(1)
PI2 = RingElement.monomial(a=1)
TAU2 = RingElement.monomial(b=1)
G2 = RingElement.monomial(c=1)
G4 = RingElement.monomial(d=1)
G6 = RingElement.monomial(e=1)


def pi_tau(a: int, b: int, coeff: Scalar = 1) -> RingElement:
    """
    The single monomial coeff * pi^(2a) * tau^(2b).
    """
    return RingElement.monomial(coeff, a=a, b=b)


@lru_cache(maxsize=None)
def normalize_higher_G(k: int) -> RingElement:
    """
    Express G_{2k} (k >= 2) as a polynomial in G_4 and G_6.

    For k >= 4 the classical convolution identity

        (2k+1)(2k-1)(k-3) G_{2k} = 3 * sum_{j=2}^{k-2} (2j-1)(2k-2j-1) G_{2j} G_{2k-2j}

    is applied recursively. It does not depend on how the lattice sums are normalized.

    Parameters
    ----------
    k : int
        Half the weight.

    Returns
    -------
    RingElement
        Weight-homogeneous element of Q[G_4, G_6].
    """

    if k <= 1:
        raise DomainError(f"G_{2 * k} is not a polynomial in G_4, G_6; keep G_2 as a generator")

    if k == 2:
        return G4

    if k == 3:
        return G6

    total = ZERO

    for j in range(2, k - 1):
        total = total + normalize_higher_G(j) * normalize_higher_G(k - j) * ((2 * j - 1) * (2 * k - 2 * j - 1))

    return total * Fraction(3, (2 * k + 1) * (2 * k - 1) * (k - 3))


def eisenstein_generator(k: int) -> RingElement:
    """
    G_{2k} as a ring element: G_2 stays a generator, every higher weight is normalized.
    """

    if k == 1:
        return G2

    return normalize_higher_G(k)


class EisensteinCombination(object):
    """
    Transient form sum_k coeff_k * G_{2k} with coefficients in Q[pi^2, tau^2].

    The reduction formulas are linear in a single Eisenstein series, so this is all the reducer needs before
    normalization. Key 0 holds the constant term (G_0 := 1).
    """

    __slots__ = ("parts",)

    def __init__(self, parts: Optional[Mapping[int, RingElement]] = None):

        self.parts: Dict[int, RingElement] = {}

        for k, coeff in (parts or {}).items():
            self.add_term(k, coeff)

    def add_term(self, k: int, coeff: RingElement) -> "EisensteinCombination":

        if k < 0:
            raise DomainError(f"negative Eisenstein index {k}")

        total = self.parts.get(k, ZERO) + coeff

        if total.is_zero():
            self.parts.pop(k, None)
        else:
            self.parts[k] = total

        return self

    def __add__(self, other: "EisensteinCombination") -> "EisensteinCombination":

        result = EisensteinCombination(self.parts)

        for k, coeff in other.parts.items():
            result.add_term(k, coeff)

        return result

    def scale(self, factor: RingElement) -> "EisensteinCombination":
        return EisensteinCombination({k: coeff * factor for k, coeff in self.parts.items()})

    def coefficient(self, k: int) -> RingElement:
        return self.parts.get(k, ZERO)

    def normalize(self) -> RingElement:

        total = ZERO

        for k, coeff in sorted(self.parts.items()):
            total = total + (coeff if k == 0 else coeff * eisenstein_generator(k))

        return total

    def __eq__(self, other):

        if not isinstance(other, EisensteinCombination):
            return NotImplemented

        return self.parts == other.parts

    def __repr__(self):
        return f"EisensteinCombination({self.parts!r})"


def normalize_element(x: Union[RingElement, EisensteinCombination]) -> RingElement:
    """
    Eliminate every G_{2k} with k >= 4 so only the generators G_2, G_4, G_6 remain.
    """

    if isinstance(x, EisensteinCombination):
        return x.normalize()

    return x


class ClosedFormValue(object):
    """
    Exact value sum coeff * pi^x * varpi^y with varpi the lemniscate constant.

    Terms are kept sorted by descending (y, x); zero coefficients are dropped.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Tuple[int, int], Scalar]] = None):

        cleaned = {}

        for (x, y), coeff in (terms or {}).items():

            if y < 0:
                raise DomainError("the lemniscate constant only occurs with non-negative exponents")

            coeff = Fraction(coeff)

            if coeff != 0:
                cleaned[(x, y)] = coeff

        self._terms = tuple(sorted(cleaned.items(), key=lambda item: (item[0][1], item[0][0]), reverse=True))

    @property
    def terms(self) -> Dict[Tuple[int, int], Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "ClosedFormValue") -> "ClosedFormValue":

        accumulated = self.terms

        for key, coeff in other._terms:
            accumulated[key] = accumulated.get(key, Fraction(0)) + coeff

        return ClosedFormValue(accumulated)

    def __mul__(self, other: "ClosedFormValue") -> "ClosedFormValue":

        accumulated: Dict[Tuple[int, int], Fraction] = {}

        for (x1, y1), c1 in self._terms:
            for (x2, y2), c2 in other._terms:
                key = (x1 + x2, y1 + y2)
                accumulated[key] = accumulated.get(key, Fraction(0)) + c1 * c2

        return ClosedFormValue(accumulated)

    def __eq__(self, other):

        if not isinstance(other, ClosedFormValue):
            return NotImplemented

        return self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __repr__(self):

        from src.utils.rendering import render_closed_form_text

        return f"ClosedFormValue({render_closed_form_text(self)})"


def specialize_i(x: RingElement) -> ClosedFormValue:
    """
    Exact value at tau = i via the Hurwitz values G_2(i) = -pi, G_4(i) = varpi^4/15, G_6(i) = 0.

    Parameters
    ----------
    x : RingElement
        Normalized element.

    Returns
    -------
    ClosedFormValue
        Combination of pi^x varpi^y; odd powers of pi come from G_2 -> -pi.
    """

    accumulated: Dict[Tuple[int, int], Fraction] = {}

    for monomial, coeff in x:

        if monomial.e > 0:
            continue

        # tau^2 -> -1 and G_2 -> -pi both contribute a sign per factor
        sign = -1 if (monomial.b + monomial.c) % 2 else 1

        value = coeff * sign / Fraction(15) ** monomial.d

        key = (2 * monomial.a + monomial.c, 4 * monomial.d)

        accumulated[key] = accumulated.get(key, Fraction(0)) + value

    return ClosedFormValue(accumulated)


def hurwitz_value(k: int) -> ClosedFormValue:
    """
    G_{2k}(i) as an exact multiple of a power of varpi (or -pi for k = 1).
    """

    if k < 1:
        raise DomainError("Eisenstein series start at weight 2")

    return specialize_i(eisenstein_generator(k))
