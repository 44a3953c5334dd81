# -*- coding: utf-8 -*-
"""
Text, LaTeX and JSON renderers for ring elements and exact values.

All renderers walk the canonical term order of their input, so equal values always render to identical strings.
"""
import json
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from src.ring.eisen_ring import ClosedFormValue, Monomial, RingElement
from src.utils.exceptions import DomainError

_GENERATORS = (("c", 2), ("d", 4), ("e", 6))


def _join_signed(pieces: List[Tuple[bool, str]], separator: str) -> str:
    """
    Join (negative, body) pairs into "a + b - c" (separator " ") or "a+b-c" (separator "").
    """

    if not pieces:
        return "0"

    rendered = []

    for position, (negative, body) in enumerate(pieces):

        if position == 0:
            rendered.append(("-" if negative else "") + body)
        else:
            rendered.append(f"{separator}{'-' if negative else '+'}{separator}{body}")

    return "".join(rendered)


def _text_coefficient(value: Fraction) -> str:

    if value.denominator == 1:
        return str(value.numerator)

    return f"({value.numerator}/{value.denominator})"


# ------ Text ------

def _text_monomial(monomial: Monomial, coeff: Fraction) -> str:

    factors = []

    if monomial.a:
        factors.append(f"π^{2 * monomial.a}")

    if monomial.b:
        factors.append(f"τ^{2 * monomial.b}")

    for name, weight in _GENERATORS:

        power = getattr(monomial, name)

        if power == 1:
            factors.append(f"G_{weight}")
        elif power > 1:
            factors.append(f"G_{weight}^{power}")

    magnitude = abs(coeff)

    if magnitude != 1 or not factors:
        factors.insert(0, _text_coefficient(magnitude))

    return "·".join(factors)


def render_text(x: RingElement) -> str:
    """
    Plain text such as "G_4 + (2/3)·π^2·τ^-2·G_2 - (2/15)·π^4·τ^-4".
    """
    return _join_signed([(coeff < 0, _text_monomial(m, coeff)) for m, coeff in x], " ")


def _text_closed_term(x: int, y: int, coeff: Fraction) -> str:

    factors = []

    if y:
        factors.append("ϖ" if y == 1 else f"ϖ^{y}")

    if x:
        factors.append("π" if x == 1 else f"π^{x}")

    magnitude = abs(coeff)

    if magnitude != 1 or not factors:
        factors.insert(0, _text_coefficient(magnitude))

    return "·".join(factors)


def render_closed_form_text(v: ClosedFormValue) -> str:
    """
    Plain text such as "(7/90)·π^3" or "(1/15)·ϖ^4 - (2/15)·π^4 + (2/3)·π^3".
    """
    return _join_signed([(coeff < 0, _text_closed_term(x, y, coeff)) for (x, y), coeff in v], " ")


# ------ LaTeX ------

def _latex_power(symbol: str, exponent: int) -> str:

    if exponent == 1:
        return symbol

    text = str(exponent)

    return f"{symbol}^{text}" if len(text) == 1 else f"{symbol}^{{{text}}}"


def _latex_fraction(magnitude: Fraction, upper: List[str], lower: List[str], bare_if_one: bool) -> str:

    numerator = "".join(upper)
    denominator = "".join(lower)

    if magnitude.numerator != 1 or not numerator:
        numerator = str(magnitude.numerator) + numerator

    if magnitude.denominator != 1:
        denominator = str(magnitude.denominator) + denominator

    if denominator:
        return f"\\frac{{{numerator}}}{{{denominator}}}"

    if numerator == "1" and bare_if_one:
        return ""

    return numerator


def _latex_monomial(monomial: Monomial, coeff: Fraction) -> str:

    upper, lower = [], []

    for symbol, exponent in (("\\pi", 2 * monomial.a), ("\\tau", 2 * monomial.b)):

        if exponent > 0:
            upper.append(_latex_power(symbol, exponent))
        elif exponent < 0:
            lower.append(_latex_power(symbol, -exponent))

    generators = ""

    for name, weight in _GENERATORS:

        power = getattr(monomial, name)

        if power:
            generators += f"G_{weight}(\\tau)" if power == 1 else f"G_{weight}(\\tau)^{{{power}}}"

    return _latex_fraction(abs(coeff), upper, lower, bool(generators)) + generators


def render_latex(x: RingElement) -> str:
    """
    LaTeX such as "G_4(\\tau)+\\frac{2\\pi^2}{3\\tau^2}G_2(\\tau)-\\frac{2\\pi^4}{15\\tau^4}".
    """
    return _join_signed([(coeff < 0, _latex_monomial(m, coeff)) for m, coeff in x], "")


def render_closed_form_latex(v: ClosedFormValue) -> str:

    pieces = []

    for (x, y), coeff in v:

        upper, lower = [], []

        if y:
            upper.append(_latex_power("\\varpi", y))

        if x > 0:
            upper.append(_latex_power("\\pi", x))
        elif x < 0:
            lower.append(_latex_power("\\pi", -x))

        pieces.append((coeff < 0, _latex_fraction(abs(coeff), upper, lower, False)))

    return _join_signed(pieces, "")


# ------ JSON ------

def render_json(x: RingElement, family: str, indices: Sequence[int], power: Optional[int] = None) -> str:
    """
    JSON document {"family", "indices", ["power"], "terms": [...]}; coefficients are exact rational strings.
    """

    document = {"family": family, "indices": list(indices)}

    if power is not None:
        document["power"] = power

    document["terms"] = [
        {"coeff": str(coeff), "pi2": m.a, "tau2": m.b, "g2": m.c, "g4": m.d, "g6": m.e} for m, coeff in x
    ]

    return json.dumps(document, ensure_ascii=False)


def ring_from_json(text: str) -> Tuple[RingElement, str, List[int], Optional[int]]:
    """
    Inverse of :func:`render_json`.

    Returns
    -------
    tuple
        (element, family, indices, power); power is None unless the document carries one.
    """

    try:
        document = json.loads(text)

        terms = {
            Monomial(term["pi2"], term["tau2"], term["g2"], term["g4"], term["g6"]): Fraction(term["coeff"])
            for term in document["terms"]
        }

        return RingElement(terms), document["family"], list(document["indices"]), document.get("power")

    except (KeyError, TypeError, ValueError) as error:
        raise DomainError(f"not a ring element document: {error}") from error


def render_closed_form_json(v: ClosedFormValue, label: Optional[str] = None) -> str:

    document = {}

    if label is not None:
        document["label"] = label

    document["terms"] = [{"coeff": str(coeff), "pi": x, "varpi": y} for (x, y), coeff in v]

    return json.dumps(document, ensure_ascii=False)


def closed_form_from_json(text: str) -> Tuple[ClosedFormValue, Optional[str]]:

    try:
        document = json.loads(text)

        terms = {(term["pi"], term["varpi"]): Fraction(term["coeff"]) for term in document["terms"]}

        return ClosedFormValue(terms), document.get("label")

    except (KeyError, TypeError, ValueError) as error:
        raise DomainError(f"not a closed form document: {error}") from error
