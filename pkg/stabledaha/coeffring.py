"""Coefficient rings: the field Q(q, t) and the polynomial ring Q[q, h].

The two rings are deliberately separate objects. Values of ``QT`` are used by
the polynomial representation, values of ``QH`` by the PBW layer; nothing in
this module converts between them.
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import Literal, Union

from sympy import QQ, ZZ, Rational
from sympy.polys.fields import FracElement, field
from sympy.polys.rings import PolyElement, ring

logger = logging.getLogger(__name__)


class CoefficientError(RuntimeError):
    """Raised on invalid coefficient arithmetic, such as division by zero."""


QT, q, t = field("q,t", ZZ)
QH, qh_q, qh_h = ring("q,h", QQ)

RatQT = FracElement
PolyQH = PolyElement
Order = Union[int, float]
INFINITY: float = math.inf

ArithOp = Literal["add", "sub", "mul", "div"]


def ratqt(value: object) -> RatQT:
    """Coerce an integer, fraction or existing field element into ``QT``."""
    if isinstance(value, FracElement) and value.field == QT:
        return value
    if isinstance(value, Fraction):
        return QT(value.numerator) / QT(value.denominator)
    if isinstance(value, Rational):
        return QT(int(value.p)) / QT(int(value.q))
    if isinstance(value, int):
        return QT(value)
    raise CoefficientError(f"Cannot coerce {value!r} into Q(q,t)")


def ratqt_arith(a: RatQT, b: RatQT, op: ArithOp) -> RatQT:
    """Exact field arithmetic with an explicit error for division by zero."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return safe_div(a, b)
    raise CoefficientError(f"Unknown operation '{op}'")


def safe_div(a: RatQT, b: RatQT) -> RatQT:
    if not b:
        raise CoefficientError(f"Division by zero: ({a}) / 0")
    return a / b


def _min_t_exponent(poly: PolyElement) -> int:
    return min(monom[1] for monom in poly.monoms())


def t_order(a: RatQT) -> Order:
    """Order of vanishing at t = 0; ``INFINITY`` for the zero element."""
    if not a:
        return INFINITY
    return _min_t_exponent(a.numer) - _min_t_exponent(a.denom)


def h_order(a: PolyQH) -> Order:
    """Smallest h-exponent carrying a nonzero coefficient; ``INFINITY`` for 0."""
    if not a:
        return INFINITY
    return min(monom[1] for monom in a.monoms())


def h_part(a: PolyQH, degree: int) -> PolyQH:
    """The coefficient of h**degree, as an element of Q[q] inside ``QH``."""
    return QH.from_dict(
        {(monom[0], 0): coeff for monom, coeff in a.items() if monom[1] == degree}
    )


def reduce_mod_h(a: PolyQH) -> PolyQH:
    return h_part(a, 0)


def evaluate_qh(a: PolyQH, q_value: Fraction, h_value: Fraction) -> Fraction:
    """Evaluate at rational points, returning a ``Fraction``."""
    total = Fraction(0)
    for (q_exp, h_exp), coeff in a.items():
        total += Fraction(int(coeff.numerator), int(coeff.denominator)) * (
            q_value**q_exp * h_value**h_exp
        )
    return total


@lru_cache(maxsize=None)
def qt_int(n: int) -> RatQT:
    """The t-integer 1 + t + ... + t^(n-1)."""
    if n < 0:
        raise CoefficientError(f"t-integer of a negative number: {n}")
    return sum((t**i for i in range(n)), QT(0))


@lru_cache(maxsize=None)
def qt_factorial(n: int) -> RatQT:
    result = QT(1)
    for i in range(1, n + 1):
        result *= qt_int(i)
    return result


def render_ratqt(a: RatQT) -> str:
    """Canonical string of a field element, e.g. ``(-q*t + q)/(q - t)``."""
    return str(a)


def render_qh(a: PolyQH) -> str:
    return str(a)


def needs_parentheses(text: str) -> bool:
    """True when a rendered coefficient is a sum and must be bracketed."""
    body = text[1:] if text.startswith("-") else text
    depth = 0
    for char in body:
        if char == "(":
            depth += 1
        elif char == ")":
            depth -= 1
        elif depth == 0 and char in "+-/":
            return True
    return False
