"""
Exact rational helpers: k-th roots, squarefree parts and rendering.

``Rational`` is ``fractions.Fraction``; it is always reduced with a
positive denominator.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from sympy import factorint, integer_nthroot

from errors import FujikiError

logger = logging.getLogger(__name__)

Rational = Fraction
Number = Union[int, Fraction]


@dataclass(frozen=True)
class RootResult:
    """Outcome of an exact root extraction."""

    radicand: Fraction
    k: int
    value: Optional[Fraction]
    squarefree: Optional[int] = None

    @property
    def is_rational(self) -> bool:
        return self.value is not None


def _int_root(n: int, k: int) -> Optional[int]:
    root, exact = integer_nthroot(n, k)
    return int(root) if exact else None


def rational_root(x: Number, k: int) -> Optional[Fraction]:
    """
    Exact k-th root of x in the rationals, or None.

    Raises:
        FujikiError: If k < 2, or x < 0 with k even
    """
    if k < 2:
        raise FujikiError(f"Root index must be at least 2, got {k}")
    x = Fraction(x)
    if x < 0:
        if k % 2 == 0:
            raise FujikiError(f"Even root of negative number {x}")
        root = rational_root(-x, k)
        return None if root is None else -root
    num = _int_root(x.numerator, k)
    den = _int_root(x.denominator, k)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def squarefree_part(x: Number) -> int:
    """
    Squarefree part of a rational p/q, defined as that of p*q.

    sqrt(p/q) = sqrt(p*q)/q, so sqrt(x) is rational iff this is 1 (or x = 0).
    """
    x = Fraction(x)
    if x == 0:
        return 0
    sign = -1 if x < 0 else 1
    part = 1
    for prime, exponent in factorint(abs(x.numerator) * x.denominator).items():
        if exponent % 2:
            part *= prime
    return sign * part


def square_root_result(x: Number) -> RootResult:
    """Square root as a structured result; irrational roots keep their squarefree part."""
    x = Fraction(x)
    if x < 0:
        return RootResult(radicand=x, k=2, value=None, squarefree=squarefree_part(x))
    value = rational_root(x, 2)
    return RootResult(radicand=x, k=2, value=value, squarefree=None if value is not None else squarefree_part(x))


def format_rational(x: Number) -> str:
    """``p`` when integral, else ``p/q``."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())
