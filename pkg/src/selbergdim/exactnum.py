"""Exact rational arithmetic and the combinatorial primitives built on it.

Every scalar in this package is a :class:`fractions.Fraction`: arbitrary
precision, always reduced to lowest terms with a positive denominator, so
equality is structural. No floating point exists anywhere downstream.

On top of that this module provides the rising factorial, binomial
coefficients with the vanishing convention for out-of-range arguments, a
direct-summation checker for the hockey-stick identity, and the strict
``p/q`` text form used for rationals in all CLI and JSON output.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

Rational = Fraction

__all__ = [
    "Rational",
    "parse_rational",
    "format_rational",
    "is_integer",
    "pochhammer",
    "binom",
    "hockey_stick_check",
]

_RATIONAL_RE = re.compile(r"^[+-]?[0-9]+(?:/[0-9]+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse the strict text form ``"p"`` or ``"p/q"`` into a Fraction.

    Only an optional sign, decimal digits, and at most one ``/`` are
    accepted; in particular decimal points, exponents and whitespace are
    rejected so that the text form stays bit-exact.

    Raises:
        ValueError: on malformed input or a zero denominator.
    """
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise ValueError(f"invalid rational literal {text!r}: expected 'p' or 'p/q'")
    num_part, _, den_part = text.partition("/")
    if den_part and int(den_part) == 0:
        raise ValueError(f"invalid rational literal {text!r}: denominator is zero")
    return Fraction(int(num_part), int(den_part) if den_part else 1)


def format_rational(q: Fraction | int) -> str:
    """Render a rational as ``p/q``, omitting ``/q`` when the denominator is 1.

    >>> format_rational(Fraction(-13, 12))
    '-13/12'
    >>> format_rational(Fraction(7, 1))
    '7'
    """
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def is_integer(q: Fraction | int) -> bool:
    """True iff the (reduced) rational has denominator 1."""
    return Fraction(q).denominator == 1


def pochhammer(a: Fraction | int, k: int) -> Fraction:
    """Rising factorial ``a (a+1) ... (a+k-1)``; the empty product (k=0) is 1.

    Exact over rationals, total for every k >= 0. Once a factor hits zero
    the value is zero, which is what makes terminating hypergeometric sums
    finite.
    """
    if k < 0:
        raise ValueError(f"pochhammer order must be nonnegative, got {k}")
    a = Fraction(a)
    out = Fraction(1)
    for i in range(k):
        out *= a + i
    return out


def binom(r: int, s: int) -> int:
    """Binomial coefficient for nonnegative integers, with binom(r, s) = 0 for s > r."""
    if r < 0 or s < 0:
        raise ValueError(f"binom arguments must be nonnegative, got ({r}, {s})")
    return math.comb(r, s)


def hockey_stick_check(r: int, s: int) -> bool:
    """Check the hockey-stick identity sum_{t=s}^{r-1} C(t, s) == C(r, s+1).

    The left side is evaluated by direct summation (its first term is
    C(s, s) = 1), independently of any closed form, so this doubles as a
    self-test of ``binom``. Requires 0 <= s < r.
    """
    if not 0 <= s < r:
        raise ValueError(f"hockey_stick_check requires 0 <= s < r, got (r={r}, s={s})")
    lhs = sum(binom(t, s) for t in range(s, r))
    return lhs == binom(r, s + 1)
