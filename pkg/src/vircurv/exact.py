"""Exact scalars.

Rationals are GMP ``mpq`` values (via gmpy2), always in lowest terms with a
positive denominator.  They compare and hash equal to
:class:`fractions.Fraction`, so callers may pass either.  This module adds the
``p/q`` text format used on the command line and in reports, and a small
Gaussian rational type for the complexified calculus.
"""

from __future__ import annotations

from dataclasses import dataclass
import numbers
from fractions import Fraction

from gmpy2 import mpq

from .errors import DomainError, ParseError

ExactScalar = type(mpq())


def rational(value=0, den=1) -> ExactScalar:
    """Exact rational from ints, Fractions or mpq values; floats are refused."""
    if not isinstance(value, numbers.Rational) or not isinstance(den, numbers.Rational):
        raise TypeError(f"exact rational needed, got {type(value).__name__}")
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    if isinstance(value, Fraction):
        value = mpq(value.numerator, value.denominator)
    if isinstance(den, Fraction):
        den = mpq(den.numerator, den.denominator)
    return mpq(value) if den == 1 else mpq(value) / den


ZERO = rational(0)
ONE = rational(1)


def parse_scalar(text: str) -> ExactScalar:
    """Parse ``[+-]digits[/digits]`` into a reduced rational.

    >>> parse_scalar("3/6")
    mpq(1,2)
    """
    pos = 0
    n = len(text)
    sign = 1
    if pos < n and text[pos] in "+-":
        sign = -1 if text[pos] == "-" else 1
        pos += 1
    start = pos
    while pos < n and text[pos] in "0123456789":
        pos += 1
    if pos == start:
        raise ParseError("expected digit", pos, text)
    num = int(text[start:pos])
    den = 1
    if pos < n and text[pos] == "/":
        pos += 1
        start = pos
        while pos < n and text[pos] in "0123456789":
            pos += 1
        if pos == start:
            raise ParseError("expected digit after '/'", pos, text)
        den = int(text[start:pos])
    if pos != n:
        raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
    if den == 0:
        raise DomainError(f"zero denominator in {text!r}")
    return rational(sign * num, den)


def format_scalar(x) -> str:
    x = rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class ComplexScalar:
    """Gaussian rational ``re + i*im``."""

    re: ExactScalar = ZERO
    im: ExactScalar = ZERO

    def __post_init__(self):
        object.__setattr__(self, "re", rational(self.re))
        object.__setattr__(self, "im", rational(self.im))

    @classmethod
    def coerce(cls, value) -> "ComplexScalar":
        if isinstance(value, ComplexScalar):
            return value
        return cls(rational(value), ZERO)

    def __add__(self, other):
        try:
            o = ComplexScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return ComplexScalar(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = ComplexScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return ComplexScalar(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return ComplexScalar.coerce(other) - self

    def __neg__(self):
        return ComplexScalar(-self.re, -self.im)

    def __mul__(self, other):
        try:
            o = ComplexScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return ComplexScalar(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = ComplexScalar.coerce(other)
        d = o.abs2()
        if d == 0:
            raise ZeroDivisionError("division by zero")
        num = self * o.conj()
        return ComplexScalar(num.re / d, num.im / d)

    def __rtruediv__(self, other):
        return ComplexScalar.coerce(other) / self

    def __eq__(self, other):
        if isinstance(other, ComplexScalar):
            return self.re == other.re and self.im == other.im
        if isinstance(other, numbers.Rational):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def conj(self) -> "ComplexScalar":
        return ComplexScalar(self.re, -self.im)

    def abs2(self) -> ExactScalar:
        return self.re * self.re + self.im * self.im

    def is_real(self) -> bool:
        return self.im == 0

    def __str__(self):
        return format_complex(self)

    def __repr__(self):
        return f"ComplexScalar({format_scalar(self.re)}, {format_scalar(self.im)})"


I = ComplexScalar(ZERO, ONE)


def format_complex(z: ComplexScalar) -> str:
    """Render as ``a``, ``b*i`` or ``a+b*i`` with ``p/q`` parts."""
    if z.im == 0:
        return format_scalar(z.re)
    im = format_scalar(z.im)
    if z.re == 0:
        return f"{im}*i"
    if z.im > 0:
        return f"{format_scalar(z.re)}+{im}*i"
    return f"{format_scalar(z.re)}{im}*i"
