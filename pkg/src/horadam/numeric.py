"""Exact arithmetic over the Gaussian rationals Q(i).

Rationals are ``gmpy2.mpq`` values, which are always stored reduced with a
positive denominator, so structural equality of two scalars is equality of
the numbers they denote.
"""

from __future__ import annotations

import numbers

from gmpy2 import mpq

from .errors import DivisionByZero, ParseError

Rational = type(mpq(0))

_MPQ_ZERO = mpq(0)
_MPQ_ONE = mpq(1)


def as_rational(value) -> Rational:
    """Coerce an int or rational number to a canonical ``mpq``."""
    if isinstance(value, Rational):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(value, numbers.Integral):
        return mpq(int(value))
    if isinstance(value, numbers.Rational):
        return mpq(int(value.numerator), int(value.denominator))
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


class GaussianRational:
    """A complex number ``re + im*i`` with exact rational parts.

    Instances are immutable by convention and hashable. Arithmetic mixes
    freely with ``int``, ``fractions.Fraction`` and ``mpq`` operands.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = as_rational(re)
        self.im = as_rational(im)

    @classmethod
    def _raw(cls, re, im):
        obj = object.__new__(cls)
        obj.re = re
        obj.im = im
        return obj

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        """Return ``value`` as a scalar; strings go through :func:`parse_scalar`."""
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, str):
            return parse_scalar(value)
        return cls._raw(as_rational(value), _MPQ_ZERO)

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational._raw(as_rational(other), _MPQ_ZERO)
            except TypeError:
                return NotImplemented
        return GaussianRational._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational._raw(as_rational(other), _MPQ_ZERO)
            except TypeError:
                return NotImplemented
        return GaussianRational._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                r = as_rational(other)
            except TypeError:
                return NotImplemented
            return GaussianRational._raw(self.re * r, self.im * r)
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussianRational._raw(a * c, _MPQ_ZERO)
        return GaussianRational._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def reciprocal(self) -> "GaussianRational":
        a, b = self.re, self.im
        if not b:
            if not a:
                raise DivisionByZero("division by zero")
            return GaussianRational._raw(_MPQ_ONE / a, _MPQ_ZERO)
        norm = a * a + b * b
        return GaussianRational._raw(a / norm, -b / norm)

    def __truediv__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                r = as_rational(other)
            except TypeError:
                return NotImplemented
            if not r:
                raise DivisionByZero("division by zero")
            return GaussianRational._raw(self.re / r, self.im / r)
        c, d = other.re, other.im
        if not d:
            if not c:
                raise DivisionByZero("division by zero")
            return GaussianRational._raw(self.re / c, self.im / c)
        a, b = self.re, self.im
        norm = c * c + d * d
        return GaussianRational._raw((a * c + b * d) / norm, (b * c - a * d) / norm)

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __pow__(self, exponent):
        if not isinstance(exponent, numbers.Integral):
            return NotImplemented
        return int_pow(self, int(exponent))

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self.re, -self.im)

    def norm(self) -> Rational:
        return self.re * self.re + self.im * self.im

    # -- comparison and display ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        try:
            r = as_rational(other)
        except TypeError:
            return NotImplemented
        return not self.im and self.re == r

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


ZERO = GaussianRational._raw(_MPQ_ZERO, _MPQ_ZERO)
ONE = GaussianRational._raw(_MPQ_ONE, _MPQ_ZERO)
I = GaussianRational._raw(_MPQ_ZERO, _MPQ_ONE)


def add(lhs, rhs) -> GaussianRational:
    return GaussianRational.coerce(lhs) + rhs


def mul(lhs, rhs) -> GaussianRational:
    return GaussianRational.coerce(lhs) * rhs


def div(lhs, rhs) -> GaussianRational:
    """Exact quotient. Raises :class:`DivisionByZero` when ``rhs`` is zero."""
    return GaussianRational.coerce(lhs) / rhs


def int_pow(base, exponent: int) -> GaussianRational:
    """``base ** exponent`` by square-and-multiply.

    Negative exponents invert the base first, so ``0 ** -n`` raises
    :class:`DivisionByZero`. ``0 ** 0`` is 1.
    """
    base = GaussianRational.coerce(base)
    if exponent < 0:
        base = base.reciprocal()
        exponent = -exponent
    if not base.im:
        return GaussianRational._raw(base.re ** exponent, _MPQ_ZERO)
    result = ONE
    while exponent:
        if exponent & 1:
            result = result * base
        exponent >>= 1
        if exponent:
            base = base * base
    return result


# -- text form --------------------------------------------------------------

def _format_rational(r) -> str:
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def format_scalar(value) -> str:
    """Canonical text: ``3/2``, ``-5i``, ``1/3-5/7i``; zero is ``0``."""
    value = GaussianRational.coerce(value)
    re, im = value.re, value.im
    if not im:
        return _format_rational(re)
    imag = _format_rational(abs(im)) + "i"
    if not re:
        return ("-" if im < 0 else "") + imag
    return _format_rational(re) + ("-" if im < 0 else "+") + imag


def _scan_digits(text, pos):
    start = pos
    while pos < len(text) and text[pos].isdigit():
        pos += 1
    return text[start:pos], pos


def _scan_rational(text, pos):
    """Scan ``["-"] digits ["/" digits]``; return (value or None, new pos)."""
    start = pos
    negative = pos < len(text) and text[pos] == "-"
    if negative:
        pos += 1
    num, pos = _scan_digits(text, pos)
    if not num:
        return None, start
    value = mpq(int(num))
    if pos < len(text) and text[pos] == "/":
        den, after = _scan_digits(text, pos + 1)
        if not den:
            raise ParseError("expected digits after '/'", text, pos + 1)
        if int(den) == 0:
            raise ParseError("zero denominator", text, pos + 1)
        value = mpq(int(num), int(den))
        pos = after
    return (-value if negative else value), pos


def _scan_imag(text, pos):
    """Scan ``rational "i" | "i"``; return (value, new pos)."""
    if pos < len(text) and text[pos] == "i":
        return _MPQ_ONE, pos + 1
    value, after = _scan_rational(text, pos)
    if value is None:
        raise ParseError("expected imaginary part", text, pos)
    if after >= len(text) or text[after] != "i":
        raise ParseError("expected 'i'", text, after)
    return value, after + 1


def parse_scalar(text: str) -> GaussianRational:
    """Parse ``real | imag | real sign imag`` with no inner whitespace."""
    if not isinstance(text, str):
        raise TypeError("parse_scalar expects a string")
    if not text:
        raise ParseError("empty scalar", text, 0)
    if text[0] == "i" or (text[0] == "-" and text[1:2] == "i"):
        # a bare "i" is only valid unsigned; "-i" falls through to the error below
        if text == "i":
            return I
        raise ParseError("expected digits", text, 1)
    first, pos = _scan_rational(text, 0)
    if first is None:
        raise ParseError("expected a number", text, pos if text[0] != "-" else 1)
    if pos == len(text):
        return GaussianRational._raw(first, _MPQ_ZERO)
    if text[pos] == "i":
        if pos + 1 != len(text):
            raise ParseError("trailing characters", text, pos + 1)
        return GaussianRational._raw(_MPQ_ZERO, first)
    if text[pos] not in "+-":
        raise ParseError("expected '+' or '-'", text, pos)
    sign = -1 if text[pos] == "-" else 1
    imag, end = _scan_imag(text, pos + 1)
    if end != len(text):
        raise ParseError("trailing characters", text, end)
    return GaussianRational._raw(first, sign * imag)


def scalar(value) -> GaussianRational:
    """Convenience constructor accepting ints, rationals, strings or scalars."""
    return GaussianRational.coerce(value)
