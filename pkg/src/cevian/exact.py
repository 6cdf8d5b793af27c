"""Exact scalars: rationals and Gaussian rationals.

Rationals are :class:`fractions.Fraction`, which already keeps the canonical
form we need (reduced, positive denominator, zero as ``0/1``). Gaussian
rationals are points of the plane with rational coordinates.

Textual forms, used as the bit-exact interchange by the scene parser and CLI::

    rational   -?digits  or  -?digits/digits
    gaussian   <re>+<im>i  or  <re>-<im>i     e.g.  7/3+14/3i
"""

from __future__ import annotations

from decimal import Context, Decimal, ROUND_HALF_EVEN
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

Rational = Fraction

Scalar = Union[int, Fraction]


class TextFormError(ValueError):
    """Malformed textual number; ``offset`` is the 0-based index of the fault."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(message)
        self.message = message
        self.offset = offset


def rational_make(n: int, d: int = 1) -> Fraction:
    if d == 0:
        raise ZeroDivisionError(f"zero denominator in {n}/{d}")
    return Fraction(n, d)


def format_rational(value: Fraction | int) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_decimal(value: Fraction | int, digits: int = 12) -> str:
    """Round to ``digits`` significant digits, half-even, plain notation."""
    value = Fraction(value)
    ctx = Context(prec=digits, rounding=ROUND_HALF_EVEN)
    dec = ctx.divide(Decimal(value.numerator), Decimal(value.denominator))
    text = format(dec, "f")
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


def _scan_digits(text: str, pos: int) -> int:
    end = pos
    while end < len(text) and text[end].isascii() and text[end].isdigit():
        end += 1
    if end == pos:
        found = repr(text[pos]) if pos < len(text) else "end of value"
        raise TextFormError(f"expected digits, found {found}", pos)
    return end


def _scan_rational(text: str, pos: int) -> tuple[Fraction, int]:
    start = pos
    if pos < len(text) and text[pos] == "-":
        pos += 1
    pos = _scan_digits(text, pos)
    num = int(text[start:pos])
    den = 1
    if pos < len(text) and text[pos] == "/":
        den_start = pos + 1
        pos = _scan_digits(text, den_start)
        den = int(text[den_start:pos])
        if den == 0:
            raise TextFormError("zero denominator", den_start)
    return Fraction(num, den), pos


def parse_rational(text: str) -> Fraction:
    value, pos = _scan_rational(text, 0)
    if pos != len(text):
        raise TextFormError(f"unexpected {text[pos]!r} after rational", pos)
    return value


def parse_gaussian(text: str) -> GaussianRational:
    """Parse ``re``, ``im i``, or ``re(+|-)im i``.

    A lone rational is real; a lone rational with an ``i`` suffix is purely
    imaginary. When both parts are given the ``i`` is mandatory.
    """
    first, pos = _scan_rational(text, 0)
    if pos == len(text):
        return GaussianRational(first, 0)
    if text[pos] == "i" and pos + 1 == len(text):
        return GaussianRational(0, first)
    if text[pos] not in "+-":
        raise TextFormError(f"unexpected {text[pos]!r} in complex value", pos)
    sign = -1 if text[pos] == "-" else 1
    second, pos = _scan_rational(text, pos + 1)
    if pos == len(text):
        raise TextFormError("expected 'i' after imaginary part", pos)
    if text[pos] != "i":
        raise TextFormError(f"unexpected {text[pos]!r} in complex value", pos)
    if pos + 1 != len(text):
        raise TextFormError(f"unexpected {text[pos + 1]!r} after 'i'", pos + 1)
    return GaussianRational(first, sign * second)


class GaussianRational:
    """Complex number with exact rational real and imaginary parts.

    Immutable and hashable. Arithmetic accepts ints and Fractions on either
    side, and Python complex numbers whose parts are exactly representable.
    """

    __slots__ = ("re", "im")

    re: Fraction
    im: Fraction

    def __init__(self, re: Scalar = 0, im: Scalar = 0) -> None:
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def coerce(cls, value) -> GaussianRational:
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, _RationalABC)):
            return cls(Fraction(value), 0)
        if isinstance(value, complex):
            return cls(Fraction(value.real), Fraction(value.imag))
        if isinstance(value, str):
            return parse_gaussian(value)
        raise TypeError(f"cannot convert {type(value).__name__} to GaussianRational")

    @classmethod
    def parse(cls, text: str) -> GaussianRational:
        return parse_gaussian(text)

    def _other(self, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, _RationalABC, complex)):
            return GaussianRational.coerce(other)
        return None

    def __add__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        n = other.norm_sq()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * other.conjugate()
        return GaussianRational(num.re / n, num.im / n)

    def __rtruediv__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def norm_sq(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __str__(self) -> str:
        sign = "-" if self.im < 0 else "+"
        return f"{format_rational(self.re)}{sign}{format_rational(abs(self.im))}i"

    def __repr__(self) -> str:
        return f"GaussianRational({self})"


def gaussian_arith(kind: str, a: GaussianRational, b: GaussianRational) -> GaussianRational:
    """Dispatch ``add``/``sub``/``mul``/``div`` by name (used by the CLI and tests)."""
    ops = {
        "add": GaussianRational.__add__,
        "sub": GaussianRational.__sub__,
        "mul": GaussianRational.__mul__,
        "div": GaussianRational.__truediv__,
    }
    try:
        op = ops[kind]
    except KeyError:
        raise ValueError(f"unknown operation {kind!r}") from None
    return op(GaussianRational.coerce(a), GaussianRational.coerce(b))


I = GaussianRational(0, 1)
