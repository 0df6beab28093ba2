"""Exact scalars: Gaussian rationals a + bi with a, b in Q.

Rationals are :class:`fractions.Fraction` (always reduced, positive
denominator).  :class:`GaussianRational` pairs two of them and is kept
canonical at construction, so equality is structural.

Text form::

    sign? int ('/' posint)? (sign (int ('/' posint)?)? 'i')?

plus a bare imaginary term such as ``i``, ``-i`` or ``2/3i``.  Both the
ASCII hyphen and U+2212 are accepted as a minus sign; formatting always
emits ASCII.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from numbers import Rational as _RationalABC

from .errors import ParseError

__all__ = [
    "GaussianRational",
    "I",
    "ONE",
    "ZERO",
    "as_scalar",
    "format_scalar",
    "gen_binomial",
    "parse_scalar",
    "scalar_arith",
]


class GaussianRational:
    """An element of Q(i), immutable and hashable."""

    __slots__ = ("_re", "_im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            if im:
                raise TypeError("imaginary part given twice")
            self._re, self._im = re._re, re._im
            return
        if isinstance(re, str) or isinstance(im, str):
            raise TypeError("use parse_scalar() for text input")
        self._re = Fraction(re)
        self._im = Fraction(im)

    @property
    def re(self) -> Fraction:
        return self._re

    @property
    def im(self) -> Fraction:
        return self._im

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self._re, -self._im)

    def norm(self) -> Fraction:
        """Field norm a^2 + b^2."""
        return self._re * self._re + self._im * self._im

    def is_zero(self) -> bool:
        return not self._re and not self._im

    def is_real(self) -> bool:
        return not self._im

    def sort_key(self) -> tuple[Fraction, Fraction]:
        return (self._re, self._im)

    # arithmetic

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational(self._re + other._re, self._im + other._im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational(self._re - other._re, self._im - other._im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self._re, self._im, other._re, other._im
        if not b and not d:
            return GaussianRational(a * c)
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError("division by zero Gaussian rational")
        if not other._im:
            return GaussianRational(self._re / other._re, self._im / other._re)
        n = other.norm()
        num = self * other.conjugate()
        return GaussianRational(num._re / n, num._im / n)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __neg__(self):
        return GaussianRational(-self._re, -self._im)

    def __pos__(self):
        return self

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return (ONE / self) ** (-exponent)
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._re == other._re and self._im == other._im

    def __hash__(self):
        if not self._im:
            return hash(self._re)
        return hash((self._re, self._im))

    def __repr__(self):
        return f"GaussianRational({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


def _coerce(value):
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, _RationalABC)):
        return GaussianRational(value)
    return NotImplemented


def as_scalar(value) -> GaussianRational:
    """Coerce an int, Fraction, GaussianRational or scalar string."""
    if isinstance(value, str):
        return parse_scalar(value)
    out = _coerce(value)
    if out is NotImplemented:
        raise TypeError(f"cannot interpret {value!r} as a Gaussian rational")
    return out


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def scalar_arith(a, b, op: str) -> GaussianRational:
    """Apply ``op`` in ``{'+', '-', '*', '/'}`` to two scalars."""
    a, b = as_scalar(a), as_scalar(b)
    if op == "+":
        return a + b
    if op in ("-", "−"):
        return a - b
    if op in ("*", "×"):
        return a * b
    if op in ("/", "÷"):
        return a / b
    raise ValueError(f"unknown operator {op!r}")


def gen_binomial(n: int, d: int) -> int:
    """Generalized binomial n(n-1)...(n-d+1)/d! for any integer n.

    The value is always an integer, including for negative ``n``.
    """
    if d < 0:
        raise ValueError("d must be non-negative")
    num = 1
    for j in range(d):
        num *= n - j
    return num // factorial(d)


# formatting


def _format_fraction(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_scalar(x) -> str:
    x = as_scalar(x)
    re, im = x.re, x.im
    if not im:
        return _format_fraction(re)
    if abs(im) == 1:
        imag = "i"
    else:
        imag = _format_fraction(abs(im)) + "i"
    if not re:
        return imag if im > 0 else "-" + imag
    sign = "+" if im > 0 else "-"
    return _format_fraction(re) + sign + imag


# parsing

_MINUS = ("-", "−")


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def error(self, message: str) -> ParseError:
        offset = len(self.text[: self.pos].encode("utf-8"))
        return ParseError(message, offset=offset, text=self.text)

    def sign(self) -> int | None:
        ch = self.peek()
        if ch == "+":
            self.pos += 1
            return 1
        if ch in _MINUS:
            self.pos += 1
            return -1
        return None

    def digits(self) -> str:
        start = self.pos
        while self.peek().isdigit() and self.peek().isascii():
            self.pos += 1
        return self.text[start : self.pos]

    def number(self) -> Fraction | None:
        num = self.digits()
        if not num:
            return None
        if self.peek() != "/":
            return Fraction(int(num))
        self.pos += 1
        den = self.digits()
        if not den:
            raise self.error("expected denominator after '/'")
        if int(den) == 0:
            self.pos -= len(den)
            raise self.error("denominator must be positive")
        return Fraction(int(num), int(den))

    def term(self, require_sign: bool) -> tuple[Fraction, bool]:
        """Read one signed term; returns (value, is_imaginary)."""
        s = self.sign()
        if s is None:
            if require_sign:
                raise self.error("expected '+' or '-'")
            s = 1
        value = self.number()
        imaginary = False
        if self.peek() == "i":
            self.pos += 1
            imaginary = True
            if value is None:
                value = Fraction(1)
        if value is None:
            raise self.error("expected a number or 'i'")
        return s * value, imaginary


def parse_scalar(text: str) -> GaussianRational:
    """Parse the scalar grammar; raises ParseError carrying a byte offset."""
    if not isinstance(text, str):
        raise TypeError("parse_scalar expects a string")
    stripped = text.strip()
    lead = len(text) - len(text.lstrip())
    sc = _Scanner(stripped)
    if not stripped:
        raise ParseError("empty scalar", offset=lead, text=text)
    try:
        value, imaginary = sc.term(require_sign=False)
        if imaginary:
            re, im = Fraction(0), value
        else:
            re, im = value, Fraction(0)
            if sc.peek():
                im_value, im_flag = sc.term(require_sign=True)
                if not im_flag:
                    raise sc.error("expected 'i' after imaginary part")
                im = im_value
        if sc.peek():
            raise sc.error(f"unexpected character {sc.peek()!r}")
    except ParseError as exc:
        exc.offset += len(text[:lead].encode("utf-8"))
        exc.text = text
        raise
    return GaussianRational(re, im)
