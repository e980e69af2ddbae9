"""Exact arithmetic in the quadratic field Q(sqrt 5), written in the basis {1, phi}.

A :class:`GoldenNum` is ``a + b*phi`` with rational ``a`` and ``b`` where
``phi = (1 + sqrt 5) / 2`` satisfies ``phi**2 = phi + 1``.  Comparisons,
:func:`sign` and :func:`floor` are exact; no floating point is involved.

Literal syntax (used by every file format and the CLI)::

    "9/10"   "-3/1 + 2/1*phi"   "phi"   "1/4 + -1/4*phi"
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational

__all__ = ["GoldenNum", "PHI", "ZERO", "ONE", "parse", "sign", "floor", "ceil", "as_golden"]


class GoldenNum:
    """Immutable element ``a + b*phi`` of Q(phi)."""

    __slots__ = ("a", "b", "_hash")

    def __init__(self, a=0, b=0):
        self.a = a if type(a) is Fraction else Fraction(a)
        self.b = b if type(b) is Fraction else Fraction(b)
        self._hash = None

    @classmethod
    def _raw(cls, a: Fraction, b: Fraction) -> "GoldenNum":
        obj = object.__new__(cls)
        obj.a = a
        obj.b = b
        obj._hash = None
        return obj

    # arithmetic

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return GoldenNum._raw(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return GoldenNum._raw(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return GoldenNum._raw(other.a - self.a, other.b - self.b)

    def __neg__(self):
        return GoldenNum._raw(-self.a, -self.b)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GoldenNum._raw(self.a * other, self.b * other)
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.a, self.b, other.a, other.b
        bd = b * d
        # (a + b phi)(c + d phi) = ac + bd + (ad + bc + bd) phi
        return GoldenNum._raw(a * c + bd, a * d + b * c + bd)

    __rmul__ = __mul__

    def conjugate(self) -> "GoldenNum":
        """Galois conjugate: phi -> 1 - phi."""
        return GoldenNum._raw(self.a + self.b, -self.b)

    def norm(self) -> Fraction:
        """Field norm ``a**2 + a*b - b**2``."""
        a, b = self.a, self.b
        return a * a + a * b - b * b

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("GoldenNum division by zero")
            return GoldenNum._raw(self.a / other, self.b / other)
        other = _coerce(other)
        if other is NotImplemented:
            return other
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("GoldenNum division by zero")
        return self * GoldenNum._raw((other.a + other.b) / n, -other.b / n)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return ONE / (self ** -k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # comparison

    def __eq__(self, other):
        if isinstance(other, GoldenNum):
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.a) if self.b == 0 else hash((self.a, self.b))
        return self._hash

    def __lt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return sign(self - other) < 0

    def __le__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return sign(self - other) <= 0

    def __gt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return sign(self - other) > 0

    def __ge__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return sign(self - other) >= 0

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __abs__(self):
        return -self if sign(self) < 0 else self

    def __float__(self):
        return float(self.a) + float(self.b) * _PHI_FLOAT

    def __floor__(self):
        return floor(self)

    def __ceil__(self):
        return ceil(self)

    def is_rational(self) -> bool:
        return self.b == 0

    # text

    def __str__(self):
        return format_golden(self)

    def __repr__(self):
        return f"GoldenNum({format_golden(self)!r})"

    def __reduce__(self):
        return (GoldenNum, (self.a, self.b))


_PHI_FLOAT = (1 + math.sqrt(5)) / 2


def _coerce(x):
    if isinstance(x, GoldenNum):
        return x
    if isinstance(x, (int, Fraction)):
        return GoldenNum._raw(Fraction(x), Fraction(0))
    if isinstance(x, Rational):
        return GoldenNum._raw(Fraction(x.numerator, x.denominator), Fraction(0))
    return NotImplemented


def as_golden(x) -> GoldenNum:
    """Coerce an int, Fraction, literal string or GoldenNum."""
    if isinstance(x, str):
        return parse(x)
    y = _coerce(x)
    if y is NotImplemented:
        raise TypeError(f"cannot convert {type(x).__name__} to GoldenNum")
    return y


def sign(x: GoldenNum) -> int:
    """Exact sign of ``a + b*phi``.

    With ``phi = (1 + sqrt 5)/2`` the value is ``(u + b*sqrt 5)/2`` where
    ``u = 2a + b``; when ``u`` and ``b`` disagree in sign the larger of
    ``u**2`` and ``5*b**2`` wins, and ``u**2 - 5*b**2 = 4*norm``.
    """
    if not isinstance(x, GoldenNum):
        x = as_golden(x)
    a, b = x.a, x.b
    if b == 0:
        return (a > 0) - (a < 0)
    u = 2 * a + b
    if u >= 0 and b > 0:
        return 1
    if u <= 0 and b < 0:
        return -1
    n = a * a + a * b - b * b
    # n != 0 here since sqrt 5 is irrational
    return (1 if u > 0 else -1) if n > 0 else (1 if b > 0 else -1)


# Fibonacci convergent; |phi - 4181/2584| < 1e-7
_PHI_APPROX = Fraction(4181, 2584)


def floor(x) -> int:
    """Greatest integer ``n`` with ``n <= x``, bracketed exactly with :func:`sign`."""
    if not isinstance(x, GoldenNum):
        x = as_golden(x)
    if x.b == 0:
        return math.floor(x.a)
    n = math.floor(x.a + x.b * _PHI_APPROX)
    while sign(x - n) < 0:
        n -= 1
    while sign(x - (n + 1)) >= 0:
        n += 1
    return n


def ceil(x) -> int:
    return -floor(-as_golden(x))


def format_golden(x: GoldenNum) -> str:
    a, b = x.a, x.b
    parts = []
    if a != 0 or b == 0:
        parts.append(str(a))
    if b != 0:
        parts.append("phi" if b == 1 else f"{b}*phi")
    return " + ".join(parts)


_TERM = re.compile(r"([+-]*)(\d+(?:/\d+)?)?(\*?phi)?")


def parse(text: str) -> GoldenNum:
    """Parse a literal such as ``"-3/1 + 2/1*phi"``; inverse of ``str``."""
    s = "".join(str(text).split())
    if not s:
        raise ValueError("empty GoldenNum literal")
    a = Fraction(0)
    b = Fraction(0)
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos or not (m.group(2) or m.group(3)):
            raise ValueError(f"invalid GoldenNum literal: {text!r}")
        signs, coef, phi = m.groups()
        if phi and phi.startswith("*") and not coef:
            raise ValueError(f"invalid GoldenNum literal: {text!r}")
        value = Fraction(coef) if coef else Fraction(1)
        if signs.count("-") % 2:
            value = -value
        if phi:
            b += value
        else:
            a += value
        pos = m.end()
        if pos < len(s) and s[pos] not in "+-":
            raise ValueError(f"invalid GoldenNum literal: {text!r}")
    return GoldenNum._raw(a, b)


ZERO = GoldenNum(0, 0)
ONE = GoldenNum(1, 0)
PHI = GoldenNum(0, 1)
