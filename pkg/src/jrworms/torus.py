"""The torus R^2 / Gamma0 and the Z^2-rotation acting on it.

Gamma0 is spanned by ``(phi, 0)`` and ``(1, phi + 3)``.  Points are kept
in the half-open rectangle ``[0, phi) x [0, phi + 3)``; :func:`reduce`
first fixes ``y`` with a multiple of the sheared generator and then
fixes ``x`` with the horizontal one.
"""

from __future__ import annotations

import re
from typing import NamedTuple

from .exactnum import ONE, PHI, ZERO, GoldenNum, as_golden, floor, parse, sign

__all__ = [
    "TorusPoint",
    "LatticeGamma0",
    "GAMMA0",
    "WIDTH",
    "HEIGHT",
    "reduce",
    "reduce_directed",
    "act",
    "in_gamma0_plus_z2",
    "parse_point",
    "format_point",
]

WIDTH = PHI
HEIGHT = PHI + 3


class TorusPoint(NamedTuple):
    x: GoldenNum
    y: GoldenNum

    def __str__(self):
        return format_point(self)


class LatticeGamma0(NamedTuple):
    gamma0: tuple = (PHI, ZERO)
    gamma1: tuple = (ONE, PHI + 3)

    def determinant(self) -> GoldenNum:
        (a, b), (c, d) = self.gamma0, self.gamma1
        return a * d - b * c

    def element(self, k: int, m: int) -> tuple:
        return (self.gamma0[0] * k + self.gamma1[0] * m,
                self.gamma0[1] * k + self.gamma1[1] * m)


GAMMA0 = LatticeGamma0()


def _pair(p):
    return as_golden(p[0]), as_golden(p[1])


def reduce(p) -> TorusPoint:
    """Canonical representative of ``p`` in ``[0, phi) x [0, phi + 3)``."""
    x, y = _pair(p)
    k = floor(y / HEIGHT)
    y = y - HEIGHT * k
    x = x - k
    m = floor(x / WIDTH)
    return TorusPoint(x - WIDTH * m, y)


def _floor_directed(t: GoldenNum, d: int) -> int:
    n = floor(t)
    if d < 0 and t == n:
        n -= 1
    return n


def reduce_directed(p, v) -> TorusPoint:
    """Representative of ``p`` in the closed rectangle such that ``p + eps*v``
    stays inside it for all small ``eps > 0``.

    Coordinates on the bottom/left edge are moved to the top/right edge when
    ``v`` points out of the rectangle there.  ``v`` must have nonzero
    components.
    """
    x, y = _pair(p)
    vx, vy = sign(as_golden(v[0])), sign(as_golden(v[1]))
    if vx == 0 or vy == 0:
        raise ValueError("direction must not be axis-parallel")
    k = _floor_directed(y / HEIGHT, vy)
    y = y - HEIGHT * k
    x = x - k
    m = _floor_directed(x / WIDTH, vx)
    return TorusPoint(x - WIDTH * m, y)


def act(n, p) -> TorusPoint:
    """R0^n(p) = p + n reduced to the fundamental domain."""
    x, y = _pair(p)
    return reduce((x + n[0], y + n[1]))


def in_gamma0_plus_z2(p) -> bool:
    """Membership in Gamma0 + Z^2, which is exactly Z[phi]^2."""
    x, y = _pair(p)
    return all(c.denominator == 1 for c in (x.a, x.b, y.a, y.b))


_POINT = re.compile(r"^\s*\(\s*(.+?)\s*,\s*(.+?)\s*\)\s*$")


def parse_point(text: str) -> TorusPoint:
    """Parse ``"(1/4 + -1/4*phi, 1/4)"`` into an unreduced point."""
    m = _POINT.match(text)
    if m is None:
        raise ValueError(f"invalid point literal: {text!r}")
    return TorusPoint(parse(m.group(1)), parse(m.group(2)))


def format_point(p) -> str:
    return f"({p[0]}, {p[1]})"
