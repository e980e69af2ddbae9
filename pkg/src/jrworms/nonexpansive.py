"""Orbit hits on Delta, strip fitting and the four nonexpansive directions."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .coding import DEFAULT_DIRECTION, configuration_and_hits
from .exactnum import ONE, PHI, ZERO, GoldenNum, as_golden, sign
from .geometry import convex_hull, cross
from .partition import SLOPE_CLASSES, default_partition
from .torus import act, in_gamma0_plus_z2

__all__ = [
    "StripSpec",
    "StripFit",
    "ORIGIN_ORBIT",
    "GENERIC",
    "CANONICAL_DIRECTIONS",
    "orbit_delta",
    "orbit_delta_by_class",
    "predicted_strip",
    "margin_excess",
    "strip_fit",
    "strip_width_sq",
    "recover_direction",
    "parallel",
    "classify_point",
]

ORIGIN_ORBIT = "origin-orbit"
GENERIC = "generic"

# strip direction for the Delta family of each slope class
CANONICAL_DIRECTIONS = {
    "0": (ONE, ZERO),
    "inf": (ONE, PHI + 3),
    "phi": (1 - 2 * PHI, 8 - PHI),
    "phi2": (2 * ONE, 5 - 2 * PHI),
}


@dataclass(frozen=True)
class StripSpec:
    """The set ``{n : lower <= <n, normal> <= upper}``."""

    normal: tuple
    lower: GoldenNum
    upper: GoldenNum
    slope_class: str
    direction: tuple

    def value(self, n) -> GoldenNum:
        return self.normal[0] * n[0] + self.normal[1] * n[1]

    def contains(self, n) -> bool:
        t = self.value(n)
        return sign(t - self.lower) >= 0 and sign(self.upper - t) >= 0

    def slope(self):
        dx, dy = self.direction
        return dy / dx


def predicted_strip(slope_class: str, delta_margin=0) -> StripSpec:
    """Strip containing the Delta hits of an orbit through a line of the class."""
    if slope_class not in CANONICAL_DIRECTIONS:
        raise ValueError(f"unknown slope class {slope_class!r}")
    d = as_golden(delta_margin)
    if sign(d) < 0:
        raise ValueError("delta_margin must be non-negative")
    direction = CANONICAL_DIRECTIONS[slope_class]
    if slope_class == "0":
        return StripSpec((ZERO, ONE), -d, ONE + d, slope_class, direction)
    if slope_class == "inf":
        normal, bound = (-(PHI + 3), ONE), PHI + 3
    elif slope_class == "phi":
        normal, bound = (PHI - 8, 1 - 2 * PHI), 3 * (3 - PHI)
    else:
        normal, bound = (5 - 2 * PHI, -2 * ONE), Fraction(4, 3) * ((2 - PHI) ** 2 + 1)
    return StripSpec(normal, -(bound + d), bound + d, slope_class, direction)


def margin_excess(points, slope_class: str) -> GoldenNum:
    """Smallest ``delta >= 0`` with ``points`` inside ``predicted_strip(class, delta)``."""
    spec = predicted_strip(slope_class)
    worst = ZERO
    for n in points:
        t = spec.value(n)
        for ex in (spec.lower - t, t - spec.upper):
            if ex > worst:
                worst = ex
    return worst


def orbit_delta(p, window=30, partition=None) -> set:
    """``{n in window : R0^n(p) in Delta}``."""
    return configuration_and_hits(p, DEFAULT_DIRECTION, window, partition)[1]


def orbit_delta_by_class(p, window=30, partition=None) -> dict:
    """Split the orbit hits by the slope classes of the Delta-lines they meet."""
    part = partition or default_partition()
    cls_of = {dl.id: dl.slope_class for dl in part.delta_lines}
    out = {c: set() for c in SLOPE_CLASSES}
    for n in orbit_delta(p, window, part):
        where = part.locate(act(n, p))
        for i in where.lines:
            out[cls_of[i]].add(n)
    return out


# -- strip fitting -------------------------------------------------------------


@dataclass(frozen=True)
class StripFit:
    """Minimal enclosing strip of a finite point set.

    ``direction`` is a primitive integer vector along a hull edge and
    ``width_sq`` the exact squared width.
    """

    direction: tuple
    width_sq: Fraction

    @property
    def width(self) -> float:
        return math.sqrt(self.width_sq)


def _primitive(dx, dy):
    g = math.gcd(int(dx), int(dy)) or 1
    dx, dy = int(dx) // g, int(dy) // g
    if dx < 0 or (dx == 0 and dy < 0):
        dx, dy = -dx, -dy
    return (dx, dy)


def strip_fit(points) -> StripFit:
    """Rotating calipers on the exact convex hull of integer points."""
    pts = {(int(x), int(y)) for x, y in points}
    if len(pts) < 2:
        raise ValueError("strip_fit needs at least 2 distinct points")
    hull = convex_hull([(Fraction(x), Fraction(y)) for x, y in pts])
    if len(hull) == 2:
        a, b = hull
        return StripFit(_primitive(b[0] - a[0], b[1] - a[1]), Fraction(0))
    n = len(hull)
    best = None
    j = 1
    for i in range(n):
        a, b = hull[i], hull[(i + 1) % n]
        # advance the antipodal pointer while the area keeps growing
        while abs(cross(a, b, hull[(j + 1) % n])) > abs(cross(a, b, hull[j])):
            j = (j + 1) % n
        h = abs(cross(a, b, hull[j]))
        ln = (b[0] - a[0]) ** 2 + (b[1] - a[1]) ** 2
        w = h * h / ln
        if best is None or w < best[0]:
            best = (w, _primitive(b[0] - a[0], b[1] - a[1]))
    return StripFit(best[1], best[0])


def strip_width_sq(points, direction) -> GoldenNum:
    """Exact squared width of ``points`` measured across ``direction``."""
    dx, dy = as_golden(direction[0]), as_golden(direction[1])
    vals = [dx * y - dy * x for x, y in points]
    lo = min(vals)
    hi = max(vals)
    return (hi - lo) ** 2 / (dx * dx + dy * dy)


def _lift(p, n, q):
    """Integers ``(g1, g2)`` with ``p + n = q + g1*(phi, 0) + g2*(1, phi + 3)``."""
    gx = as_golden(p[0]) + n[0] - q[0]
    gy = as_golden(p[1]) + n[1] - q[1]
    g2 = gy / (PHI + 3)
    g1 = (gx - g2) / PHI
    for g in (g1, g2):
        if g.b != 0 or g.a.denominator != 1:
            raise ValueError(f"{q} is not a reduction of {p} + {n}")
    return int(g1.a), int(g2.a)


def _rational_basis(vectors):
    """Echelon basis (as Fractions) of the rational span of integer vectors."""
    basis = []
    pivots = []
    for v in vectors:
        v = [Fraction(t) for t in v]
        for b, c in zip(basis, pivots):
            if v[c]:
                f = v[c] / b[c]
                v = [x - f * y for x, y in zip(v, b)]
        nz = [k for k, t in enumerate(v) if t]
        if nz:
            basis.append(v)
            pivots.append(nz[0])
    return basis


def recover_direction(p, hits=None, window=30, partition=None) -> dict:
    """Exact strip direction of each slope class met by the orbit of ``p``.

    For a hit ``n`` write ``p + n = q + g1*(phi, 0) + g2*(1, phi + 3)`` with
    ``q`` on a Delta-line of direction ``w``.  Differences ``(dn, dg)`` of hits
    on one line satisfy ``dn - G dg = tau * w`` exactly, so they span a
    rational plane on which ``tau`` is a Q(phi)-linear form.  The hits stay
    in a strip along the ``n``-part of the kernel of ``tau``.  Nothing but
    the hit positions is used; classes with too few hits are left out.
    """
    part = partition or default_partition()
    if hits is None:
        hits = orbit_delta(p, window, part)
    by_id = {}
    for dl in part.delta_lines:
        by_id.setdefault(dl.id, dl)
    groups = {}
    for n in sorted(hits):
        q = act(n, p)
        g = _lift(p, n, q)
        where = part.locate(q)
        for i in where.lines:
            groups.setdefault(i, []).append((n, g))
    diffs = {}
    for i, members in groups.items():
        (n0, g0) = members[0]
        cls = by_id[i].slope_class
        for n, g in members[1:]:
            diffs.setdefault(cls, []).append((n[0] - n0[0], n[1] - n0[1], g[0] - g0[0], g[1] - g0[1]))
    out = {}
    for cls, vecs in diffs.items():
        basis = _rational_basis(vecs)
        if len(basis) != 2:
            continue
        dl = next(d for d in part.delta_lines if d.slope_class == cls)
        w = (dl.end[0] - dl.start[0], dl.end[1] - dl.start[1])
        taus = []
        for k in basis:
            rx = k[0] - (PHI * k[2] + k[3])
            ry = k[1] - (PHI + 3) * k[3]
            if sign(rx * w[1] - ry * w[0]) != 0:
                raise ValueError("hit differences are not parallel to their Delta-line")
            taus.append(rx / w[0] if sign(w[0]) else ry / w[1])
        (k1, k2), (t1, t2) = basis, taus
        dx = t2 * k1[0] - t1 * k2[0]
        dy = t2 * k1[1] - t1 * k2[1]
        out[cls] = (ZERO, ONE) if sign(dx) == 0 else (ONE, dy / dx)
    return out


def parallel(u, v) -> bool:
    return sign(as_golden(u[0]) * v[1] - as_golden(u[1]) * v[0]) == 0


def classify_point(p, window=30, partition=None):
    """Slope class of the Delta-lines met by the orbit of ``p``.

    Returns ``ORIGIN_ORBIT`` for points of Gamma0 + Z^2, ``GENERIC`` when the
    orbit misses Delta on the scanned window (a window-relative verdict), or
    the slope class shared by every hit.
    """
    part = partition or default_partition()
    if in_gamma0_plus_z2(p):
        return ORIGIN_ORBIT
    by_class = orbit_delta_by_class(p, window, part)
    found = [c for c in SLOPE_CLASSES if by_class[c]]
    if not found:
        return GENERIC
    if len(found) > 1:
        raise ValueError(f"orbit of {p} meets several slope classes {found}")
    return found[0]
