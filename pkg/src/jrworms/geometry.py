"""Exact planar geometry over GoldenNum coordinates.

Points are plain ``(x, y)`` tuples.  All predicates go through
:func:`jrworms.exactnum.sign`, so nothing here depends on floating point.
"""

from __future__ import annotations

from .exactnum import ZERO, GoldenNum, sign

__all__ = [
    "cross",
    "orient",
    "signed_area",
    "clip_halfplane",
    "convex_intersection",
    "point_in_polygon",
    "on_segment",
    "polygon_union_boundary",
    "convex_hull",
]


def cross(o, a, b):
    """z-component of ``(a - o) x (b - o)``."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def orient(o, a, b) -> int:
    return sign(cross(o, a, b))


def signed_area(poly) -> GoldenNum:
    s = ZERO
    n = len(poly)
    for i in range(n):
        p, q = poly[i], poly[(i + 1) % n]
        s = s + p[0] * q[1] - p[1] * q[0]
    return s / 2


def _dedupe(pts):
    out = []
    for p in pts:
        if not out or out[-1] != p:
            out.append(p)
    if len(out) > 1 and out[0] == out[-1]:
        out.pop()
    return out


def clip_halfplane(poly, f):
    """Keep the part of convex ``poly`` where the affine function ``f >= 0``."""
    out = []
    n = len(poly)
    vals = [f(p) for p in poly]
    for i in range(n):
        p, q = poly[i], poly[(i + 1) % n]
        a, b = vals[i], vals[(i + 1) % n]
        sa, sb = sign(a), sign(b)
        if sa >= 0:
            out.append(p)
        if sa * sb < 0:
            t = a / (a - b)
            out.append((p[0] + (q[0] - p[0]) * t, p[1] + (q[1] - p[1]) * t))
    return _dedupe(out)


def convex_intersection(p, q):
    """Intersection of two counter-clockwise convex polygons."""
    r = list(p)
    m = len(q)
    for i in range(m):
        a, b = q[i], q[(i + 1) % m]
        r = clip_halfplane(r, lambda x, a=a, b=b: cross(a, b, x))
        if len(r) < 3:
            return []
    return r


def on_segment(p, a, b) -> bool:
    """True when ``p`` lies on the closed segment ``ab``."""
    if orient(a, b, p) != 0:
        return False
    return (sign((p[0] - a[0]) * (p[0] - b[0])) <= 0
            and sign((p[1] - a[1]) * (p[1] - b[1])) <= 0)


def point_in_polygon(p, poly) -> int:
    """Return 1 inside, 0 on the boundary, -1 outside (simple polygon)."""
    n = len(poly)
    inside = False
    for i in range(n):
        a, b = poly[i], poly[(i + 1) % n]
        if on_segment(p, a, b):
            return 0
        ya, yb = sign(a[1] - p[1]) > 0, sign(b[1] - p[1]) > 0
        if ya != yb:
            # crossing of the horizontal ray to the right of p
            o = orient(a, b, p)
            if (o > 0) == (sign(b[1] - a[1]) > 0):
                inside = not inside
    return 1 if inside else -1


def polygon_union_boundary(polys):
    """Boundary cycle of a union of edge-adjacent CCW polygons.

    Edges are first split at every vertex lying on them so that shared
    edges cancel exactly.  Returns a single CCW vertex list with collinear
    vertices removed; raises ValueError if the union has holes or several
    components.
    """
    verts = {v for poly in polys for v in poly}
    edges = []
    for poly in polys:
        n = len(poly)
        for i in range(n):
            a, b = poly[i], poly[(i + 1) % n]
            inner = [v for v in verts if v != a and v != b and on_segment(v, a, b)]
            d = (b[0] - a[0], b[1] - a[1])
            inner.sort(key=lambda v: (v[0] - a[0]) * d[0] + (v[1] - a[1]) * d[1])
            chain = [a, *inner, b]
            edges.extend(zip(chain, chain[1:]))
    es = set(edges)
    boundary = [e for e in edges if (e[1], e[0]) not in es]
    nxt = {}
    for a, b in boundary:
        if a in nxt:
            raise ValueError("union boundary is not a simple cycle")
        nxt[a] = b
    start = boundary[0][0]
    cycle = [start]
    cur = nxt[start]
    while cur != start:
        cycle.append(cur)
        cur = nxt[cur]
    if len(cycle) != len(boundary):
        raise ValueError("union has more than one boundary component")
    out = [v for i, v in enumerate(cycle)
           if orient(cycle[i - 1], v, cycle[(i + 1) % len(cycle)]) != 0]
    return out


def convex_hull(points):
    """Andrew's monotone chain; CCW hull without collinear points."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and orient(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and orient(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]
