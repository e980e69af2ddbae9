"""Pure-Python window kernel (fallback for the compiled ``_kernel``).

Every quantity is an element ``a + b*phi`` of Z[phi] stored as two ints,
with points scaled by a common positive denominator ``D``.  For each
``n`` in the window the kernel reduces ``p + n`` into the closed
fundamental rectangle (directed by the signs of ``v``), evaluates every
carrying line and returns the label bit-pattern lookup together with a
flag telling whether the reduced point lies on Delta.
"""

import math

BACKEND = "python"

_PHI = (1 + math.sqrt(5)) / 2


def zsign(a, b):
    """Sign of a + b*phi for integers a, b."""
    if b == 0:
        return (a > 0) - (a < 0)
    u = 2 * a + b
    if u >= 0 and b > 0:
        return 1
    if u <= 0 and b < 0:
        return -1
    n = a * a + a * b - b * b
    if n > 0:
        return 1 if u > 0 else -1
    return 1 if b > 0 else -1


def zfloor(a, b, m):
    """floor((a + b*phi) / m) for integers a, b and m > 0."""
    if abs(a) + abs(b) < 1 << 50:
        q = math.floor((a + b * _PHI) / m)
    else:
        r = math.isqrt(5 * b * b)
        q = (2 * a + b + (r if b > 0 else -r)) // (2 * m)
    while zsign(a - q * m, b) < 0:
        q -= 1
    while zsign(a - (q + 1) * m, b) >= 0:
        q += 1
    return q


def _directed_floor(a, b, m, s):
    q = zfloor(a, b, m)
    if s < 0 and b == 0 and a == q * m:
        q -= 1
    return q


def code_window(lines, segs, sig, tie, px, py, d, sx, sy, x0, y0, x1, y1):
    """Scan the window ``[x0, x1) x [y0, y1)`` row by row.

    ``lines`` holds ``(c0, c1, d0, d1, e0, e1)`` for ``c*x + d*y + e = 0``,
    ``segs`` holds ``(line, vertical, lo0, lo1, hi0, hi1)``, ``sig`` maps a
    bit pattern to its label and ``tie`` gives the side of each line that
    the direction points to.  Returns ``(labels, hits)`` as flat lists.
    """
    labels = []
    hits = []
    nl = len(lines)
    for ny in range(y0, y1):
        ya = py[0] + ny * d
        yb = py[1]
        # y / (phi + 3) = y * (4 - phi) / 11
        k = _directed_floor(4 * ya - yb, -ya + 3 * yb, 11 * d, sy)
        ya -= 3 * k * d
        yb -= k * d
        top = ya == 3 * d and yb == d
        for nx in range(x0, x1):
            xa = px[0] + nx * d - k * d
            xb = px[1]
            # x / phi = x * (phi - 1)
            m = _directed_floor(xb - xa, xa, d, sx)
            xb -= m * d
            vals = [0] * nl
            key = 0
            for i in range(nl):
                c0, c1, d0, d1, e0, e1 = lines[i]
                bc = c1 * xb
                bd = d1 * yb
                va = c0 * xa + bc + d0 * ya + bd + e0 * d
                vb = c0 * xb + c1 * xa + bc + d0 * yb + d1 * ya + bd + e1 * d
                s = zsign(va, vb)
                if s == 0:
                    vals[i] = 1
                    s = tie[i]
                if s > 0:
                    key |= 1 << i
            labels.append(sig[key])
            hit = top or (xa == 0 and xb == d)
            if not hit:
                for li, vert, lo0, lo1, hi0, hi1 in segs:
                    if not vals[li]:
                        continue
                    ta, tb = (ya, yb) if vert else (xa, xb)
                    if zsign(ta - lo0 * d, tb - lo1 * d) >= 0 and zsign(hi0 * d - ta, hi1 * d - tb) >= 0:
                        hit = True
                        break
            hits.append(hit)
    return labels, hits
