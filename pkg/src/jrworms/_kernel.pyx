# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled window kernel; same contract as ``_kernel_py.code_window``.

Values are held in 64-bit ints with 128-bit products inside ``zsign``.
Inputs that could overflow raise OverflowError so the caller can fall
back to the arbitrary-precision version.
"""

from libc.math cimport floor as c_floor

BACKEND = "cython"

cdef extern from *:
    ctypedef long long i128 "__int128"

ctypedef long long i64

cdef double PHI_D = 1.6180339887498949
cdef i64 LIMIT = 1LL << 40
cdef enum:
    MAXLINES = 24


cdef inline int zsign(i64 a, i64 b) nogil:
    cdef i64 u
    cdef i128 n
    if b == 0:
        return (a > 0) - (a < 0)
    u = 2 * a + b
    if u >= 0 and b > 0:
        return 1
    if u <= 0 and b < 0:
        return -1
    n = <i128>a * a + <i128>a * b - <i128>b * b
    if n > 0:
        return 1 if u > 0 else -1
    return 1 if b > 0 else -1


cdef inline i64 zfloor(i64 a, i64 b, i64 m) nogil:
    cdef i64 q = <i64>c_floor((<double>a + <double>b * PHI_D) / <double>m)
    while zsign(a - q * m, b) < 0:
        q -= 1
    while zsign(a - (q + 1) * m, b) >= 0:
        q += 1
    return q


cdef inline i64 directed_floor(i64 a, i64 b, i64 m, int s) nogil:
    cdef i64 q = zfloor(a, b, m)
    if s < 0 and b == 0 and a == q * m:
        q -= 1
    return q


def code_window(lines, segs, sig, tie, px, py, d, int sx, int sy,
                i64 x0, i64 y0, i64 x1, i64 y1):
    cdef int nl = len(lines)
    cdef int ns = len(segs)
    if nl > MAXLINES:
        raise OverflowError("too many lines for the compiled kernel")
    big = max(abs(px[0]), abs(px[1]), abs(py[0]), abs(py[1]))
    span = max(abs(x0), abs(x1), abs(y0), abs(y1)) + 8
    if d <= 0 or d >= (1 << 20) or big + span * d >= LIMIT:
        raise OverflowError("input too large for the compiled kernel")

    cdef i64 L[MAXLINES][6]
    cdef int T[MAXLINES]
    cdef int SL[2 * MAXLINES]
    cdef int SV[2 * MAXLINES]
    cdef i64 SB[2 * MAXLINES][4]
    cdef int i, j
    if ns > 2 * MAXLINES:
        raise OverflowError("too many segments for the compiled kernel")
    for i in range(nl):
        for j in range(6):
            L[i][j] = lines[i][j]
        T[i] = tie[i]
    for i in range(ns):
        SL[i] = segs[i][0]
        SV[i] = segs[i][1]
        for j in range(4):
            SB[i][j] = segs[i][2 + j]

    cdef i64 D = d
    cdef i64 pxa = px[0], pxb = px[1], pya = py[0], pyb = py[1]
    cdef i64 w = x1 - x0
    cdef i64 h = y1 - y0
    if w < 0:
        w = 0
    if h < 0:
        h = 0
    labels = bytearray(w * h)
    hits = bytearray(w * h)
    cdef unsigned char[:] lab_v = labels
    cdef unsigned char[:] hit_v = hits
    cdef const signed char[:] sig_v = sig

    cdef i64 nx, ny, ya, yb, xa, xb, k, m, va, vb, bc, bd, ta, tb
    cdef unsigned long long key
    cdef int s, top, hit, li, lab
    cdef char zero[MAXLINES]
    cdef i64 idx = 0
    with nogil:
        for ny in range(y0, y1):
            ya = pya + ny * D
            yb = pyb
            k = directed_floor(4 * ya - yb, -ya + 3 * yb, 11 * D, sy)
            ya -= 3 * k * D
            yb -= k * D
            top = ya == 3 * D and yb == D
            for nx in range(x0, x1):
                xa = pxa + nx * D - k * D
                xb = pxb
                m = directed_floor(xb - xa, xa, D, sx)
                xb -= m * D
                key = 0
                for i in range(nl):
                    bc = L[i][1] * xb
                    bd = L[i][3] * yb
                    va = L[i][0] * xa + bc + L[i][2] * ya + bd + L[i][4] * D
                    vb = (L[i][0] * xb + L[i][1] * xa + bc
                          + L[i][2] * yb + L[i][3] * ya + bd + L[i][5] * D)
                    s = zsign(va, vb)
                    zero[i] = s == 0
                    if s == 0:
                        s = T[i]
                    if s > 0:
                        key |= (<unsigned long long>1) << i
                lab = sig_v[key]
                if lab < 0:
                    with gil:
                        raise KeyError(key)
                lab_v[idx] = lab
                hit = top or (xa == 0 and xb == D)
                if not hit:
                    for j in range(ns):
                        li = SL[j]
                        if not zero[li]:
                            continue
                        if SV[j]:
                            ta = ya
                            tb = yb
                        else:
                            ta = xa
                            tb = xb
                        if (zsign(ta - SB[j][0] * D, tb - SB[j][1] * D) >= 0
                                and zsign(SB[j][2] * D - ta, SB[j][3] * D - tb) >= 0):
                            hit = 1
                            break
                hit_v[idx] = hit
                idx += 1
    return list(labels), [bool(b) for b in hits]
