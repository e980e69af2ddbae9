"""Backend selection for the window kernel.

The compiled ``_kernel`` extension is used when it was built; otherwise,
or when ``JRWORMS_PURE_PYTHON`` is set, the pure-Python ``_kernel_py``
takes over.  Both return identical results.  The compiled version works
with 64-bit integers and hands over to the Python one on overflow.
"""

from __future__ import annotations

import math
import os
from array import array

from . import _kernel_py
from .exactnum import as_golden, sign

__all__ = ["BACKEND", "available_backends", "KernelTables", "tables_for", "scan_window"]

if os.environ.get("JRWORMS_PURE_PYTHON"):
    _compiled = None
else:
    try:
        from . import _kernel as _compiled
    except ImportError:  # extension not built
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"


def available_backends() -> tuple:
    return ("cython", "python") if _compiled is not None else ("python",)


def _ints(g):
    if g.a.denominator != 1 or g.b.denominator != 1:
        raise ValueError("kernel needs Z[phi] line data")
    return int(g.a), int(g.b)


class KernelTables:
    """Integer form of a partition's carrying lines and Delta segments."""

    def __init__(self, partition):
        self.lines = [(*_ints(c), *_ints(d), *_ints(e)) for c, d, e in partition.lines]
        self.segs = []
        for dl, li in zip(partition.delta_lines, partition.segment_line):
            lo, hi = dl.param(dl.start), dl.param(dl.end)
            self.segs.append((li, 1 if dl.vertical else 0, *_ints(lo), *_ints(hi)))
        self.sig = dict(partition.signature_table)
        self.sig_array = None
        if len(self.lines) <= 24:
            arr = array("b", [-1]) * (1 << len(self.lines))
            for key, lab in self.sig.items():
                arr[key] = lab
            self.sig_array = arr
        self._partition = partition

    def tie(self, v):
        return [sign(c * v[0] + d * v[1]) for c, d, _e in self._partition.lines]


_TABLES = {}


def tables_for(partition) -> KernelTables:
    key = id(partition)
    t = _TABLES.get(key)
    if t is None or t._partition is not partition:
        t = KernelTables(partition)
        _TABLES[key] = t
    return t


def _scaled(p):
    x, y = as_golden(p[0]), as_golden(p[1])
    d = 1
    for f in (x.a, x.b, y.a, y.b):
        d = d * f.denominator // math.gcd(d, f.denominator)
    return (int(x.a * d), int(x.b * d)), (int(y.a * d), int(y.b * d)), d


def scan_window(partition, p, v, window, backend=None):
    """Labels and Delta-hit flags of ``p + n`` over the closed window.

    ``window`` is ``(x0, y0, x1, y1)`` inclusive; results are row-major
    from the bottom row.  ``v`` must be admissible for the partition.
    """
    v = partition.check_direction(v)
    t = tables_for(partition)
    px, py, d = _scaled(p)
    x0, y0, x1, y1 = window
    sx, sy = sign(v[0]), sign(v[1])
    args = (t.lines, t.segs, None, t.tie(v), px, py, d, sx, sy, x0, y0, x1 + 1, y1 + 1)
    use = backend or BACKEND
    if use == "cython":
        if _compiled is None:
            raise RuntimeError("compiled kernel is not available")
        if t.sig_array is not None:
            try:
                return _compiled.code_window(*args[:2], t.sig_array, *args[3:])
            except OverflowError:
                pass
    return _kernel_py.code_window(*args[:2], t.sig, *args[3:])
