"""The 11-label Markov partition of R^2/Gamma0, its Delta-lines and the normalization table.

The geometry lives in ``data/partition.json``: polygon pieces with a tile
label, the 18 Delta-lines (line 18 has two disjoint segments) and the
normalization table.  :func:`load_partition` validates all of it exactly
before handing out a :class:`Partition`.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass
from functools import cached_property
from importlib import resources
from pathlib import Path
from typing import NamedTuple

from .exactnum import ONE, PHI, ZERO, GoldenNum, as_golden, sign
from .geometry import (
    clip_halfplane,
    on_segment,
    orient,
    point_in_polygon,
    signed_area,
)
from .torus import GAMMA0, HEIGHT, WIDTH, reduce, reduce_directed

__all__ = [
    "SLOPE_CLASSES",
    "SLOPES",
    "Atom",
    "DeltaLine",
    "TableRow",
    "Interior",
    "Boundary",
    "Partition",
    "PartitionError",
    "load_partition",
    "read_partition_data",
    "write_partition_data",
    "data_checksum",
    "default_partition",
]

SLOPE_CLASSES = ("0", "phi", "phi2", "inf")
# None stands for the vertical class
SLOPES = {"0": ZERO, "phi": PHI, "phi2": PHI + 1, "inf": None}

ENV_PARTITION = "JRWORMS_PARTITION"


class PartitionError(ValueError):
    """Raised by the loader; ``problems`` lists every failed check."""

    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("invalid partition data:\n  " + "\n  ".join(self.problems))


class Interior(NamedTuple):
    label: int


class Boundary(NamedTuple):
    lines: tuple


@dataclass(frozen=True)
class Atom:
    """All polygon pieces carrying one tile label."""

    label: int
    pieces: tuple

    def area(self) -> GoldenNum:
        return sum((signed_area(p) for p in self.pieces), ZERO)


@dataclass(frozen=True)
class DeltaLine:
    """One straight boundary segment; ``start`` is the left (or lower) end."""

    id: int
    slope_class: str
    start: tuple
    end: tuple

    @property
    def vertical(self) -> bool:
        return self.slope_class == "inf"

    def param(self, p) -> GoldenNum:
        return p[1] if self.vertical else p[0]

    def line_key(self) -> tuple:
        """Coefficients ``(c, d, e)`` of ``c*x + d*y + e = 0`` (normalized)."""
        if self.vertical:
            return (ONE, ZERO, -self.start[0])
        s = SLOPES[self.slope_class]
        return (s, -ONE, self.start[1] - s * self.start[0])

    def contains(self, p) -> bool:
        c, d, e = self.line_key()
        if sign(c * p[0] + d * p[1] + e) != 0:
            return False
        t = self.param(p)
        return sign(t - self.param(self.start)) >= 0 and sign(self.param(self.end) - t) >= 0

    def point_at(self, t) -> tuple:
        """Point of the carrying line with parameter ``t`` (x, or y if vertical)."""
        t = as_golden(t)
        if self.vertical:
            return (self.start[0], t)
        s = SLOPES[self.slope_class]
        return (t, self.start[1] + s * (t - self.start[0]))


@dataclass(frozen=True)
class TableRow:
    line: int
    lo: GoldenNum
    hi: GoldenNum
    translation: tuple


# -- file io ---------------------------------------------------------------


def _pt(pair):
    return (as_golden(pair[0]), as_golden(pair[1]))


def data_checksum(body: dict) -> str:
    payload = {k: v for k, v in body.items() if k != "checksum"}
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def read_partition_data(path=None) -> dict:
    if path is None:
        path = os.environ.get(ENV_PARTITION)
    if path is None:
        text = resources.files("jrworms").joinpath("data/partition.json").read_text()
    else:
        text = Path(path).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise PartitionError([f"parse error: {exc}"]) from exc


def write_partition_data(body: dict, path) -> str:
    body = dict(body)
    body["checksum"] = data_checksum(body)
    Path(path).write_text(json.dumps(body, indent=1, sort_keys=True) + "\n")
    return body["checksum"]


# -- the partition -----------------------------------------------------------


class Partition:
    """Validated partition; immutable after construction."""

    def __init__(self, atoms, delta_lines, table1, targets, checksum=""):
        self.atoms = tuple(atoms)
        self.delta_lines = tuple(delta_lines)
        self.table1 = tuple(table1)
        self.targets = dict(targets)
        self.checksum = checksum
        self.pieces = tuple((a.label, poly) for a in self.atoms for poly in a.pieces)
        keys = []
        for dl in self.delta_lines:
            k = dl.line_key()
            if k not in keys:
                keys.append(k)
        self.lines = tuple(keys)
        self._line_index = {k: i for i, k in enumerate(keys)}
        self.segment_line = tuple(self._line_index[dl.line_key()] for dl in self.delta_lines)

    @property
    def labels(self) -> tuple:
        return tuple(sorted({a.label for a in self.atoms}))

    def atom(self, label: int) -> Atom:
        for a in self.atoms:
            if a.label == label:
                return a
        raise KeyError(label)

    def lines_by_id(self, line_id: int):
        return [dl for dl in self.delta_lines if dl.id == line_id]

    # arrangement of the full carrying lines, used for exact point location

    @cached_property
    def cells(self):
        """Convex cells of the rectangle cut by every carrying line."""
        rect = [(ZERO, ZERO), (WIDTH, ZERO), (WIDTH, HEIGHT), (ZERO, HEIGHT)]
        cells = [rect]
        for c, d, e in self.lines:
            nxt = []
            for cell in cells:
                for s in (1, -1):
                    part = clip_halfplane(cell, lambda p: (c * p[0] + d * p[1] + e) * s)
                    if len(part) >= 3 and sign(signed_area(part)) > 0:
                        nxt.append(part)
            cells = nxt
        return tuple(tuple(cell) for cell in cells)

    def _signature(self, p, v=None) -> int:
        key = 0
        for i, (c, d, e) in enumerate(self.lines):
            s = sign(c * p[0] + d * p[1] + e)
            if s == 0:
                if v is None:
                    raise ValueError("point lies on a carrying line")
                s = sign(c * v[0] + d * v[1])
            if s > 0:
                key |= 1 << i
        return key

    def _cell_labels(self):
        out = []
        for cell in self.cells:
            g = _centroid(cell)
            hits = [lab for lab, poly in self.pieces if point_in_polygon(g, poly) > 0]
            out.append((cell, g, hits))
        return out

    @cached_property
    def signature_table(self) -> dict:
        """Map from the sign pattern of a cell to its label."""
        table = {}
        for _cell, g, hits in self._cell_labels():
            if len(hits) != 1:
                raise PartitionError([f"cell at {g} covered by {len(hits)} atoms"])
            table[self._signature(g)] = hits[0]
        return table

    # queries

    def locate(self, p):
        """``Boundary(ids)`` if the reduced point is on Delta, else ``Interior(label)``."""
        q = reduce(p)
        ids = sorted({dl.id for dl in self.delta_lines if dl.contains(q)})
        if ids:
            return Boundary(tuple(ids))
        # off Delta every nearby point has the same label, so any tie-break works
        return Interior(self.signature_table[self._signature(q, (ONE, -ONE))])

    def check_direction(self, v):
        vx, vy = as_golden(v[0]), as_golden(v[1])
        for name, s in SLOPES.items():
            par = sign(vx) == 0 if s is None else sign(vy - s * vx) == 0
            if par:
                raise ValueError(f"direction ({vx}, {vy}) is parallel to slope class {name}")
        return vx, vy

    def code_with_direction(self, p, v=(1, -1)) -> int:
        """Label of the atom containing ``p + eps*v`` for all small ``eps > 0``."""
        v = self.check_direction(v)
        q = reduce_directed(p, v)
        return self.signature_table[self._signature(q, v)]

    def normalize_delta_line(self, line_id: int, lo, hi) -> tuple:
        """Normalization-table translation for the piece of Delta-line ``line_id`` over ``[lo, hi]``."""
        lo, hi = as_golden(lo), as_golden(hi)
        for row in self.table1:
            if row.line == line_id and row.lo == lo and row.hi == hi:
                if not self.verify_row(row):
                    raise ValueError(f"table row {row} does not normalize its piece")
                return row.translation
        raise KeyError(f"no normalization-table row for line {line_id} on [{lo}, {hi}]")

    def piece_endpoints(self, line_id: int, lo, hi):
        lo, hi = as_golden(lo), as_golden(hi)
        for dl in self.lines_by_id(line_id):
            a, b = dl.point_at(lo), dl.point_at(hi)
            if dl.contains(a) and dl.contains(b):
                return dl, a, b
        raise ValueError(f"[{lo}, {hi}] is not a piece of Delta-line {line_id}")

    def translation_normalizes(self, line_id, lo, hi, translation) -> bool:
        dl, a, b = self.piece_endpoints(line_id, lo, hi)
        t0, t1 = self.targets[dl.slope_class]
        start = reduce((a[0] + translation[0], a[1] + translation[1]))
        end = (start[0] + b[0] - a[0], start[1] + b[1] - a[1])
        return on_segment(start, t0, t1) and on_segment(end, t0, t1)

    def verify_row(self, row: TableRow) -> bool:
        return self.translation_normalizes(row.line, row.lo, row.hi, row.translation)

    def normalizing_translations(self, line_id, lo, hi, bound: int = 8) -> list:
        """Every ``(a, b)`` with ``|a|, |b| <= bound`` that normalizes the piece."""
        return [(a, b)
                for a in range(-bound, bound + 1)
                for b in range(-bound, bound + 1)
                if self.translation_normalizes(line_id, lo, hi, (a, b))]

    # Delta as a point set

    def segment_in_delta(self, a, b) -> bool:
        """Whether the segment ``ab`` (in R^2) lies in Delta modulo Gamma0."""
        d = (b[0] - a[0], b[1] - a[1])
        covered = []
        for dl in self.delta_lines:
            c, dd, e = dl.line_key()
            if sign(c * d[0] + dd * d[1]) != 0:
                continue
            for k in range(-4, 5):
                for m in range(-2, 3):
                    g = GAMMA0.element(k, m)
                    s0 = (dl.start[0] + g[0], dl.start[1] + g[1])
                    s1 = (dl.end[0] + g[0], dl.end[1] + g[1])
                    if orient(s0, s1, a) != 0:
                        continue
                    lo, hi = _project(s0, a, d), _project(s1, a, d)
                    if lo > hi:
                        lo, hi = hi, lo
                    covered.append((lo, hi))
        covered.sort(key=lambda iv: iv[0])
        reach = ZERO
        for lo, hi in covered:
            if lo > reach:
                break
            if hi > reach:
                reach = hi
            if reach >= ONE:
                return True
        return reach >= ONE

    def horizontal_translates(self, line: DeltaLine, bound: int = 10) -> set:
        """``{a : R0^(a,0)(line) in Delta}`` for ``|a| <= bound``."""
        return {a for a in range(-bound, bound + 1)
                if self.segment_in_delta((line.start[0] + a, line.start[1]),
                                         (line.end[0] + a, line.end[1]))}

    def vertical_translates(self, line: DeltaLine, bound: int = 10) -> set:
        return {b for b in range(-bound, bound + 1)
                if self.segment_in_delta((line.start[0], line.start[1] + b),
                                         (line.end[0], line.end[1] + b))}

    # validation

    def problems(self) -> list:
        out = []
        labels = self.labels
        if labels != tuple(range(11)):
            out.append(f"labels present are {labels}, expected 0..10")
        rect = [(ZERO, ZERO), (WIDTH, ZERO), (WIDTH, HEIGHT), (ZERO, HEIGHT)]
        for lab, poly in self.pieces:
            out.extend(_polygon_problems(lab, poly, rect))
        total = sum((signed_area(poly) for _, poly in self.pieces), ZERO)
        if total != GAMMA0.determinant():
            out.append(f"coverage: total area {total} != {GAMMA0.determinant()}")
        for dl in self.delta_lines:
            out.extend(_line_problems(dl, rect))
        if out:
            return out
        for _cell, g, hits in self._cell_labels():
            if len(hits) == 0:
                out.append(f"coverage: point {g} lies in no atom")
            elif len(hits) > 1:
                out.append(f"disjointness: point {g} lies in atoms {sorted(hits)}")
        for lab, poly in self.pieces:
            for i in range(len(poly)):
                a, b = poly[i], poly[(i + 1) % len(poly)]
                if not (self.segment_in_delta(a, b) or _on_rect_edge(a, b)):
                    out.append(f"atom {lab}: edge {a}-{b} is not on a Delta-line")
        if out:
            return out
        out.extend(self._separation_problems())
        for row in self.table1:
            try:
                ok = self.verify_row(row)
            except ValueError as exc:
                out.append(f"table row {row.line} [{row.lo}, {row.hi}]: {exc}")
                continue
            if not ok:
                out.append(f"table row {row.line} [{row.lo}, {row.hi}] -> {row.translation} fails")
        return out

    def _separation_problems(self) -> list:
        """Each Delta piece must separate two different labels."""
        out = []
        v = (ONE, -ONE - PHI * 3)
        for dl in self.delta_lines:
            cuts = {self_param for self_param in _cut_params(self, dl)}
            ts = sorted(cuts)
            for t0, t1 in zip(ts, ts[1:]):
                m = dl.point_at((t0 + t1) / 2)
                left = self.code_with_direction(m, v)
                right = self.code_with_direction(m, (-v[0], -v[1]))
                if left == right:
                    out.append(f"Delta-line {dl.id} near {m} has label {left} on both sides")
        return out


def _cut_params(part: Partition, dl: DeltaLine):
    yield dl.param(dl.start)
    yield dl.param(dl.end)
    c0, d0, e0 = dl.line_key()
    for c, d, e in part.lines:
        det = c0 * d - d0 * c
        if sign(det) == 0:
            continue
        x = (d0 * e - e0 * d) / det
        y = (e0 * c - c0 * e) / det
        t = dl.param((x, y))
        if dl.param(dl.start) < t < dl.param(dl.end):
            yield t


def _project(p, a, d):
    return ((p[0] - a[0]) * d[0] + (p[1] - a[1]) * d[1]) / (d[0] * d[0] + d[1] * d[1])


def _centroid(poly):
    n = len(poly)
    return (sum((p[0] for p in poly), ZERO) / n, sum((p[1] for p in poly), ZERO) / n)


def _on_rect_edge(a, b) -> bool:
    return ((a[0] == WIDTH and b[0] == WIDTH) or (a[1] == HEIGHT and b[1] == HEIGHT)
            or (a[0] == ZERO and b[0] == ZERO) or (a[1] == ZERO and b[1] == ZERO))


def _polygon_problems(lab, poly, rect) -> list:
    out = []
    if len(poly) < 3:
        return [f"atom {lab}: fewer than 3 vertices"]
    if sign(signed_area(poly)) <= 0:
        out.append(f"atom {lab}: polygon is not counter-clockwise")
    for p in poly:
        if point_in_polygon(p, rect) < 0:
            out.append(f"atom {lab}: vertex {p} outside the fundamental domain")
    n = len(poly)
    for i in range(n):
        a, b = poly[i], poly[(i + 1) % n]
        for j in range(i + 2, n):
            if i == 0 and j == n - 1:
                continue
            c, d = poly[j], poly[(j + 1) % n]
            if _segments_meet(a, b, c, d):
                out.append(f"atom {lab}: polygon is not simple")
                return out
    return out


def _segments_meet(a, b, c, d) -> bool:
    o1, o2 = orient(a, b, c), orient(a, b, d)
    o3, o4 = orient(c, d, a), orient(c, d, b)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    return (on_segment(c, a, b) or on_segment(d, a, b)
            or on_segment(a, c, d) or on_segment(b, c, d))


def _line_problems(dl: DeltaLine, rect) -> list:
    out = []
    if dl.slope_class not in SLOPES:
        return [f"Delta-line {dl.id}: unknown slope class {dl.slope_class!r}"]
    dx, dy = dl.end[0] - dl.start[0], dl.end[1] - dl.start[1]
    s = SLOPES[dl.slope_class]
    if s is None:
        ok = sign(dx) == 0 and sign(dy) > 0
    else:
        ok = sign(dx) > 0 and dy == s * dx
    if not ok:
        out.append(f"Delta-line {dl.id}: endpoints do not match slope class {dl.slope_class}")
    for p in (dl.start, dl.end):
        if point_in_polygon(p, rect) < 0:
            out.append(f"Delta-line {dl.id}: endpoint {p} outside the fundamental domain")
    return out


def partition_from_data(body: dict) -> Partition:
    try:
        grouped = {}
        for rec in body["atoms"]:
            grouped.setdefault(int(rec["label"]), []).append(
                tuple(_pt(v) for v in rec["vertices"]))
        atoms = [Atom(lab, tuple(polys)) for lab, polys in sorted(grouped.items())]
        lines = [DeltaLine(int(rec["id"]), str(rec["slope_class"]),
                           _pt(rec["endpoints"][0]), _pt(rec["endpoints"][1]))
                 for rec in body["delta_lines"]]
        table = [TableRow(int(r["line"]), as_golden(r["lo"]), as_golden(r["hi"]),
                          tuple(int(t) for t in r["translation"]))
                 for r in body["table1"]]
        targets = {k: (_pt(v[0]), _pt(v[1])) for k, v in body["table1_targets"].items()}
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise PartitionError([f"parse error: {exc!r}"]) from exc
    return Partition(atoms, lines, table, targets, body.get("checksum", ""))


def load_partition(path=None, validate: bool = True) -> Partition:
    """Read, parse and validate a partition file (packaged data by default)."""
    body = read_partition_data(path)
    part = partition_from_data(body)
    if validate:
        problems = []
        if body.get("checksum") != data_checksum(body):
            problems.append("checksum mismatch")
        problems.extend(part.problems())
        if problems:
            raise PartitionError(problems)
        part.signature_table  # noqa: B018  (warm the lookup table)
    return part


_DEFAULT = None


def default_partition() -> Partition:
    """The packaged partition, loaded and validated once per process."""
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = load_partition()
    return _DEFAULT
