"""Wang tiles, rectangular configurations and the slope-0 worm flip."""

from __future__ import annotations

import hashlib
import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import NamedTuple

__all__ = [
    "WangTile",
    "Violation",
    "Configuration",
    "load_tiles",
    "default_tiles",
    "parse_tiles",
    "format_tiles",
    "tiles_checksum",
    "flip_slope0_worm",
    "FLIP_SLOPE0",
]

ENV_TILES = "JRWORMS_TILES"


class WangTile(NamedTuple):
    east: int
    north: int
    west: int
    south: int


class Violation(NamedTuple):
    """A mismatching edge between cell ``a`` and its right or upper neighbour ``b``."""

    a: tuple
    b: tuple
    kind: str  # "horizontal" or "vertical"


def parse_tiles(text: str) -> tuple:
    tiles = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            idx, colors = line.split(":", 1)
            e, n, w, s = (int(c) for c in colors.split())
            tiles[int(idx)] = WangTile(e, n, w, s)
        except ValueError as exc:
            raise ValueError(f"tile file line {lineno}: {raw!r}") from exc
    if sorted(tiles) != list(range(len(tiles))):
        raise ValueError("tile indices must be 0..n-1")
    return tuple(tiles[i] for i in range(len(tiles)))


def format_tiles(tiles) -> str:
    return "".join(f"{i}: {t.east} {t.north} {t.west} {t.south}\n" for i, t in enumerate(tiles))


def load_tiles(path=None) -> tuple:
    if path is None:
        path = os.environ.get(ENV_TILES)
    if path is None:
        return parse_tiles(resources.files("jrworms").joinpath("data/tiles.txt").read_text())
    return parse_tiles(Path(path).read_text())


def tiles_checksum(tiles) -> str:
    """sha256 of the canonical text form of a tile set."""
    return hashlib.sha256(format_tiles(tiles).encode()).hexdigest()


_DEFAULT = None


def default_tiles() -> tuple:
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = load_tiles()
    return _DEFAULT


@dataclass
class Configuration:
    """Tile indices on the closed window ``[x0, x1] x [y0, y1]`` of Z^2.

    ``rows[j][i]`` holds the tile at ``(x0 + i, y0 + j)``, so row 0 is the
    bottom row.
    """

    x0: int
    y0: int
    rows: list

    @property
    def width(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def height(self) -> int:
        return len(self.rows)

    @property
    def x1(self) -> int:
        return self.x0 + self.width - 1

    @property
    def y1(self) -> int:
        return self.y0 + self.height - 1

    @property
    def window(self) -> tuple:
        return (self.x0, self.y0, self.x1, self.y1)

    def __getitem__(self, n) -> int:
        return self.rows[n[1] - self.y0][n[0] - self.x0]

    def __contains__(self, n) -> bool:
        return self.x0 <= n[0] <= self.x1 and self.y0 <= n[1] <= self.y1

    def positions(self):
        for j in range(self.height):
            for i in range(self.width):
                yield (self.x0 + i, self.y0 + j)

    def items(self):
        for n in self.positions():
            yield n, self[n]

    def violations(self, tiles=None) -> list:
        tiles = default_tiles() if tiles is None else tiles
        out = []
        for (x, y), k in self.items():
            t = tiles[k]
            if x < self.x1 and t.east != tiles[self[(x + 1, y)]].west:
                out.append(Violation((x, y), (x + 1, y), "horizontal"))
            if y < self.y1 and t.north != tiles[self[(x, y + 1)]].south:
                out.append(Violation((x, y), (x, y + 1), "vertical"))
        return out

    def is_valid(self, tiles=None) -> bool:
        return not self.violations(tiles)

    def differences(self, other: "Configuration") -> set:
        """Positions of the common window where the two configurations differ."""
        return {n for n, k in self.items() if n in other and other[n] != k}

    def replace(self, changes: dict) -> "Configuration":
        rows = [list(r) for r in self.rows]
        for (x, y), k in changes.items():
            rows[y - self.y0][x - self.x0] = k
        return Configuration(self.x0, self.y0, rows)

    def to_text(self) -> str:
        """Top row first, one line per row, indices separated by spaces."""
        head = f"# window x0={self.x0} y0={self.y0} x1={self.x1} y1={self.y1}\n"
        return head + "".join(" ".join(map(str, r)) + "\n" for r in reversed(self.rows))

    @classmethod
    def from_text(cls, text: str) -> "Configuration":
        """Inverse of :meth:`to_text`.

        Other comment lines are skipped; parsing stops at a second window
        header so only the first block of a multi-block file is read.
        """
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        start = next((i for i, ln in enumerate(lines) if ln.startswith("# window")), None)
        if start is None:
            raise ValueError("missing window header")
        bounds = dict(tok.split("=") for tok in lines[start].split()[2:])
        x0, y0, x1, y1 = (int(bounds[k]) for k in ("x0", "y0", "x1", "y1"))
        body = []
        for ln in lines[start + 1:]:
            if ln.startswith("# window"):
                break
            if not ln.startswith("#"):
                body.append(ln)
        rows = [[int(t) for t in ln.split()] for ln in reversed(body)]
        if len(rows) != y1 - y0 + 1 or any(len(r) != x1 - x0 + 1 for r in rows):
            raise ValueError("grid does not match the window header")
        return cls(x0, y0, rows)


# Swapping the two rows of a horizontal slope-0 worm: a row of 0s carrying
# 9s on top becomes a row of 6s carrying 1s, and back.
FLIP_SLOPE0 = {0: 6, 6: 0, 9: 1, 1: 9}
_LOWER = {0, 6}
_UPPER = {1, 9}


def flip_slope0_worm(config: Configuration, rows) -> Configuration:
    """Flip the slope-0 worm on the stacked rows ``(r, r + 1)`` of the window.

    The lower row may only hold tiles 0 and 6 and the upper row only 1 and 9;
    anything else raises ValueError.  Both rows have the same colours on
    their outer edges, so validity is preserved.
    """
    lo, hi = rows
    if hi != lo + 1:
        raise ValueError(f"worm rows must be adjacent, got {rows}")
    if not (config.y0 <= lo and hi <= config.y1):
        raise ValueError(f"rows {rows} outside the window {config.window}")
    changes = {}
    for y, allowed in ((lo, _LOWER), (hi, _UPPER)):
        for x in range(config.x0, config.x1 + 1):
            k = config[(x, y)]
            if k not in allowed:
                raise ValueError(f"tile {k} at {(x, y)} is not part of a slope-0 worm")
            changes[(x, y)] = FLIP_SLOPE0[k]
    return config.replace(changes)
