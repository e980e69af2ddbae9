"""Coding torus points into Jeandel-Rao configurations."""

from __future__ import annotations

from .kernel import scan_window
from .partition import default_partition
from .tileset import Configuration

__all__ = [
    "DEFAULT_DIRECTION",
    "normalize_window",
    "configuration",
    "configuration_and_hits",
    "symbolic_pair",
    "difference_set",
]

DEFAULT_DIRECTION = (1, -1)


def normalize_window(window) -> tuple:
    """``N`` means ``[-N, N]^2``; otherwise a closed ``(x0, y0, x1, y1)``."""
    if isinstance(window, int):
        if window < 0:
            raise ValueError("window radius must be non-negative")
        return (-window, -window, window, window)
    x0, y0, x1, y1 = (int(t) for t in window)
    if x1 < x0 or y1 < y0:
        raise ValueError(f"empty window {window}")
    return (x0, y0, x1, y1)


def _grid(flat, window):
    x0, y0, x1, y1 = window
    w = x1 - x0 + 1
    return [flat[j * w:(j + 1) * w] for j in range(y1 - y0 + 1)]


def configuration_and_hits(p, v=DEFAULT_DIRECTION, window=10, partition=None, backend=None):
    """The coded configuration together with ``{n : R0^n(p) in Delta}``."""
    part = partition or default_partition()
    win = normalize_window(window)
    labels, hits = scan_window(part, p, v, win, backend=backend)
    config = Configuration(win[0], win[1], _grid(labels, win))
    pos = config.positions()
    return config, {n for n, h in zip(pos, hits) if h}


def configuration(p, v=DEFAULT_DIRECTION, window=10, partition=None, backend=None) -> Configuration:
    """Cell ``n`` holds the label of the atom containing ``R0^n(p) + eps*v``."""
    return configuration_and_hits(p, v, window, partition, backend)[0]


def symbolic_pair(p, v=DEFAULT_DIRECTION, window=10, partition=None, backend=None):
    """``(x+, x-)``: the codings of ``p`` along ``v`` and along ``-v``."""
    neg = (-v[0], -v[1])
    return (configuration(p, v, window, partition, backend),
            configuration(p, neg, window, partition, backend))


def difference_set(x: Configuration, y: Configuration) -> set:
    if x.window != y.window:
        raise ValueError(f"window mismatch: {x.window} vs {y.window}")
    return x.differences(y)
