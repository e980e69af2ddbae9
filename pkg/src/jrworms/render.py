"""Deterministic SVG output for coded tilings and orbit scatter plots."""

from __future__ import annotations

from xml.sax.saxutils import escape

__all__ = ["PALETTE", "tiling_svg", "scatter_svg"]

# fixed colour for each tile label 0..10
PALETTE = (
    "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4",
    "#42d4f4", "#f032e6", "#bfef45", "#fabed4", "#469990",
)
OVERLAY = "#000000"
CELL = 12


def _head(width, height, meta) -> list:
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
    ]
    if meta:
        out.append("<metadata>")
        for k in sorted(meta):
            out.append(f'  <entry key="{escape(str(k))}">{escape(str(meta[k]))}</entry>')
        out.append("</metadata>")
    out.append(f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>')
    return out


def tiling_svg(config, highlight=(), meta=None, labels=True) -> str:
    """One square per cell coloured by tile label; ``highlight`` cells get an overlay.

    Row ``y1`` is drawn at the top so the picture has the usual orientation.
    """
    w, h = config.width * CELL, config.height * CELL
    out = _head(w, h, meta)
    out.append('<g stroke="#ffffff" stroke-width="0.5">')
    for (x, y), k in config.items():
        px = (x - config.x0) * CELL
        py = (config.y1 - y) * CELL
        out.append(f'<rect x="{px}" y="{py}" width="{CELL}" height="{CELL}" fill="{PALETTE[k]}"/>')
    out.append("</g>")
    hl = sorted(n for n in highlight if n in config)
    if hl:
        out.append(f'<g fill="{OVERLAY}" fill-opacity="0.45">')
        for x, y in hl:
            px = (x - config.x0) * CELL
            py = (config.y1 - y) * CELL
            out.append(f'<rect x="{px}" y="{py}" width="{CELL}" height="{CELL}"/>')
        out.append("</g>")
    if labels:
        out.append('<g font-family="monospace" font-size="7" text-anchor="middle" fill="#000000">')
        for (x, y), k in config.items():
            px = (x - config.x0) * CELL + CELL // 2
            py = (config.y1 - y) * CELL + CELL - 3
            out.append(f'<text x="{px}" y="{py}">{k}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def scatter_svg(points, window, groups=None, meta=None) -> str:
    """Dots at integer points of the closed window; optional ``groups`` name -> points get own colours."""
    x0, y0, x1, y1 = window
    step = 8
    w, h = (x1 - x0 + 1) * step, (y1 - y0 + 1) * step
    out = _head(w, h, meta)
    # axes through the origin when visible
    if x0 <= 0 <= x1:
        cx = (0 - x0) * step + step // 2
        out.append(f'<line x1="{cx}" y1="0" x2="{cx}" y2="{h}" stroke="#cccccc" stroke-width="0.5"/>')
    if y0 <= 0 <= y1:
        cy = (y1 - 0) * step + step // 2
        out.append(f'<line x1="0" y1="{cy}" x2="{w}" y2="{cy}" stroke="#cccccc" stroke-width="0.5"/>')
    if groups is None:
        groups = {"": points}
    for i, name in enumerate(sorted(groups)):
        colour = "#000000" if name == "" else PALETTE[(3 * i) % len(PALETTE)]
        out.append(f'<g fill="{colour}" data-group="{escape(name)}">')
        for x, y in sorted(groups[name]):
            if x0 <= x <= x1 and y0 <= y <= y1:
                cx = (x - x0) * step + step // 2
                cy = (y1 - y) * step + step // 2
                out.append(f'<circle cx="{cx}" cy="{cy}" r="2.5"/>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
