"""Command-line interface: ``jrworms {code,orbit-delta,worm,table1,verify}``.

Exit codes: 0 success, 1 usage, 2 data validation, 3 verification failure,
4 no Delta hit in the scanned window (orbit-delta only).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .coding import difference_set, normalize_window, symbolic_pair, configuration
from .exactnum import as_golden, parse
from .nonexpansive import (
    CANONICAL_DIRECTIONS,
    margin_excess,
    orbit_delta,
    orbit_delta_by_class,
    recover_direction,
    strip_fit,
)
from .partition import SLOPE_CLASSES, PartitionError, default_partition, load_partition
from .render import scatter_svg, tiling_svg
from .tileset import default_tiles, load_tiles, tiles_checksum
from .torus import format_point, parse_point
from .worms import WORM_CASES, decompose, decomposition_text, mechanical_word, worm_point

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_VERIFY, EXIT_EMPTY = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _parse_window(text):
    parts = [t for t in text.replace("(", "").replace(")", "").split(",") if t.strip()]
    if len(parts) == 1:
        return normalize_window(int(parts[0]))
    if len(parts) == 4:
        return normalize_window(tuple(int(t) for t in parts))
    raise ValueError(f"window must be N or x0,y0,x1,y1, got {text!r}")


def _parse_direction(text):
    parts = text.replace("(", "").replace(")", "").split(",")
    if len(parts) != 2:
        raise ValueError(f"direction must be 'a,b', got {text!r}")
    return (parse(parts[0]), parse(parts[1]))


def _parse_rho(text):
    try:
        return as_golden(Fraction(text))
    except ValueError:
        return parse(text)


def _parse_range(text):
    a, b = (int(t) for t in text.split(","))
    return (a, b)


class Context:
    """Data files in use and their checksums."""

    def __init__(self, partition_path=None, tiles_path=None):
        if partition_path is None:
            self.partition = default_partition()
        else:
            self.partition = load_partition(partition_path)
        self.tiles = default_tiles() if tiles_path is None else load_tiles(tiles_path)
        if len(self.tiles) != 11:
            raise PartitionError([f"tile set has {len(self.tiles)} tiles, expected 11"])

    @property
    def checksums(self) -> dict:
        return {"partition-sha256": self.partition.checksum, "tiles-sha256": tiles_checksum(self.tiles)}

    def comment_header(self) -> str:
        return "".join(f"# {k}: {v}\n" for k, v in sorted(self.checksums.items()))


def _emit(text: str, out):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _config_json(c):
    return {"window": list(c.window), "rows_bottom_up": c.rows}


# -- commands ------------------------------------------------------------------


def cmd_code(args, ctx: Context) -> int:
    p = parse_point(args.point)
    v = _parse_direction(args.direction)
    win = _parse_window(args.window)
    ctx.partition.check_direction(v)
    meta = dict(ctx.checksums, point=format_point(p), direction=f"({v[0]}, {v[1]})")
    if args.pair:
        xp, xm = symbolic_pair(p, v, win, ctx.partition)
        diff = difference_set(xp, xm)
    else:
        xp = configuration(p, v, win, ctx.partition)
        xm, diff = None, set()
    bad = xp.violations(ctx.tiles) + (xm.violations(ctx.tiles) if xm else [])
    if args.format == "svg":
        text = tiling_svg(xp, diff, meta)
    elif args.format == "json":
        body = {"meta": meta, "plus": _config_json(xp), "violations": len(bad)}
        if xm is not None:
            body["minus"] = _config_json(xm)
            body["difference"] = sorted(list(n) for n in diff)
        text = json.dumps(body, sort_keys=True) + "\n"
    else:
        text = ctx.comment_header() + f"# point: {meta['point']}\n# direction: {meta['direction']}\n"
        text += xp.to_text()
        if xm is not None:
            text += "# minus\n" + xm.to_text()
            text += "# difference: " + " ".join(f"({x},{y})" for x, y in sorted(diff)) + "\n"
    _emit(text, args.out)
    return EXIT_VERIFY if bad else EXIT_OK


def _strip_report(p, hits, win, ctx):
    by_class = orbit_delta_by_class(p, win, ctx.partition)
    exact = recover_direction(p, hits, partition=ctx.partition)
    rows = []
    for cls in SLOPE_CLASSES:
        pts = by_class[cls]
        if not pts:
            continue
        row = {"class": cls, "hits": len(pts), "delta_excess": str(margin_excess(pts, cls)),
               "canonical_direction": [str(t) for t in CANONICAL_DIRECTIONS[cls]]}
        if len(pts) >= 2:
            row["hull_direction"] = list(strip_fit(pts).direction)
        if cls in exact:
            d = exact[cls]
            row["exact_slope"] = "inf" if d[0] == 0 else str(d[1])
        rows.append(row)
    return rows


def cmd_orbit_delta(args, ctx: Context) -> int:
    p = parse_point(args.point)
    win = _parse_window(args.window)
    hits = orbit_delta(p, win, ctx.partition)
    report = _strip_report(p, hits, win, ctx) if hits else []
    meta = dict(ctx.checksums, point=format_point(p), window=",".join(map(str, win)))
    if args.format == "svg":
        groups = orbit_delta_by_class(p, win, ctx.partition) if hits else {}
        text = scatter_svg(hits, win, {k: v for k, v in groups.items() if v} or {"": set()}, meta)
    elif args.format == "json":
        text = json.dumps({"meta": meta, "hits": sorted(list(n) for n in hits), "strips": report},
                          sort_keys=True) + "\n"
    else:
        lines = [ctx.comment_header().rstrip("\n"), f"# point: {meta['point']}", f"# window: {meta['window']}",
                 f"hits: {len(hits)}"]
        for row in report:
            lines.append(" ".join(f"{k}={row[k]}" for k in sorted(row)))
        lines.append("points: " + " ".join(f"({x},{y})" for x, y in sorted(hits)))
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK if hits else EXIT_EMPTY


def cmd_worm(args, ctx: Context) -> int:
    if args.case not in WORM_CASES:
        raise UsageError(f"unknown case {args.case!r}; choose from {sorted(WORM_CASES)}")
    rho = _parse_rho(args.rho)
    rng = _parse_range(args.range)
    p = worm_point(args.case, rho)
    dec = decompose(args.case, p, None, n_range=rng)
    meta = dict(ctx.checksums, case=args.case, rho=str(rho))
    if args.format == "svg":
        xs = [n[0] for n in dec.delta_set] or [0]
        ys = [n[1] for n in dec.delta_set] or [0]
        win = (min(xs) - 2, min(ys) - 2, max(xs) + 2, max(ys) + 2)
        xp = configuration(p, (1, -1), win, ctx.partition)
        text = tiling_svg(xp, dec.delta_set, meta)
    elif args.format == "json":
        body = {
            "meta": meta, "range": list(rng),
            "word": "".join(map(str, mechanical_word(dec.params, rng))),
            "B_anchors": sorted(list(a) for a in dec.B_anchors),
            "G_anchors": sorted(list(a) for a in dec.G_anchors),
            "delta_set": sorted(list(n) for n in dec.delta_set),
        }
        text = json.dumps(body, sort_keys=True) + "\n"
    else:
        text = ctx.comment_header() + decomposition_text(dec, rng)
    _emit(text, args.out)
    return EXIT_OK


def cmd_table1(args, ctx: Context) -> int:
    part = ctx.partition
    lines = [ctx.comment_header().rstrip("\n"), "line  lo  hi  translation  target  verified"]
    bad = 0
    for row in part.table1:
        ok = part.verify_row(row)
        bad += not ok
        dl = next(d for d in part.delta_lines if d.id == row.line)
        a, b = part.targets[dl.slope_class]
        tgt = f"{format_point(a)}-{format_point(b)}"
        lines.append(f"{row.line}  {row.lo}  {row.hi}  {row.translation}  {tgt}  {'yes' if ok else 'NO'}")
    lines.append(f"rows: {len(part.table1)} verified: {len(part.table1) - bad}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_VERIFY if bad else EXIT_OK


def cmd_verify(args, ctx: Context) -> int:
    from .verify import SUITES, run_suite
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from all, {', '.join(SUITES)}")
    results = run_suite(args.suite, quick=args.quick)
    lines = [r.line() for r in results]
    npass = sum(r.ok for r in results)
    lines.append(f"suites passed: {npass}/{len(results)}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if npass == len(results) else EXIT_VERIFY


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="jrworms", description="Jeandel-Rao codings and Conway worms.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--partition", help="partition data file (JSON)")
    common.add_argument("--tiles", help="tile set file")
    common.add_argument("--out", help="write the artifact here instead of stdout")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("code", parents=[common], help="code a torus point into a configuration")
    c.add_argument("--point", required=True, help='e.g. "(1/4*phi + -1/4, 1/4)"')
    c.add_argument("--direction", default="1,-1")
    c.add_argument("--pair", action="store_true", help="code along v and -v and mark differences")
    c.add_argument("--window", default="10", help="N or x0,y0,x1,y1 (closed)")
    c.add_argument("--format", choices=("txt", "json", "svg"), default="txt")
    c.set_defaults(func=cmd_code)

    o = sub.add_parser("orbit-delta", parents=[common], help="orbit points landing on Delta")
    o.add_argument("--point", required=True)
    o.add_argument("--window", default="30")
    o.add_argument("--format", choices=("txt", "json", "svg"), default="txt")
    o.set_defaults(func=cmd_orbit_delta)

    w = sub.add_parser("worm", parents=[common], help="Sturmian decomposition of a worm")
    w.add_argument("--case", required=True, help="0, phi, phi2 or inf")
    w.add_argument("--rho", required=True, help="p/q or a golden literal in [0, 1)")
    w.add_argument("--range", default="-10,10", help="index range a,b of the mechanical word")
    w.add_argument("--format", choices=("txt", "json", "svg"), default="txt")
    w.set_defaults(func=cmd_worm)

    t = sub.add_parser("table1", parents=[common], help="print and check the Delta-line normalizations")
    t.set_defaults(func=cmd_table1)

    v = sub.add_parser("verify", parents=[common], help="run named verification suites")
    v.add_argument("suite", nargs="?", default="all")
    v.add_argument("--quick", action="store_true", help="smaller sample sizes")
    v.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        ctx = Context(args.partition, args.tiles)
    except (PartitionError, OSError, ValueError) as exc:
        print(f"jrworms: data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    try:
        return args.func(args, ctx)
    except (UsageError, ValueError, KeyError) as exc:
        print(f"jrworms: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
