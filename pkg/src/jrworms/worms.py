"""Sturmian structure of the Conway worms: rotation words, mechanical
words, B/G pattern anchors and the resulting Delta-sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coding import DEFAULT_DIRECTION, configuration, normalize_window
from .exactnum import ONE, PHI, ZERO, GoldenNum, as_golden, ceil, floor, sign
from .torus import act, reduce

__all__ = [
    "ALPHA",
    "RotationParams",
    "WormCase",
    "WORM_CASES",
    "WormDecomposition",
    "rotation_word",
    "mechanical_word",
    "hv_points",
    "hv_counts",
    "placement_matrix",
    "worm_point",
    "worm_rho",
    "worm_anchors",
    "decompose",
    "decomposition_text",
    "worm_delta_set",
    "extract_patterns",
    "pattern_mismatches",
    "height_sequence",
    "worm_heights",
    "fibonacci_word",
    "fibonacci_factor_check",
    "factor_complexity",
    "return_step",
]

ALPHA = 2 - PHI


@dataclass(frozen=True)
class RotationParams:
    """Rotation ``rho -> rho + alpha (mod 1)`` of the unit interval."""

    alpha: GoldenNum = ALPHA
    rho: GoldenNum = ZERO

    def __post_init__(self):
        a, r = as_golden(self.alpha), as_golden(self.rho)
        if not (sign(a) > 0 and sign(ONE - a) > 0):
            raise ValueError(f"alpha must lie in (0, 1), got {a}")
        if not (sign(r) >= 0 and sign(ONE - r) > 0):
            raise ValueError(f"rho must lie in [0, 1), got {r}")
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "rho", r)


def _irange(rng):
    a, b = rng
    return range(int(a), int(b) + 1)


def rotation_word(params: RotationParams, rng) -> list:
    """``u_n = 0`` if ``T^n(rho)`` lies in ``[0, 1 - alpha)``, else 1, for n in the closed range."""
    out = []
    cut = ONE - params.alpha
    for n in _irange(rng):
        t = params.rho + params.alpha * n
        t = t - floor(t)
        out.append(0 if t < cut else 1)
    return out


def mechanical_word(params: RotationParams, rng, kind: str = "lower") -> list:
    """Lower word ``floor(a(n+1)+r) - floor(an+r)`` or the upper one with ceilings."""
    if kind == "lower":
        f = floor
    elif kind == "upper":
        f = ceil
    else:
        raise ValueError(f"kind must be 'lower' or 'upper', not {kind!r}")
    a, r = params.alpha, params.rho
    return [f(a * (n + 1) + r) - f(a * n + r) for n in _irange(rng)]


def _line_height(params, n, kind):
    t = params.alpha * n + params.rho
    # the upper line is taken as the largest integer below t, so both kinds
    # agree wherever alpha n + rho is not an integer
    return floor(t) if kind == "lower" else ceil(t) - 1


def hv_points(params: RotationParams, rng, kind: str = "lower") -> tuple:
    """Split the mechanical-line points ``(n, floor(alpha n + rho))`` by ``s(n)``.

    With ``kind="upper"`` the points are ``(n, ceil(alpha n + rho) - 1)`` and
    the split uses the upper word.
    """
    word = mechanical_word(params, rng, kind)
    H, V = [], []
    for n, s in zip(_irange(rng), word):
        pt = (n, _line_height(params, n, kind))
        (H if s == 0 else V).append(pt)
    return H, V


def hv_counts(params: RotationParams, n: int, kind: str = "lower") -> tuple:
    """``(k, l)``: horizontal and diagonal steps between the points at 0 and ``n``."""
    if n >= 0:
        word = mechanical_word(params, (0, n - 1), kind) if n else []
        sgn = 1
    else:
        word = mechanical_word(params, (n, -1), kind)
        sgn = -1
    ell = sum(word)
    return sgn * (len(word) - ell), sgn * ell


# -- the four worm cases -----------------------------------------------------


def _pts(*pairs):
    return frozenset(pairs)


@dataclass(frozen=True)
class WormCase:
    slope_class: str
    matrix: tuple
    supp_B: frozenset
    supp_G: frozenset
    b_vec: tuple
    g_vec: tuple
    b_len_sq: GoldenNum
    g_len_sq: GoldenNum
    segment: tuple = field(default=())

    def apply(self, h) -> tuple:
        (a, b), (c, d) = self.matrix
        return (a * h[0] + b * h[1], c * h[0] + d * h[1])


def placement_matrix(b_vec, g_vec) -> tuple:
    """``((b1, g1 - b1), (b2, g2 - b2))``: maps k(1,0) + l(1,1) to k*b + l*g."""
    return ((b_vec[0], g_vec[0] - b_vec[0]), (b_vec[1], g_vec[1] - b_vec[1]))


WORM_CASES = {
    "phi2": WormCase(
        "phi2", ((6, -2), (5, -1)),
        _pts((0, 0), (0, 1), (1, 1), (1, 2), (2, 2), (3, 2), (3, 3), (4, 3), (5, 3), (5, 4), (6, 4)),
        _pts((0, 0), (0, 1), (1, 1), (1, 2), (2, 2), (3, 2), (3, 3), (4, 3)),
        (6, 5), (4, 4), 15 - 9 * PHI, 39 - 24 * PHI,
        ((PHI - 1, ZERO), (ONE, ONE))),
    "phi": WormCase(
        "phi", ((-2, 1), (5, -1)),
        _pts((0, 0), (1, 0), (0, 1), (1, 1), (-1, 2), (0, 2), (-3, 3), (-2, 3), (-1, 3), (-2, 4), (-1, 4)),
        _pts((0, 0), (1, 0), (0, 1), (1, 1), (-2, 2), (-1, 2), (0, 2), (-1, 3), (0, 3)),
        (-2, 5), (-1, 4), 7 - 4 * PHI, 18 - 11 * PHI,
        ((ZERO, ZERO), (PHI - 1, ONE))),
    "inf": WormCase(
        "inf", ((1, 0), (5, -1)),
        _pts((0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (2, 1), (1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)),
        _pts((0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (2, 1), (1, 2), (2, 2), (1, 3), (2, 3), (3, 3)),
        (1, 5), (1, 4), (PHI - 1) ** 2, (2 - PHI) ** 2,
        ((PHI - 1, ZERO), (PHI - 1, ONE))),
    "0": WormCase(
        "0", ((1, 0), (0, 0)),
        _pts((0, 0), (0, 1)), _pts((0, 0), (0, 1)),
        (1, 0), (1, 0), ONE, (PHI - 1) ** 2,
        ((ZERO, ZERO), (PHI, ZERO))),
}


def _case(case) -> WormCase:
    return case if isinstance(case, WormCase) else WORM_CASES[str(case)]


def worm_point(case, rho) -> tuple:
    """The point ``P + rho (Q - P)`` of the case's canonical segment."""
    c = _case(case)
    (px, py), (qx, qy) = c.segment
    r = as_golden(rho)
    return (px + r * (qx - px), py + r * (qy - py))


def worm_rho(case, p) -> GoldenNum:
    """Normalized position of ``p`` on the canonical segment (after reduction)."""
    c = _case(case)
    (px, py), (qx, qy) = c.segment
    q = reduce(p)
    dx, dy = qx - px, qy - py
    rx, ry = q[0] - px, q[1] - py
    if sign(rx * dy - ry * dx) != 0:
        raise ValueError(f"{p} is not on the canonical segment of case {c.slope_class}")
    r = rx / dx if sign(dx) else ry / dy
    if not (sign(r) >= 0 and sign(ONE - r) > 0):
        raise ValueError(f"{p} is not on the canonical segment of case {c.slope_class}")
    return r


def worm_anchors(case, params: RotationParams, p=None, rng=(-10, 10), kind: str = "lower") -> tuple:
    """``(M H, M V)``: starts of the B and G patterns relative to ``p``.

    When ``p`` is given its position on the canonical segment must equal
    ``params.rho``.
    """
    c = _case(case)
    if p is not None and worm_rho(c, p) != params.rho:
        raise ValueError(f"{p} is not at rho={params.rho} on case {c.slope_class}")
    H, V = hv_points(params, rng, kind)
    return [c.apply(h) for h in H], [c.apply(v) for v in V]


@dataclass
class WormDecomposition:
    case: WormCase
    params: RotationParams
    p: tuple
    B_anchors: list
    G_anchors: list
    delta_set: set


def _index_range(window):
    x0, y0, x1, y1 = window
    r = max(abs(x0), abs(y0), abs(x1), abs(y1)) + 8
    return (-r, r)


def decompose(case, p, window=40, kind: str = "lower", n_range=None) -> WormDecomposition:
    """Anchors and Delta-set of the worm through ``p``.

    ``n_range`` fixes the indices of the mechanical line; by default it is
    wide enough to cover ``window``.  ``window=None`` disables clipping.
    """
    c = _case(case)
    win = None if window is None else normalize_window(window)
    if n_range is None:
        if win is None:
            raise ValueError("need a window or an index range")
        n_range = _index_range(win)
    params = RotationParams(ALPHA, worm_rho(c, p))
    B, G = worm_anchors(c, params, None, n_range, kind)
    out = set()
    for anchors, supp in ((B, c.supp_B), (G, c.supp_G)):
        for a in anchors:
            for s in supp:
                n = (a[0] + s[0], a[1] + s[1])
                if win is None or (win[0] <= n[0] <= win[2] and win[1] <= n[1] <= win[3]):
                    out.add(n)
    return WormDecomposition(c, params, p, B, G, out)


def worm_delta_set(case, p, window=40, kind: str = "lower", n_range=None) -> set:
    """Translated supports ``(M H + supp B) u (M V + supp G)`` inside the window."""
    return decompose(case, p, window, kind, n_range).delta_set


def extract_patterns(case, p, sgn: str = "+", window=40, v=DEFAULT_DIRECTION,
                     partition=None, kind: str = "lower") -> tuple:
    """The B and G patterns of ``x+`` (direction ``v``) or ``x-`` (``-v``).

    Every anchor whose translated support fits in the window must show the
    same labels; otherwise ValueError.  Returns two dicts offset -> label.
    """
    c = _case(case)
    win = normalize_window(window)
    if sgn == "-":
        v = (-v[0], -v[1])
    elif sgn != "+":
        raise ValueError("sign must be '+' or '-'")
    x = configuration(p, v, win, partition)
    dec = decompose(c, p, win, kind)
    found = []
    for anchors, supp in ((dec.B_anchors, c.supp_B), (dec.G_anchors, c.supp_G)):
        pattern = None
        for a in anchors:
            cells = [(a[0] + s[0], a[1] + s[1]) for s in supp]
            if not all(n in x for n in cells):
                continue
            here = {s: x[n] for s, n in zip(supp, cells)}
            if pattern is None:
                pattern = here
            elif here != pattern:
                raise ValueError(f"inconsistent pattern at anchor {a}")
        found.append(pattern)
    return tuple(found)


def _check_vertical(c):
    if c.b_vec[1] <= 0 or c.g_vec[1] <= 0:
        raise ValueError(f"case {c.slope_class} has no vertical progression")


def pattern_mismatches(config, decomposition: WormDecomposition, B_pattern, G_pattern) -> list:
    """Anchors (fully inside ``config``) whose restriction differs from the given patterns."""
    out = []
    for anchors, pat in ((decomposition.B_anchors, B_pattern), (decomposition.G_anchors, G_pattern)):
        for a in anchors:
            cells = {s: (a[0] + s[0], a[1] + s[1]) for s in pat}
            if all(n in config for n in cells.values()):
                if any(config[cells[s]] != k for s, k in pat.items()):
                    out.append(a)
    return sorted(out)


def height_sequence(source) -> list:
    """Block heights read bottom to top from consecutive anchor differences.

    ``source`` is a WormDecomposition or an iterable of anchors.
    """
    if isinstance(source, WormDecomposition):
        _check_vertical(source.case)
        anchors = list(source.B_anchors) + list(source.G_anchors)
    else:
        anchors = list(source)
    ys = sorted({a[1] for a in anchors})
    return [b - a for a, b in zip(ys, ys[1:])]


def worm_heights(case, params: RotationParams, rng, kind: str = "lower") -> list:
    c = _case(case)
    _check_vertical(c)
    B, G = worm_anchors(c, params, None, rng, kind)
    return height_sequence(B + G)


def fibonacci_word(length: int) -> str:
    """Prefix of the fixed point of a -> ab, b -> a."""
    w = "a"
    while len(w) < length:
        w = "".join("ab" if ch == "a" else "a" for ch in w)
    return w[:length]


def _as_ab(word) -> str:
    if isinstance(word, str):
        s = word.replace(",", "").replace(" ", "")
    else:
        s = "".join(str(t) for t in word)
    return s.translate(str.maketrans({"5": "a", "4": "b"}))


def fibonacci_factor_check(word, max_len: int) -> bool:
    """Every factor of length <= max_len of ``word`` (over {a,b} or {4,5}) is a Fibonacci factor."""
    s = _as_ab(word)
    if set(s) - {"a", "b"}:
        raise ValueError("word must be over {a, b} or {4, 5}")
    # every factor of length n occurs in a prefix of length about 3n + 10
    ref = fibonacci_word(max(64, 8 * max_len + 16))
    for n in range(1, max_len + 1):
        facs = {ref[i:i + n] for i in range(len(ref) - n + 1)}
        for i in range(len(s) - n + 1):
            if s[i:i + n] not in facs:
                return False
    return True


def factor_complexity(word, n: int) -> int:
    s = word if isinstance(word, str) else "".join(str(t) for t in word)
    return len({s[i:i + n] for i in range(len(s) - n + 1)})


def return_step(case, rho) -> tuple:
    """Translation taking the point at ``rho`` to the next pattern start and the new position."""
    c = _case(case)
    params = RotationParams(ALPHA, rho)
    s0 = mechanical_word(params, (0, 0))[0]
    step = c.b_vec if s0 == 0 else c.g_vec
    q = act(step, worm_point(c, params.rho))
    return step, worm_rho(c, q)


def _fmt_pts(pts):
    return " ".join(f"({x},{y})" for x, y in sorted(pts))


def decomposition_text(dec: WormDecomposition, n_range) -> str:
    """Structured text export: case, rho, word, anchors and heights."""
    word = mechanical_word(dec.params, n_range)
    lines = [
        f"case: {dec.case.slope_class}",
        f"alpha: {dec.params.alpha}",
        f"rho: {dec.params.rho}",
        f"range: {n_range[0]},{n_range[1]}",
        f"matrix: {dec.case.matrix}",
        "word: " + "".join(map(str, word)),
        "B_anchors: " + _fmt_pts(dec.B_anchors),
        "G_anchors: " + _fmt_pts(dec.G_anchors),
    ]
    if dec.case.b_vec[1] > 0 and dec.case.g_vec[1] > 0:
        lines.append("heights: " + ",".join(map(str, height_sequence(dec))))
    lines.append(f"delta_set_size: {len(dec.delta_set)}")
    return "\n".join(lines) + "\n"
