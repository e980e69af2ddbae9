"""Named verification suites shared by the CLI and the acceptance tests.

Each check returns a CheckResult with a pass count, a total and a short
detail string; ``ok`` is true when every item passed.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction

from .coding import symbolic_pair, configuration, difference_set
from .exactnum import PHI, ZERO, GoldenNum, ceil, floor, sign
from .nonexpansive import (
    CANONICAL_DIRECTIONS,
    margin_excess,
    orbit_delta,
    orbit_delta_by_class,
    parallel,
    predicted_strip,
    recover_direction,
    strip_fit,
)
from .partition import SLOPE_CLASSES, default_partition
from .tileset import flip_slope0_worm
from .torus import in_gamma0_plus_z2
from .worms import (
    ALPHA,
    RotationParams,
    decompose,
    extract_patterns,
    factor_complexity,
    fibonacci_factor_check,
    hv_points,
    mechanical_word,
    pattern_mismatches,
    rotation_word,
    worm_anchors,
    worm_delta_set,
    worm_point,
)

__all__ = ["CheckResult", "SUITES", "run_suite", "SAMPLE_POINTS"]


@dataclass
class CheckResult:
    name: str
    passed: int
    total: int
    detail: str = ""
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.total > 0 and self.passed == self.total

    def line(self) -> str:
        verdict = "PASS" if self.ok else "FAIL"
        extra = f" ({self.detail})" if self.detail else ""
        return f"{verdict} {self.name}: {self.passed}/{self.total} [{self.seconds:.1f}s]{extra}"


def _timed(fn):
    def run(*args, **kw):
        t = time.perf_counter()
        res = fn(*args, **kw)
        res.seconds = time.perf_counter() - t
        return res
    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


# one point on a Delta-line of each slope class
SAMPLE_POINTS = {
    "0": worm_point("0", Fraction(3, 10)),
    "phi": worm_point("phi", Fraction(1, 4)),
    "phi2": worm_point("phi2", Fraction(9, 10)),
    "inf": worm_point("inf", Fraction(1, 5)),
}


def _angle(v) -> float:
    a = math.atan2(float(v[1]), float(v[0]))
    return a % math.pi


@_timed
def check_directions(window=50, points=None) -> CheckResult:
    """Orbit hits of one point per family give exactly the canonical direction."""
    points = points or SAMPLE_POINTS
    passed, notes = 0, []
    for cls, p in sorted(points.items()):
        t = time.perf_counter()
        hits = orbit_delta(p, window)
        fit = strip_fit(hits)
        exact = recover_direction(p, hits)
        canon = CANONICAL_DIRECTIONS[cls]
        good = set(exact) == {cls} and parallel(exact[cls], canon)
        # the hull-edge direction is rational, so it can only be close
        gap = abs(_angle(fit.direction) - _angle(canon))
        gap = min(gap, math.pi - gap)
        good = good and gap < 0.05 and time.perf_counter() - t < 30
        passed += good
        notes.append(f"{cls}:{'ok' if good else 'bad'}")
    return CheckResult("four-slope recovery", passed, len(points), " ".join(notes))


# printed data of the four worked examples: (case, rho, index range, word, H, V, MH, MV)
EXAMPLES = (
    ("phi2", Fraction(9, 10), (-6, 5), "010100101001",
     {(-6, -2), (-4, -1), (-2, 0), (-1, 0), (1, 1), (3, 2), (4, 2)},
     {(-5, -2), (-3, -1), (0, 0), (2, 1), (5, 2)},
     {(-32, -28), (-22, -19), (-12, -10), (-6, -5), (4, 4), (14, 13), (20, 18)},
     {(-26, -23), (-16, -14), (0, 0), (10, 9), (26, 23)}),
    ("phi", Fraction(1, 4), (-6, 5), None, None, None,
     {(8, -23), (5, -14), (3, -9), (0, 0), (-3, 9), (-5, 14), (-8, 23)},
     {(9, -27), (6, -18), (1, -4), (-2, 5), (-7, 19)}),
    ("inf", Fraction(1, 5), (-4, 3), None, None, None,
     {(-3, -14), (-2, -9), (0, 0), (1, 5), (3, 14)},
     {(-4, -18), (-1, -4), (2, 10)}),
    ("0", Fraction(3, 10), (-10, 9), "01010010010100100101", None, None,
     {(-10, 0), (-8, 0), (-6, 0), (-5, 0), (-3, 0), (-2, 0), (0, 0), (2, 0), (3, 0), (5, 0), (6, 0), (8, 0)},
     {(-9, 0), (-7, 0), (-4, 0), (-1, 0), (1, 0), (4, 0), (7, 0), (9, 0)}),
)

# printed words around position 0, as (word left of the dot, word right of it)
EXAMPLE_WORDS = {
    "phi2": ("010100", "101001"),
    "phi": ("01001", "01001"),
    "0": ("0101001001", "01001001010"),
}


@_timed
def check_examples() -> CheckResult:
    """Worked examples: words, H/V sets and pattern anchors, exact."""
    passed = total = 0
    notes = []
    for case, rho, rng, word, H, V, MH, MV in EXAMPLES:
        params = RotationParams(ALPHA, rho)
        got_word = "".join(map(str, mechanical_word(params, rng)))
        checks = []
        if word is not None:
            checks.append(got_word == word)
        if case in EXAMPLE_WORDS:
            left, right = EXAMPLE_WORDS[case]
            w = mechanical_word(params, (-len(left), len(right) - 1))
            checks.append("".join(map(str, w)) == left + right)
        if H is not None:
            h, v = hv_points(params, rng)
            checks += [set(h) == H, set(v) == V]
        p = worm_point(case, rho)
        mh, mv = worm_anchors(case, params, p, rng)
        checks += [set(mh) == MH, set(mv) == MV]
        total += len(checks)
        passed += sum(checks)
        if not all(checks):
            notes.append(case)
    return CheckResult("worked examples", passed, total, "mismatch: " + ",".join(notes) if notes else "")


@_timed
def check_table1(partition=None) -> CheckResult:
    part = partition or default_partition()
    ok = 0
    for row in part.table1:
        try:
            got = part.normalize_delta_line(row.line, row.lo, row.hi)
        except (KeyError, ValueError):
            continue
        ok += got == row.translation
    return CheckResult("table 1 normalization", ok, len(part.table1))


def _rho_values(count):
    """Distinct rationals in (0, 1) by increasing denominator.

    rho = 0 puts the point in the orbit of the origin, where all four
    worms cross; that case has its own check.
    """
    out = []
    q = 2
    while len(out) < count:
        for k in range(1, q):
            if math.gcd(k, q) == 1:
                r = Fraction(k, q)
                if r not in out:
                    out.append(r)
            if len(out) == count:
                break
        q += 1
    return out


@_timed
def check_worm_oracle(window=40, rho_count=20) -> CheckResult:
    """Worm Delta-sets equal brute-force orbit hits."""
    passed = total = 0
    bad = []
    for case in ("phi2", "phi", "inf", "0"):
        for rho in _rho_values(rho_count):
            p = worm_point(case, rho)
            ok = worm_delta_set(case, p, window) == orbit_delta(p, window)
            passed += ok
            total += 1
            if not ok:
                bad.append(f"{case}@{rho}")
    return CheckResult("worm sets vs brute force", passed, total, " ".join(bad[:5]))


def random_point(rng: random.Random, denom=997) -> tuple:
    def coord():
        return GoldenNum(Fraction(rng.randint(-5 * denom, 5 * denom), denom),
                         Fraction(rng.randint(-5 * denom, 5 * denom), denom))
    return (coord(), coord())


@_timed
def check_validity(n_points=10_000, radius=10, seed=1) -> CheckResult:
    """Coded configurations on 21x21 windows have no edge violations."""
    rng = random.Random(seed)
    passed = 0
    for _ in range(n_points):
        p = random_point(rng)
        passed += configuration(p, (1, -1), radius).is_valid()
    return CheckResult("validity of codings", passed, n_points)


@_timed
def check_resolutions(windows=(30, 50), samples=5, stable=Fraction(1, 2)) -> CheckResult:
    """x+ and x- differ inside a stable strip; the slope-0 worm flips."""
    passed = total = 0
    notes = []
    for case in ("phi2", "phi", "inf", "0"):
        for rho in _rho_values(samples):
            p = worm_point(case, rho)
            deltas = []
            ok = True
            for w in windows:
                xp, xm = symbolic_pair(p, (1, -1), w)
                diff = difference_set(xp, xm)
                ok = ok and bool(diff)
                d = margin_excess(diff, case)
                strip = predicted_strip(case, d)
                ok = ok and all(strip.contains(n) for n in diff)
                deltas.append(d)
                if case == "0":
                    ok = ok and flip_slope0_worm(xp, (0, 1)) == xm
            ok = ok and deltas[-1] - deltas[0] < stable
            passed += ok
            total += 1
            if not ok:
                notes.append(f"{case}@{rho}")
    return CheckResult("worm resolutions", passed, total, " ".join(notes))


@_timed
def check_sturmian(n_rho=100, span=1000, word_len=600, max_len=12, seed=2) -> CheckResult:
    rng = random.Random(seed)
    passed = total = 0
    notes = []
    # rotation coding equals the lower mechanical word
    for _ in range(n_rho):
        rho = Fraction(rng.randint(0, 10**6 - 1), 10**6)
        params = RotationParams(ALPHA, rho)
        ok = rotation_word(params, (-span, span)) == mechanical_word(params, (-span, span))
        passed += ok
        total += 1
    if passed < total:
        notes.append("rotation word")
    # complexity n + 1 of B/G words and height words
    half = word_len // 2
    for rho in (Fraction(1, 3), Fraction(9, 10), Fraction(1, 5)):
        params = RotationParams(ALPHA, rho)
        bg = "".join(map(str, mechanical_word(params, (-half, half))))
        dec = decompose("inf", worm_point("inf", rho), None, n_range=(-half, half))
        ys = sorted(a[1] for a in dec.B_anchors + dec.G_anchors)
        heights = "".join(str(b - a) for a, b in zip(ys, ys[1:]))
        for word in (bg, heights):
            ok = all(factor_complexity(word, n) == n + 1 for n in range(1, max_len + 1))
            passed += ok
            total += 1
            if not ok:
                notes.append(f"complexity@{rho}")
        ok = fibonacci_factor_check(heights, max_len)
        passed += ok
        total += 1
        if not ok:
            notes.append(f"fibonacci@{rho}")
    # flipping the resolutions at a crossing swaps one adjacent 4,5
    ok = _flip_swaps_one_pair()
    passed += ok
    total += 1
    if not ok:
        notes.append("flip")
    return CheckResult("sturmian properties", passed, total, " ".join(notes))


def _flip_swaps_one_pair(window=30) -> bool:
    """At rho = 0 the vertical worm crosses the slope-0 worm.

    x+ must follow the upper decomposition and x- the lower one, and their
    height words must differ by one adjacent transposition.
    """
    generic = worm_point("inf", Fraction(1, 3))
    pats = {s: extract_patterns("inf", generic, s, window) for s in "+-"}
    p = worm_point("inf", ZERO)
    xp, xm = symbolic_pair(p, (1, -1), window)
    up = decompose("inf", p, window, "upper")
    lo = decompose("inf", p, window, "lower")
    if pattern_mismatches(xp, up, *pats["+"]) or pattern_mismatches(xm, lo, *pats["-"]):
        return False
    rng = (-window, window)
    params = RotationParams(ALPHA, ZERO)
    a = _heights(worm_anchors("inf", params, None, rng, "upper"))
    b = _heights(worm_anchors("inf", params, None, rng, "lower"))
    diff = [i for i, (s, t) in enumerate(zip(a, b)) if s != t]
    return (len(a) == len(b) and len(diff) == 2 and diff[1] == diff[0] + 1
            and a[diff[0]] == b[diff[1]] and a[diff[1]] == b[diff[0]])


def _heights(anchor_pair):
    ys = sorted(a[1] for a in anchor_pair[0] + anchor_pair[1])
    return [b - a for a, b in zip(ys, ys[1:])]


def _segment_meets(s1, s2, shift):
    """Exact intersection of s1 with s2 - shift, or None."""
    A, B = s1.start, s1.end
    C = (s2.start[0] - shift[0], s2.start[1] - shift[1])
    D = (s2.end[0] - shift[0], s2.end[1] - shift[1])

    def cr(o, p, q):
        return (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0])

    ca, cb = cr(C, D, A), cr(C, D, B)
    if sign(ca - cb) == 0:
        return None
    t = ca / (ca - cb)
    if sign(t) < 0 or sign(1 - t) < 0:
        return None
    P = (A[0] + t * (B[0] - A[0]), A[1] + t * (B[1] - A[1]))
    w = (D[0] - C[0], D[1] - C[1])
    u = (P[0] - C[0]) / w[0] if sign(w[0]) else (P[1] - C[1]) / w[1]
    if sign(u) < 0 or sign(1 - u) < 0:
        return None
    return P


@_timed
def check_eq_slope(bound=10, partition=None) -> CheckResult:
    """Nonparallel Delta-lines meet under a translate only at points of Gamma0 + Z^2."""
    part = partition or default_partition()
    phi = float(PHI)
    segs = part.delta_lines
    fl = [((float(s.start[0]), float(s.start[1])), (float(s.end[0]), float(s.end[1]))) for s in segs]
    found = good = 0

    def crf(o, p, q):
        return (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0])

    for i, s1 in enumerate(segs):
        a, b = fl[i]
        for j, s2 in enumerate(segs):
            if s1.slope_class == s2.slope_class:
                continue
            c, d = fl[j]
            for n1 in range(-bound, bound + 1):
                for n2 in range(-bound, bound + 1):
                    for m in range(math.floor(n2 / (phi + 3)) - 2, math.ceil(n2 / (phi + 3)) + 2):
                        ty = n2 - m * (phi + 3)
                        if abs(ty) > phi + 3.001:
                            continue
                        for k in range(math.floor((n1 - m) / phi) - 2, math.ceil((n1 - m) / phi) + 2):
                            tx = n1 - m - k * phi
                            if abs(tx) > phi + 0.001:
                                continue
                            c2, d2 = (c[0] - tx, c[1] - ty), (d[0] - tx, d[1] - ty)
                            if crf(a, b, c2) * crf(a, b, d2) > 1e-7 or crf(c2, d2, a) * crf(c2, d2, b) > 1e-7:
                                continue
                            shift = (n1 - m - k * PHI, n2 - m * (PHI + 3))
                            P = _segment_meets(s1, s2, shift)
                            if P is None:
                                continue
                            found += 1
                            good += in_gamma0_plus_z2(P)
    return CheckResult("eq-slope coincidences", good, found)


@_timed
def check_origin(window=40) -> CheckResult:
    """Hits of the origin are the four worms at rho = 0 and nothing else."""
    hits = orbit_delta((ZERO, ZERO), window)
    by_class = orbit_delta_by_class((ZERO, ZERO), window)
    # the canonical start point of each case, and n with start = R0^n(0)
    shift = {"phi2": (-1, 0), "phi": (0, 0), "inf": (-1, 0), "0": (0, 0)}
    union = set()
    checks = []
    for case, s in shift.items():
        P = worm_point(case, ZERO)
        win = (-window - s[0], -window - s[1], window - s[0], window - s[1])
        for kind in ("lower", "upper"):
            for x, y in worm_delta_set(case, P, win, kind):
                union.add((x + s[0], y + s[1]))
        checks.append(bool(by_class[case]))
    exact = recover_direction((ZERO, ZERO), hits)
    for cls in SLOPE_CLASSES:
        checks.append(cls in exact and parallel(exact[cls], CANONICAL_DIRECTIONS[cls]))
    checks.append(union == hits)
    return CheckResult("origin orbit", sum(checks), len(checks),
                       f"{len(hits)} hits, union of worms {len(union)}")


# -- exact numbers -------------------------------------------------------------

_SCALE = 10**60
_SQRT5_LO = math.isqrt(5 * _SCALE * _SCALE)
_SQRT5_HI = _SQRT5_LO + 1


def _bracket(x: GoldenNum):
    """Rational interval [lo, hi] containing a + b*phi, from a 60-digit sqrt(5)."""
    a, b = x.a, x.b
    s_lo, s_hi = Fraction(_SQRT5_LO, _SCALE), Fraction(_SQRT5_HI, _SCALE)
    half = Fraction(1, 2)
    if b >= 0:
        return a + b * half * (1 + s_lo), a + b * half * (1 + s_hi)
    return a + b * half * (1 + s_hi), a + b * half * (1 + s_lo)


def _random_golden(rng):
    def q():
        return Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**4))
    return GoldenNum(q(), q())


@_timed
def check_exactnum(n=10_000, seed=3) -> CheckResult:
    rng = random.Random(seed)
    passed = 0
    for _ in range(n):
        x, y, z = (_random_golden(rng) for _ in range(3))
        ok = (x + y) + z == x + (y + z) and x * (y * z) == (x * y) * z
        ok = ok and x * (y + z) == x * y + x * z and x + y == y + x and x * y == y * x
        ok = ok and x - x == ZERO and (not x or x * (1 / x) == 1)
        if x < y and y < z:
            ok = ok and x < z
        lo, hi = _bracket(x)
        fl = floor(x)
        if math.floor(lo) == math.floor(hi):
            ok = ok and fl == math.floor(lo)
        ok = ok and fl <= x < fl + 1 and ceil(x) - 1 < x <= ceil(x)
        s = sign(x)
        if lo > 0:
            ok = ok and s == 1
        elif hi < 0:
            ok = ok and s == -1
        passed += ok
    return CheckResult("exact-number kernel", passed, n)


SUITES = {
    "directions": check_directions,
    "examples": check_examples,
    "table1": check_table1,
    "oracle": check_worm_oracle,
    "validity": check_validity,
    "resolutions": check_resolutions,
    "sturmian": check_sturmian,
    "eq-slope": check_eq_slope,
    "origin": check_origin,
    "exactnum": check_exactnum,
}

QUICK = {
    "oracle": {"rho_count": 5},
    "validity": {"n_points": 500},
    "sturmian": {"n_rho": 10},
    "exactnum": {"n": 1000},
    "eq-slope": {"bound": 4},
}


def run_suite(name: str, quick: bool = False) -> list:
    """Run one suite (or ``"all"``) and return the CheckResults."""
    names = list(SUITES) if name == "all" else [name]
    out = []
    for n in names:
        if n not in SUITES:
            raise KeyError(n)
        out.append(SUITES[n](**(QUICK.get(n, {}) if quick else {})))
    return out
