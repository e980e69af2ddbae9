from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from jrworms.exactnum import ONE, PHI, ZERO, GoldenNum
from jrworms.nonexpansive import (
    CANONICAL_DIRECTIONS, GENERIC, ORIGIN_ORBIT, classify_point, margin_excess, orbit_delta, orbit_delta_by_class,
    parallel, predicted_strip, recover_direction, strip_fit, strip_width_sq,
)
from jrworms.worms import worm_point

SLOPES = {"0": ZERO, "inf": None, "phi": -3 * PHI + 2, "phi2": -PHI + Fraction(5, 2)}


def test_canonical_direction_slopes():
    assert CANONICAL_DIRECTIONS["inf"][1] / CANONICAL_DIRECTIONS["inf"][0] == PHI + 3
    for cls in ("0", "phi", "phi2"):
        dx, dy = CANONICAL_DIRECTIONS[cls]
        assert dy / dx == SLOPES[cls]


def test_strip_normals_are_orthogonal_to_directions():
    for cls, d in CANONICAL_DIRECTIONS.items():
        s = predicted_strip(cls)
        assert s.normal[0] * d[0] + s.normal[1] * d[1] == ZERO


def test_predicted_strip_margin():
    s = predicted_strip("0", 1)
    assert s.contains((5, 2)) and not s.contains((5, 3))
    with pytest.raises(ValueError):
        predicted_strip("0", -1)
    with pytest.raises(ValueError):
        predicted_strip("bogus")


def test_strip_fit_simple():
    pts = [(x, y) for x in range(10) for y in range(3)]
    f = strip_fit(pts)
    assert f.direction == (1, 0) and f.width_sq == 4
    assert strip_width_sq(pts, (1, 0)) == 4
    with pytest.raises(ValueError):
        strip_fit([(0, 0)])


@given(st.lists(st.tuples(st.integers(-30, 30), st.integers(-30, 30)), min_size=3, max_size=40, unique=True))
def test_strip_fit_is_minimal_over_hull_edges(pts):
    f = strip_fit(pts)
    for d in ((1, 0), (0, 1), (1, 1), (1, -1), (2, 1), (1, 2)):
        assert f.width_sq <= strip_width_sq(pts, d)
    assert strip_width_sq(pts, f.direction) == f.width_sq


@pytest.mark.parametrize("cls, rho", [("0", Fraction(1, 3)), ("phi", Fraction(2, 7)),
                                      ("phi2", Fraction(3, 5)), ("inf", Fraction(5, 8))])
def test_single_class_points(cls, rho):
    p = worm_point(cls, rho)
    assert classify_point(p, 20) == cls
    hits = orbit_delta(p, 30)
    by = orbit_delta_by_class(p, 30)
    assert by[cls] == hits
    exact = recover_direction(p, hits)
    assert parallel(exact[cls], CANONICAL_DIRECTIONS[cls])
    assert margin_excess(hits, cls) < 11


def test_classify_special_points():
    assert classify_point((ZERO, ZERO)) == ORIGIN_ORBIT
    generic = (PHI / 7 + Fraction(1, 13), PHI / 11 + Fraction(2, 9))
    assert classify_point(generic, 10) in (GENERIC,) + tuple(CANONICAL_DIRECTIONS)


def test_parallel():
    assert parallel((ONE, PHI), (2, 2 * PHI))
    assert not parallel((ONE, PHI), (1, 1))
    assert parallel((GoldenNum(0), ONE), (0, 5))
