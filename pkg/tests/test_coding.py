import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import points
from jrworms.coding import configuration, configuration_and_hits, difference_set, normalize_window, symbolic_pair
from jrworms.exactnum import PHI, ZERO, GoldenNum
from jrworms.tileset import flip_slope0_worm
from jrworms.torus import act
from jrworms.verify import random_point


def test_normalize_window():
    assert normalize_window(3) == (-3, -3, 3, 3)
    assert normalize_window((0, 1, 2, 3)) == (0, 1, 2, 3)
    with pytest.raises(ValueError):
        normalize_window((2, 0, 1, 0))
    with pytest.raises(ValueError):
        normalize_window(-1)


@settings(max_examples=40)
@given(points())
def test_codings_are_valid(p):
    assert configuration(p, (1, -1), 6).is_valid()


@settings(max_examples=20)
@given(points())
def test_shift_equivariance(p):
    x = configuration(p, (1, -1), (-4, -4, 4, 4))
    y = configuration(act((2, -1), p), (1, -1), (-6, -3, 2, 5))
    for (a, b), k in y.items():
        assert x[(a + 2, b - 1)] == k


def test_generic_point_has_equal_resolutions():
    rng = random.Random(5)
    p = random_point(rng)
    xp, xm = symbolic_pair(p, (1, -1), 8)
    _, hits = configuration_and_hits(p, (1, -1), 8)
    assert difference_set(xp, xm) <= hits


def test_slope0_worm_rows():
    p = (PHI * Fraction(3, 10), ZERO)
    xp, xm = symbolic_pair(p, (1, -1), 12)
    diff = difference_set(xp, xm)
    assert diff == {(x, y) for x in range(-12, 13) for y in (0, 1)}
    assert flip_slope0_worm(xp, (0, 1)) == xm
    assert xp.is_valid() and xm.is_valid()


def test_slope0_worm_on_upper_edge():
    p = (PHI / 3, GoldenNum(1))
    xp, xm = symbolic_pair(p, (1, -1), 6)
    assert {y for _, y in difference_set(xp, xm)} == {-1, 0}
    assert flip_slope0_worm(xp, (-1, 0)) == xm


def test_difference_set_requires_same_window():
    a = configuration((ZERO, ZERO), (1, -1), 2)
    b = configuration((ZERO, ZERO), (1, -1), 3)
    with pytest.raises(ValueError):
        difference_set(a, b)
