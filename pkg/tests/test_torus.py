from fractions import Fraction

import pytest
from hypothesis import given

from conftest import points
from jrworms.exactnum import ONE, PHI, ZERO, GoldenNum, sign
from jrworms.torus import (
    GAMMA0, HEIGHT, WIDTH, act, format_point, in_gamma0_plus_z2, parse_point, reduce, reduce_directed,
)


def test_lattice_covolume():
    assert GAMMA0.determinant() == 4 * PHI + 1
    assert WIDTH * HEIGHT == 4 * PHI + 1


@given(points())
def test_reduce_lands_in_fundamental_domain(p):
    q = reduce(p)
    assert sign(q.x) >= 0 and sign(WIDTH - q.x) > 0
    assert sign(q.y) >= 0 and sign(HEIGHT - q.y) > 0


@given(points())
def test_reduce_differs_by_gamma0(p):
    q = reduce(p)
    dy = (p[1] - q.y) / HEIGHT
    assert dy.b == 0 and dy.a.denominator == 1
    dx = (p[0] - q.x - dy.a) / WIDTH
    assert dx.b == 0 and dx.a.denominator == 1


@given(points())
def test_reduce_idempotent(p):
    assert reduce(reduce(p)) == reduce(p)


@given(points())
def test_action_is_a_group_action(p):
    assert act((3, -2), act((-1, 5), p)) == act((2, 3), p)
    assert act((0, 0), p) == reduce(p)


def test_reduce_directed_moves_edges():
    # the top edge is reached through the lattice vector (1, phi + 3)
    q = reduce_directed((ZERO, ZERO), (-1, -1))
    assert q == (ONE, HEIGHT)
    assert reduce_directed((ZERO, ZERO), (-1, 1)) == (WIDTH, ZERO)
    assert reduce_directed((ZERO, ZERO), (1, 1)) == (ZERO, ZERO)
    with pytest.raises(ValueError):
        reduce_directed((ZERO, ZERO), (1, 0))


def test_gamma0_plus_z2_is_z_phi_squared():
    assert in_gamma0_plus_z2((PHI - 1, 3 * PHI))
    assert not in_gamma0_plus_z2((GoldenNum(Fraction(1, 2)), ZERO))
    for k in range(-3, 4):
        for m in range(-3, 4):
            assert in_gamma0_plus_z2(GAMMA0.element(k, m))


def test_point_literals():
    p = parse_point("(1/4*phi + -1/4, 1/4)")
    assert p == (PHI / 4 - Fraction(1, 4), GoldenNum(Fraction(1, 4)))
    assert parse_point(format_point(p)) == p
    with pytest.raises(ValueError):
        parse_point("1, 2")


def test_orbit_of_origin_returns_only_through_lattice():
    seen = {act((a, b), (ZERO, ZERO)) for a in range(-6, 7) for b in range(-6, 7)}
    assert len(seen) == 13 * 13
    assert act((0, 0), (PHI, ONE * 0)) == (ZERO, ZERO)
