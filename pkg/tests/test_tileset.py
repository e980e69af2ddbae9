import pytest
from hypothesis import given, strategies as st

from jrworms.tileset import (
    FLIP_SLOPE0, Configuration, default_tiles, flip_slope0_worm, format_tiles, parse_tiles,
    tiles_checksum,
)

TILES = default_tiles()


def test_eleven_tiles_roundtrip():
    assert len(TILES) == 11
    assert parse_tiles(format_tiles(TILES)) == TILES
    assert len(tiles_checksum(TILES)) == 64


def test_parse_errors():
    with pytest.raises(ValueError):
        parse_tiles("0: 1 2 3\n")
    with pytest.raises(ValueError):
        parse_tiles("1: 1 2 3 4\n")


def test_row_of_zeros_is_valid():
    c = Configuration(0, 0, [[0] * 20])
    assert c.is_valid()


def test_only_tile_9_fits_on_tile_0():
    above0 = [k for k, t in enumerate(TILES) if t.south == TILES[0].north]
    assert above0 == [9]
    below1 = [k for k, t in enumerate(TILES) if t.north == TILES[1].south]
    assert below1 == [6]


def test_violations_reported():
    c = Configuration(0, 0, [[0, 2]])
    assert not c.is_valid()
    v = c.violations()
    assert v[0].kind == "horizontal" and v[0].a == (0, 0)


def test_text_roundtrip():
    c = Configuration(-2, 3, [[0, 0], [9, 9], [1, 1]])
    assert Configuration.from_text(c.to_text()) == c
    assert Configuration.from_text("# note\n" + c.to_text() + "# window x0=0 y0=0 x1=0 y1=0\n5\n") == c
    with pytest.raises(ValueError):
        Configuration.from_text("0 0\n")


def test_flip_worm_fragment():
    c = Configuration(0, 0, [[0] * 6, [9] * 6])
    f = flip_slope0_worm(c, (0, 1))
    assert f.rows == [[6] * 6, [1] * 6]
    assert c.is_valid() and f.is_valid()


@given(st.lists(st.sampled_from([0, 6]), min_size=1, max_size=12), st.data())
def test_flip_is_involution(lower, data):
    upper = [data.draw(st.sampled_from([1, 9])) for _ in lower]
    c = Configuration(0, 0, [lower, upper])
    assert flip_slope0_worm(flip_slope0_worm(c, (0, 1)), (0, 1)) == c


def test_flip_rejects_foreign_tiles():
    c = Configuration(0, 0, [[0, 2], [9, 9]])
    with pytest.raises(ValueError):
        flip_slope0_worm(c, (0, 1))
    with pytest.raises(ValueError):
        flip_slope0_worm(c, (0, 2))


def test_flip_keeps_outer_edges():
    assert all(FLIP_SLOPE0[FLIP_SLOPE0[k]] == k for k in FLIP_SLOPE0)
    # both two-row strips have the same colours below and above
    assert TILES[0].south == TILES[6].south
    assert TILES[9].north == TILES[1].north
    for k in (0, 6, 9, 1):
        assert TILES[k].east == TILES[k].west
