import json

import pytest

from jrworms.exactnum import ONE, PHI, ZERO, GoldenNum, sign
from jrworms.partition import (
    SLOPE_CLASSES, Boundary, Interior, PartitionError, data_checksum, default_partition, load_partition,
    read_partition_data, write_partition_data,
)
from jrworms.torus import HEIGHT, WIDTH


@pytest.fixture(scope="module")
def part():
    return default_partition()


def test_labels_and_area(part):
    assert part.labels == tuple(range(11))
    total = sum((a.area() for a in part.atoms), ZERO)
    assert total == WIDTH * HEIGHT == 4 * PHI + 1


def test_no_problems(part):
    assert part.problems() == []


def test_every_cell_has_one_label(part):
    assert len(part.signature_table) == len(part.cells)
    assert set(part.signature_table.values()) == set(range(11))


def test_delta_lines_have_known_slopes(part):
    assert {dl.slope_class for dl in part.delta_lines} == set(SLOPE_CLASSES)
    for dl in part.delta_lines:
        assert dl.contains(dl.start) and dl.contains(dl.end)


def test_locate_boundary_and_interior(part):
    assert isinstance(part.locate((ZERO, ONE)), Boundary)
    inside = part.locate((PHI / 7, GoldenNum(1) / 3 + PHI / 11))
    assert isinstance(inside, (Interior, Boundary))
    # the origin lies on lines of all four slopes
    origin = part.locate((ZERO, ZERO))
    cls = {dl.slope_class for dl in part.delta_lines if dl.id in origin.lines}
    assert isinstance(origin, Boundary) and cls >= {"0", "inf"}


def test_code_with_direction_matches_locate_inside(part):
    p = (PHI / 7, GoldenNum(1) / 3 + PHI / 11)
    where = part.locate(p)
    if isinstance(where, Interior):
        for v in ((1, -1), (-1, 1), (1, 1), (-1, -1)):
            assert part.code_with_direction(p, v) == where.label


def test_inadmissible_direction(part):
    for v in ((1, 0), (0, 1), (1, PHI), (1, PHI + 1)):
        with pytest.raises(ValueError):
            part.check_direction(v)


def test_table1_rows_all_verify(part):
    assert len(part.table1) >= 40
    for row in part.table1:
        assert part.normalize_delta_line(row.line, row.lo, row.hi) == row.translation
        assert row.translation in part.normalizing_translations(row.line, row.lo, row.hi)


def test_table1_missing_row(part):
    with pytest.raises(KeyError):
        part.normalize_delta_line(999, 0, 1)


def test_strip_width_translates_finite(part):
    for dl in part.delta_lines:
        if dl.slope_class != "0":
            assert len(part.horizontal_translates(dl, 6)) < 13
        else:
            assert len(part.vertical_translates(dl, 6)) < 13


def test_checksum_and_corruption(tmp_path):
    body = read_partition_data()
    assert body["checksum"] == data_checksum(body)
    bad = dict(body)
    bad["atoms"] = body["atoms"][1:]
    path = tmp_path / "bad.json"
    write_partition_data(bad, path)
    with pytest.raises(PartitionError) as err:
        load_partition(path)
    assert err.value.problems
    # a tampered checksum is reported too
    body2 = dict(body, checksum="0" * 64)
    path2 = tmp_path / "tampered.json"
    path2.write_text(json.dumps(body2))
    with pytest.raises(PartitionError, match="checksum"):
        load_partition(path2)


def test_unparseable_file(tmp_path):
    path = tmp_path / "x.json"
    path.write_text("{not json")
    with pytest.raises(PartitionError):
        load_partition(path)


def test_env_override(tmp_path, monkeypatch):
    body = read_partition_data()
    path = tmp_path / "copy.json"
    write_partition_data(body, path)
    monkeypatch.setenv("JRWORMS_PARTITION", str(path))
    assert read_partition_data() == json.loads(path.read_text())


def test_lines_through_delta_are_separating(part):
    # a small step off a Delta segment midpoint changes the label on at least one side pair
    for dl in part.delta_lines:
        mid = ((dl.start[0] + dl.end[0]) / 2, (dl.start[1] + dl.end[1]) / 2)
        if dl.vertical:
            v1, v2 = (1, PHI + 7), (-1, -(PHI + 7))
        else:
            v1, v2 = (ONE, -ONE * 9), (-ONE, ONE * 9)
        if sign(mid[0]) > 0 and sign(WIDTH - mid[0]) > 0 and sign(mid[1]) > 0 and sign(HEIGHT - mid[1]) > 0:
            assert part.code_with_direction(mid, v1) != part.code_with_direction(mid, v2)
