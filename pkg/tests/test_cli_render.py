import json
import subprocess
import sys

import pytest

from jrworms.cli import main
from jrworms.coding import configuration
from jrworms.exactnum import ZERO
from jrworms.partition import read_partition_data
from jrworms.render import scatter_svg, tiling_svg
from jrworms.tileset import Configuration


def run(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_tiling_svg_deterministic():
    c = configuration((ZERO, ZERO), (1, -1), 3)
    a = tiling_svg(c, {(0, 0)}, {"k": "v"})
    assert a == tiling_svg(c, {(0, 0)}, {"k": "v"})
    assert a.startswith("<?xml") and a.count("<rect") == 1 + 49 + 1
    assert scatter_svg({(0, 0), (1, 2)}, (-2, -2, 2, 2)).count("<circle") == 2


def test_code_txt_roundtrip(capsys, tmp_path):
    out = tmp_path / "c.txt"
    code, _, _ = run(["code", "--point", "(1/4*phi + -1/4, 1/4)", "--window", "5", "--out", str(out)], capsys)
    assert code == 0
    text = out.read_text()
    assert "partition-sha256" in text and "tiles-sha256" in text
    c = Configuration.from_text(text)
    assert c.window == (-5, -5, 5, 5) and c.is_valid()


def test_code_pair_svg_is_byte_identical(capsys, tmp_path):
    paths = [tmp_path / "a.svg", tmp_path / "b.svg"]
    for p in paths:
        assert run(["code", "--point", "(0,0)", "--pair", "--window", "8", "--format", "svg", "--out", str(p)],
                   capsys)[0] == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()
    assert "fill-opacity" in paths[0].read_text()


def test_code_json_pair(capsys):
    code, out, _ = run(["code", "--point", "(1/4*phi + -1/4, 1/4)", "--pair", "--window", "6",
                        "--format", "json"], capsys)
    body = json.loads(out)
    assert code == 0 and body["difference"] and body["violations"] == 0
    assert body["meta"]["partition-sha256"]


def test_code_bad_direction(capsys):
    code, _, err = run(["code", "--point", "(0,0)", "--direction", "1,0"], capsys)
    assert code == 1 and "parallel" in err


def test_usage_errors(capsys):
    assert run(["code", "--point", "nonsense"], capsys)[0] == 1
    assert run(["frobnicate"], capsys)[0] == 1
    assert run(["worm", "--case", "zz", "--rho", "1/2"], capsys)[0] == 1
    assert run(["verify", "nope"], capsys)[0] == 1


def test_orbit_delta_single_strip(capsys):
    code, out, _ = run(["orbit-delta", "--point", "(1/4*phi + -1/4, 1/4)", "--window", "30"], capsys)
    assert code == 0
    assert "class=phi " in out and "exact_slope=2 + -3*phi" in out
    assert "class=0 " not in out and "class=inf " not in out


def test_orbit_delta_origin_four_strips(capsys):
    code, out, _ = run(["orbit-delta", "--point", "(0,0)", "--window", "25", "--format", "json"], capsys)
    body = json.loads(out)
    assert code == 0 and {r["class"] for r in body["strips"]} == {"0", "phi", "phi2", "inf"}


def test_orbit_delta_none_found(capsys):
    code, out, _ = run(["orbit-delta", "--point", "(1/7*phi + 1/13, 1/11*phi + 2/9)", "--window", "1",
                        "--format", "svg"], capsys)
    assert code == 4 and "<circle" not in out


def test_worm_command(capsys):
    code, out, _ = run(["worm", "--case", "phi2", "--rho", "9/10", "--range=-6,5"], capsys)
    assert code == 0
    assert "B_anchors: (-32,-28) (-22,-19) (-12,-10) (-6,-5) (4,4) (14,13) (20,18)" in out
    assert "G_anchors: (-26,-23) (-16,-14) (0,0) (10,9) (26,23)" in out
    code, out, _ = run(["worm", "--case", "0", "--rho", "3/10", "--format", "svg"], capsys)
    assert code == 0 and "<svg" in out


def test_table1_command(capsys):
    code, out, _ = run(["table1"], capsys)
    assert code == 0 and "rows: 42 verified: 42" in out


def test_data_validation_exit(capsys, tmp_path):
    body = read_partition_data()
    body["atoms"] = body["atoms"][:3]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(body))
    assert run(["table1", "--partition", str(bad)], capsys)[0] == 2
    tiles = tmp_path / "tiles.txt"
    tiles.write_text("0: 1 1 1 1\n")
    assert run(["table1", "--tiles", str(tiles)], capsys)[0] == 2


def test_verify_quick_suite(capsys):
    code, out, _ = run(["verify", "examples"], capsys)
    assert code == 0 and "PASS worked examples" in out


@pytest.mark.slow
def test_console_script():
    out = subprocess.run([sys.executable, "-m", "jrworms.cli", "--version"], capture_output=True, text=True)
    assert out.returncode == 0 and "jrworms" in out.stdout
