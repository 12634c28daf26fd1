import io
import json
import subprocess
import sys

import pytest

from macvogan.cli import run
from macvogan.tame import make_example1, make_example2


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_census_gl_json():
    code, out, _ = call("census", "--group", "gl", "--n", "2", "--q", "3")
    assert code == 0
    rec = json.loads(out)
    assert rec["total"] == 8 and len(rec["classes"]) == 8
    assert out.endswith("\n")


def test_census_sl_totals():
    code, out, _ = call("census", "--group", "sl", "--n", "2", "--q", "3")
    assert code == 0 and json.loads(out)["total"] == 7
    code, out, _ = call("census", "--group", "sl", "--n", "2", "--q", "5", "--format", "tsv")
    assert code == 0
    assert out.splitlines()[-1] == "# total=9"


def test_output_is_byte_identical_across_runs():
    a = call("fibers", "--n", "3", "--q", "3")[1]
    b = call("fibers", "--n", "3", "--q", "3")[1]
    assert a == b


def test_fibers_single_class(tmp_path):
    path = tmp_path / "cls.json"
    path.write_text(json.dumps({"q": 5, "entries": [{"d": 1, "orbit": 0, "partition": [1]},
                                                    {"d": 1, "orbit": 2, "partition": [1]}]}))
    code, out, _ = call("fibers", "--n", "2", "--q", "5", "--class", str(path))
    assert code == 0
    rec = json.loads(out)
    assert rec["total"] == 2


def test_fibers_class_round_trip(tmp_path):
    code, out, _ = call("census", "--group", "gl", "--n", "2", "--q", "5")
    for obj in json.loads(out)["classes"]:
        path = tmp_path / "c.json"
        path.write_text(json.dumps(obj))
        code, out2, _ = call("fibers", "--n", "2", "--q", "5", "--class", str(path))
        assert code == 0
        (cls,) = json.loads(out2)["classes"]
        assert len(cls["fiber"]) == cls["stab_order"]


def test_packet_example1(tmp_path):
    path = tmp_path / "p.json"
    path.write_text(make_example1(3, 2).to_json())
    code, out, _ = call("packet", "--param", str(path))
    assert code == 0
    rec = json.loads(out)
    assert rec["l_packet_size"] == 2
    assert rec["iota_hat"] == {"injective": True, "surjective": False, "kernel_order": 1, "image_order": 1}
    heads = sorted(len(m["head"]) for m in rec["members"])
    assert heads == [0, 1]
    assert rec["compatibility"] and rec["finalcomp"]


def test_packet_example2_tsv(tmp_path):
    path = tmp_path / "p.json"
    path.write_text(make_example2(5, 4, 2).to_json())
    code, out, _ = call("packet", "--param", str(path), "--format", "tsv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "psi\thead"
    assert len(lines) == 2
    assert lines[1].split("\t")[1].count(";") == 1


def test_example_reports():
    code, out, _ = call("example", "--which", "surjectivity", "--n", "3", "--q", "2")
    assert code == 0
    assert "l_packet_size: 3" in out
    assert "iota_hat injective=true surjective=false" in out
    code, out, _ = call("example", "--which", "injectivity", "--n", "4", "--q", "5", "--e", "4")
    assert "mv_fiber_size: 4" in out
    assert "component_group_inertial: Z/4" in out
    assert "kernel_order=4" in out


@pytest.mark.parametrize(
    "argv",
    [
        ("census", "--group", "gl", "--n", "2", "--q", "6"),
        ("census", "--group", "gl", "--n", "0", "--q", "3"),
        ("census", "--group", "pgl", "--n", "2", "--q", "3"),
        ("example", "--which", "injectivity", "--n", "3", "--q", "2"),
        ("example", "--which", "injectivity", "--n", "4", "--q", "5", "--e", "3"),
        ("packet", "--param", "/nonexistent.json"),
        ("verify", "--suite", "bogus", "--n", "2", "--q", "3"),
    ],
)
def test_usage_errors_exit_2(argv):
    code, out, err = call(*argv)
    assert code == 2
    assert out == ""
    assert err


def test_malformed_parameter(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"q": 3, "blocks": [{"d": 2, "orbit": 0, "u": "0/1", "length": 1}]}')
    assert call("packet", "--param", str(path))[0] == 2


def test_verify_exit_zero():
    code, out, _ = call("verify", "--suite", "all", "--n", "2", "--q", "3")
    assert code == 0
    assert "FAIL" not in out


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "macvogan", "census", "--group", "gl", "--n", "1", "--q", "5", "--format", "tsv"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[-1] == "# total=4"
