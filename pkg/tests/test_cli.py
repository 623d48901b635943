import json

import pytest

from PyTidyKoszul.cli import EXIT_INCONCLUSIVE, EXIT_OK, EXIT_USAGE, EXIT_WITNESS, load_ideal, main

IDEAL_FILE = """# the remark ideal
vars: x1, x2, x3
field: QQ
x1*x3 - x2^2
x2*x3
x3^2
"""

SQUAREFREE_FILE = """vars: x, y, z
field: QQ
x*y
y*z
x*z
"""


def _report(path):
    with open(path, encoding="utf-8") as f:
        return json.load(f)


def test_list_checks(capsys):
    assert main(["verify-paper", "--list"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "clebsch" in out
    assert "severi-cubic-surface" in out


def test_gb_from_a_file(tmp_path):
    source = tmp_path / "remark.ideal"
    source.write_text(IDEAL_FILE)
    out = tmp_path / "gb.json"
    code = main(["gb", "--ideal", str(source), "--order", "revlex:x3,x1,x2", "--out", str(out)])
    assert code == EXIT_OK
    report = _report(out)
    assert report["schema"] == 1
    assert report["command"] == "gb"
    assert report["inputs"]["ideal"] == "remark.ideal"
    assert report["result"]["order"] == "revlex:x3,x1,x2"
    assert "x2^3" in report["result"]["basis"]
    assert report["result"]["hilbert_function"] == [1, 3, 3, 3, 3]


def test_file_field_override(tmp_path):
    source = tmp_path / "remark.ideal"
    source.write_text(IDEAL_FILE)
    assert load_ideal(str(source), "GF(5)").field == "GF(5)"
    assert load_ideal(str(source)).field == "QQ"


def test_koszul_exit_codes(tmp_path):
    out = tmp_path / "k.json"
    assert main(["koszul", "--ideal", "clebsch", "--out", str(out)]) == EXIT_OK
    report = _report(out)
    assert report["verdicts"] == {"strongly_koszul": "certified"}
    assert report["result"]["pairs_checked"] == 32

    assert main(["koszul", "--ideal", "remark", "--mode", "sample:4", "--out", str(out)]) == EXIT_INCONCLUSIVE
    assert _report(out)["seed"] == 0


def test_universal_witness_exit_code(tmp_path):
    out = tmp_path / "u.json"
    assert main(["universal", "--ideal", "gallery:remark", "--out", str(out)]) == EXIT_WITNESS
    report = _report(out)
    assert report["witnesses"]["universal"]["reading"] == "x2 < x1 < x3"


def test_universal_symmetry_flag(tmp_path):
    source = tmp_path / "edges.ideal"
    source.write_text(SQUAREFREE_FILE)
    out = tmp_path / "u.json"
    code = main(["universal", "--ideal", str(source), "--symmetry", "y,z,x", "--symmetry", "y,x,z",
                 "--out", str(out)])
    assert code == EXIT_OK
    result = _report(out)["result"]
    assert result["orders_checked"] == 1
    assert result["symmetry_group_size"] == 6

    assert main(["universal", "--ideal", "remark", "--symmetry", "x2,x3,x1", "--out", str(out)]) == EXIT_USAGE
    assert main(["universal", "--ideal", "remark", "--symmetry", "x2,x9,x1", "--out", str(out)]) == EXIT_USAGE


def test_obstruction_and_lines(tmp_path):
    out = tmp_path / "o.json"
    assert main(["obstruction", "--ideal", "clebsch", "--out", str(out)]) == EXIT_OK
    assert main(["lines", "--out", str(out)]) == EXIT_OK
    assert main(["lines", "--drop-plane", "0", "--out", str(out)]) == EXIT_WITNESS
    assert main(["lines", "--lines", "a1,a2,c34,b5", "--out", str(out)]) == EXIT_OK
    assert _report(out)["result"]["noncoplanar_pair"] == ["a1", "a2"]


def test_apolar_from_the_gallery(tmp_path):
    out = tmp_path / "a.json"
    assert main(["apolar", "--dual", "minors:2x2", "--out", str(out)]) == EXIT_OK
    result = _report(out)["result"]
    assert result["hilbert_function"] == [1, 4, 1, 0]
    assert result["module_dimensions"] == [1, 4, 1]


def test_unknown_filter_runs_nothing(tmp_path):
    out = tmp_path / "v.json"
    assert main(["verify-paper", "--filter", "no-such-check", "--out", str(out)]) == EXIT_OK
    assert _report(out)["verdicts"] == {}


@pytest.mark.parametrize("argv", [
    [],
    ["gb"],
    ["frobnicate"],
    ["koszul", "--ideal", "nonsense"],
    ["koszul", "--ideal", "remark", "--mode", "sample:0"],
    ["gb", "--ideal", "remark", "--field", "GF(9)"],
    ["koszul", "--ideal", "clebsch", "--cap", "3"],
])
def test_usage_errors(argv, capsys):
    assert main(argv) == EXIT_USAGE


def test_change_command(tmp_path):
    source = tmp_path / "remark.ideal"
    source.write_text(IDEAL_FILE)
    change = tmp_path / "swap.change"
    change.write_text("x1 -> x3\nx3 -> x1\n")
    out = tmp_path / "c.json"
    assert main(["change", "--ideal", str(source), "--change", str(change), "--out", str(out)]) == EXIT_OK
    result = _report(out)["result"]
    assert set(result["basis"]) == {"x1^2", "x1*x2", "x2^2 - x1*x3"}
    assert result["is_quadratic"]

    change.write_text("x1 -> x2\n")
    assert main(["change", "--ideal", str(source), "--change", str(change), "--out", str(out)]) == EXIT_USAGE
