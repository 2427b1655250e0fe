import csv
import io
import json
import subprocess
import sys

import pytest

from pakstanley.cli import main
from pakstanley.render import read_towers_ascii, read_towers_svg


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_invert_612():
    code, text = run("invert", "--m", "2", "--label", "6,1,2")
    assert code == 0
    assert json.loads(text) == {"pi": [2, 3, 1], "a": [1, 2, 4], "z": [1, 2, 2, 3, 3], "I": [2, 0, 0]}


def test_invert_39551481():
    code, text = run("invert", "--m", "3", "--label", "3,9,5,5,1,4,8,1")
    assert code == 0
    rec = json.loads(text)
    assert rec["pi"] == [5, 8, 1, 3, 4, 6, 2, 7] and rec["a"] == [1, 1, 1, 3, 3, 3, 4, 7]


def test_invert_accepts_digit_strings():
    assert run("invert", "--m", "2", "--label", "612") == run("invert", "--m", "2", "--label", "6,1,2")


def test_invert_non_label_exits_1():
    assert run("invert", "--m", "2", "--label", "1,1,8")[0] == 1


@pytest.mark.parametrize("label,catalan,prime", [("2,5,1", True, True), ("4,5,1", True, False), ("1,1,8", False, False)])
def test_check(label, catalan, prime):
    code, text = run("check", "--m", "2", "--label", label)
    rec = json.loads(text)
    assert code == 0 and rec["catalan"] is catalan and rec["prime"] is prime
    assert set(rec) == {"catalan", "prime", "parking", "z"}


def test_check_parking():
    assert json.loads(run("check", "--m", "2", "--label", "135")[1])["parking"] is True
    assert json.loads(run("check", "--m", "2", "--label", "163")[1])["parking"] is False


def test_enumerate_jsonl():
    code, text = run("enumerate", "--n", "3", "--k", "2", "--l", "2")
    recs = [json.loads(line) for line in text.splitlines()]
    assert code == 0 and len(recs) == 72
    assert len({tuple(r["label"]) for r in recs}) == 72
    base = next(r for r in recs if r["label"] == [1, 1, 1])
    assert base["t"] == {"1,2": 0, "1,3": 0, "2,3": 0} and base["bounded"] is True
    assert base["chamber"] == [1, 2, 3]


def test_enumerate_csv_to_file(tmp_path):
    path = tmp_path / "regions.csv"
    code, text = run("enumerate", "--n", "3", "--k", "1", "--l", "1", "--format", "csv", "-o", str(path))
    assert code == 0 and text == ""
    rows = list(csv.DictReader(path.open()))
    assert len(rows) == 30
    assert list(rows[0]) == ["t_1_2", "t_1_3", "t_2_3", "label", "chamber", "bounded"]
    assert {r["bounded"] for r in rows} == {"true", "false"}


def test_census_catalan():
    code, text = run("census", "--n", "3", "--k", "2", "--l", "2", "--seed-check")
    rec = json.loads(text)
    assert code == 0
    assert rec["regions"] == 72 and rec["distinct_labels"] == 72 and rec["bijective"] is True
    assert rec["fundamental_regions"] == rec["fuss_catalan"] == 12


def test_census_non_injective():
    rec = json.loads(run("census", "--n", "3", "--k", "2", "--l", "0")[1])
    assert rec["regions"] == 31 and rec["distinct_labels"] == 30 and rec["bijective"] is False


def test_render_ascii():
    code, text = run("render", "--m", "2", "--label", "6,1,2")
    assert code == 0 and read_towers_ascii(text) == (2, 3, 1)


def test_render_plain():
    code, text = run("render", "--m", "2", "--label", "1,2,4", "--plain")
    assert code == 0 and text.splitlines()[1:] == ["2 ####...", "1 ##.....", "0 #......"]


def test_render_plain_unsorted_is_usage_error():
    assert run("render", "--m", "2", "--label", "612", "--plain")[0] == 2


def test_render_svg_file(tmp_path):
    path = tmp_path / "p.svg"
    code, _ = run("render", "--m", "3", "--label", "39551481", "--format", "svg", "-o", str(path))
    assert code == 0 and read_towers_svg(path.read_text()) == (5, 8, 1, 3, 4, 6, 2, 7)


def test_render_non_label():
    assert run("render", "--m", "2", "--label", "118")[0] == 1


@pytest.mark.parametrize("argv", [
    ["enumerate", "--n", "0", "--k", "1", "--l", "1"],
    ["enumerate", "--n", "3", "--k", "-1", "--l", "1"],
    ["invert", "--m", "0", "--label", "1"],
    ["invert", "--m", "2", "--label", "a,b"],
    ["invert", "--m", "2", "--label", "0,1"],
    ["bogus"],
    [],
])
def test_usage_errors(argv, capsys):
    assert run(*argv)[0] == 2


def test_cap_exceeded(monkeypatch):
    monkeypatch.setenv("COXETER_REGION_CAP", "50")
    assert run("enumerate", "--n", "3", "--k", "2", "--l", "2")[0] == 3
    monkeypatch.setenv("COXETER_REGION_CAP", "100")
    assert run("enumerate", "--n", "3", "--k", "1", "--l", "1")[0] == 0


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pakstanley", "invert", "--m", "2", "--label", "612"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["pi"] == [2, 3, 1]
