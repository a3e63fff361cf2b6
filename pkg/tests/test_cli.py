import json

import pytest

from hwweights.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_weights_hexagon(capsys):
    code, out, _ = run(capsys, "weights", "A2", "--lambda", "1,1", "--class", "simple", "--depth", "6")
    rep = json.loads(out)
    assert code == 0 and rep["result"]["agree"]
    assert len(rep["result"]["formulas"]["A"]["weights"]) == 7
    assert rep["depth"] == 6 and rep["version"] and rep["job"]["lambda"] == "1,1"


def test_weights_negative_lambda(capsys):
    code, out, _ = run(capsys, "weights", "A1", "--lambda", "-1/2", "--depth", "4")
    assert code == 0 and len(json.loads(out)["result"]["formulas"]["B"]["weights"]) == 5


def test_weights_pverma(capsys):
    code, _, _ = run(capsys, "weights", "A2", "--lambda", "2,-3/2", "--class", "pverma:1", "--depth", "5")
    assert code == 0


def test_hull_verma(capsys):
    code, out, _ = run(capsys, "hull", "A2", "--lambda", "1,1", "--class", "verma")
    rep = json.loads(out)
    assert code == 0
    assert len(rep["v_rep"]["vertices"]) == 1 and len(rep["h_rep"]["inequalities"]) == 2


def test_hull_pverma_and_off(capsys, tmp_path):
    off = tmp_path / "h.off"
    code, out, _ = run(capsys, "hull", "A2", "--lambda", "1,1", "--class", "pverma:1",
                       "--off", str(off))
    assert code == 0 and len(json.loads(out)["v_rep"]["vertices"]) == 2
    assert off.read_text().startswith("OFF")


def test_faces(capsys):
    code, out, _ = run(capsys, "faces", "A2", "--lambda", "1,1", "--class", "simple")
    rep = json.loads(out)
    assert code == 0 and rep["face_count"] == 13 and rep["counts_match"]


def test_character(capsys):
    code, out, _ = run(capsys, "character", "A1", "--lambda", "2", "--depth", "5")
    assert code == 0
    assert [w["mult"] for w in json.loads(out)["character"]["weights"]] == [1, 1, 1]
    code, out, _ = run(capsys, "character", "A2", "--lambda", "1,1", "--depth", "6", "--check-oracle")
    rep = json.loads(out)
    assert code == 0 and rep["oracle"]["agree"]
    assert max(w["mult"] for w in rep["character"]["weights"]) == 2
    code, out, _ = run(capsys, "character", "A1", "--lambda", "0", "--depth", "3")
    assert code == 0 and len(json.loads(out)["character"]["weights"]) == 1


def test_character_hypothesis_exit(capsys):
    code, _, err = run(capsys, "character", "A2", "--lambda", "-1,-1", "--depth", "3")
    assert code == 4 and "S_lambda" in err


@pytest.mark.parametrize("argv", [
    ("verify", "A2", "--samples", "25", "--seed", "7", "--depth", "5"),
    ("verify", "B2", "--samples", "10", "--seed", "1", "--depth", "4"),
    ("verify", "A1xA1", "--samples", "10", "--seed", "2", "--depth", "4"),
])
def test_verify(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and json.loads(out)["sweep"]["ok"]


def test_minmax(capsys):
    code, out, _ = run(capsys, "minmax", "A2", "--lambda", "2,1", "--jprime", "1")
    rep = json.loads(out)
    assert code == 0 and rep["equivalences_hold"] and rep["statement_4"] == "not machine-checked"
    code, _, _ = run(capsys, "minmax", "A2", "--lambda", "-1/2,-5/2", "--jprime", "")
    assert code == 0
    code, _, _ = run(capsys, "minmax", "A2", "--lambda", "1,0", "--jprime", "1")
    assert code == 5


@pytest.mark.parametrize("argv", [
    ("weights", "A2", "--lambda", "1"),
    ("weights", "A2", "--lambda", "1,0.5"),
    ("weights", "Z9", "--lambda", "1"),
    ("weights", "A2", "--lambda", "1,1", "--class", "bogus"),
    ("weights", "A2", "--lambda", "1,-1/2", "--class", "pverma:2"),
    ("frobnicate", "A2"),
    ("weights", "A2"),
])
def test_parse_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 1


def test_cap_exit(capsys, monkeypatch):
    monkeypatch.setenv("HWWEIGHTS_ENUM_CAP", "10")
    assert run(capsys, "hull", "B3", "--lambda", "1,1,1")[0] == 3


def test_text_and_output(capsys, tmp_path):
    dest = tmp_path / "r.txt"
    code, out, _ = run(capsys, "roots", "G2", "--format", "text", "--output", str(dest))
    assert code == 0 and out == ""
    assert "6 positive roots" in dest.read_text()


def test_deterministic_json(capsys):
    argv = ("faces", "B2", "--lambda", "1,-1/2", "--class", "simple")
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b
