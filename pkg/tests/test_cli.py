import json

from tropicount.cli import main


def test_census_table(capsys):
    assert main(["census", "--delta", "2"]) == 0
    out = capsys.readouterr().out
    assert "total: plans 39, complex 214, real >= 58" in out


def test_census_json(capsys):
    assert main(["census", "--delta", "1", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["totals"]["complex"] == 32


def test_census_bad_delta(capsys):
    assert main(["census", "--delta", "5"]) == 2
    assert "error" in capsys.readouterr().err


def test_floors(capsys):
    assert main(["floors", "--degree", "2", "--germs", "1"]) == 0
    out = capsys.readouterr().out
    assert "21_4" in out and "through 4 points" in out
    assert main(["floors", "--degree", "1", "--germs", "2"]) == 2


def test_render(tmp_path, capsys):
    assert main(["render", "--plan", "d2-31-01", "--out", str(tmp_path)]) == 0
    assert len(list(tmp_path.glob("*.svg"))) == 3
    assert main(["render", "--plan", "nope", "--out", str(tmp_path)]) == 2


def test_realize(capsys):
    assert main(["realize", "--plan", "d2-31-01"]) == 0
    assert "pass" in capsys.readouterr().out
    assert main(["realize", "--plan", "d2-31-01", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["passed"]
    assert main(["realize", "--plan", "d2-21-05"]) == 2
    assert main(["realize", "--plan", "d2-22-13"]) == 1
