from __future__ import annotations

import json

import pytest

from lozenge_app.main import build_parser, main
from lozenge_core.codec import domain_to_json
from lozenge_core.io import save_json

from conftest import BUTTERFLY, dumbbell_domain


def _lines(text):
    return [x for x in text.splitlines() if x.strip()]


def test_parser_requires_a_domain():
    with pytest.raises(SystemExit):
        build_parser().parse_args(["count"])
    with pytest.raises(SystemExit):
        build_parser().parse_args(["count", "--hexagon", "1,1,1", "--contour", "abAB"])


def test_check(capsys):
    assert main(["check", "--hexagon", "2,2,2"]) == 0
    assert capsys.readouterr().out.strip() == "tileable"
    assert main(["check", "--contour", BUTTERFLY]) == 1
    assert capsys.readouterr().out.strip() == "untileable"


def test_count(capsys):
    assert main(["count", "--hexagon", "2,2,2"]) == 0
    assert capsys.readouterr().out.strip() == "20"
    assert main(["count", "--contour", "aCbAcB", "--start", "3,-1"]) == 0
    assert capsys.readouterr().out.strip() == "2"


@pytest.mark.parametrize(
    "argv",
    [
        ["count", "--contour", "xyz"],
        ["count", "--contour", "ab"],
        ["count", "--hexagon", "1,1"],
        ["count", "--hexagon", "0,1,1"],
        ["count", "--contour", "abAB", "--start", "nope"],
        ["count", "--hexagon", "1,1,1", "--start", "1,1"],
        ["partitions", "--limit", "1,2"],
    ],
)
def test_input_errors_exit_2(argv, capsys):
    assert main(argv) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_untileable_exit_1(capsys):
    assert main(["enumerate", "--contour", "abc"]) == 1
    assert "untileable" in capsys.readouterr().err


def test_min_and_max(capsys):
    assert main(["min", "--hexagon", "1,1,1", "--format", "height"]) == 0
    heights = json.loads(capsys.readouterr().out)
    assert heights["[1,1]"] == -1
    assert main(["max", "--hexagon", "1,1,1"]) == 0
    tiling = json.loads(capsys.readouterr().out)
    assert len(tiling["lozenges"]) == 3
    assert main(["min", "--hexagon", "1,1,1", "--format", "ascii"]) == 0
    assert capsys.readouterr().out.strip()


def test_enumerate_lines_and_stats(capsys):
    assert main(["enumerate", "--hexagon", "2,2,1", "--stats"]) == 0
    captured = capsys.readouterr()
    tilings = [json.loads(x) for x in _lines(captured.out)]
    assert len(tilings) == 6
    assert len({json.dumps(t, sort_keys=True) for t in tilings}) == 6
    stats = json.loads(_lines(captured.err)[-1])
    assert stats["emitted"] == 6
    assert stats["duplicates"] == 0


def test_enumerate_heights_with_threads(capsys):
    assert main(["enumerate", "--hexagon", "2,1,1", "--format", "height", "--jobs", "2"]) == 0
    assert len(_lines(capsys.readouterr().out)) == 3


def test_enumerate_dot_and_lattice(capsys):
    assert main(["enumerate", "--hexagon", "1,1,1", "--lattice", "dot"]) == 0
    dot = capsys.readouterr().out
    assert dot.startswith("digraph tilings {")
    assert dot.count("->") == 1
    assert main(["lattice", "--hexagon", "2,2,2", "--no-ranks"]) == 0
    dot = capsys.readouterr().out
    assert "\\nr=" not in dot
    assert 'n0 [label="0"];' in dot
    assert dot.count("[label=") == 20


def test_domain_file(tmp_path, capsys):
    path = tmp_path / "dumbbell.json"
    save_json(domain_to_json(dumbbell_domain()), path)
    assert main(["count", "--domain", str(path)]) == 0
    assert capsys.readouterr().out.strip() == "4"
    assert main(["fracture", "--domain", str(path)]) == 0
    zones = [json.loads(x) for x in _lines(capsys.readouterr().out)]
    assert sorted(z["kind"] for z in zones) == ["fertile", "fertile", "frozen", "frozen"]


def test_missing_domain_file(tmp_path, capsys):
    assert main(["count", "--domain", str(tmp_path / "nope.json")]) == 2


def test_seeds(capsys, monkeypatch):
    monkeypatch.setenv("LOZENGE_FORGE_SEED_LOG", "1")
    assert main(["seeds", "--hexagon", "2,2,2"]) == 0
    captured = capsys.readouterr()
    (record,) = [json.loads(x) for x in _lines(captured.out)]
    assert record["zone"] == 0
    assert record["generation"] == 0
    assert record["shape"] == [[2, 2], [2, 2]]
    assert record["cubes"] == 8
    assert json.loads(_lines(captured.err)[-1]) == record


def test_partitions(capsys):
    assert main(["partitions", "--limit", "2,1"]) == 0
    assert _lines(capsys.readouterr().out) == ["0,0", "1,0", "2,0", "1,1", "2,1"]
    assert main(["partitions", "--limit", "2,1", "--weight", "2"]) == 0
    assert _lines(capsys.readouterr().out) == ["2,0", "1,1"]
    assert main(["partitions", "--limit", "2,1/1,0"]) == 0
    assert len(_lines(capsys.readouterr().out)) == 9
    assert main(["partitions", "--limit", "2,2/2,2", "--weight", "1"]) == 0
    assert _lines(capsys.readouterr().out) == ["1,0/0,0"]


def test_render_to_file(tmp_path, capsys):
    out = tmp_path / "hex.svg"
    assert main(["render", "--hexagon", "2,2,2", "--output", str(out)]) == 0
    assert out.read_text().count("<polygon") == 12
    # refuses to overwrite without --force
    assert main(["render", "--hexagon", "2,2,2", "--output", str(out)]) == 2
    assert main(["render", "--hexagon", "2,2,2", "--tiling", "max", "--output", str(out), "--force"]) == 0

    png = tmp_path / "hex.png"
    assert main(["render", "--hexagon", "1,1,1", "--format", "png", "--output", str(png)]) == 0
    assert png.read_bytes().startswith(b"\x89PNG")


def test_render_bad_palette(tmp_path, capsys):
    out = tmp_path / "x.svg"
    assert main(["render", "--hexagon", "1,1,1", "--palette", "red,red,blue", "--output", str(out)]) == 2
    assert main(["render", "--hexagon", "1,1,1", "--palette", "red,blue", "--output", str(out)]) == 2
    assert not out.exists()


def test_enumerate_echoes_seed_records(capsys, monkeypatch):
    monkeypatch.setenv("LOZENGE_FORGE_SEED_LOG", "1")
    assert main(["count", "--hexagon", "1,1,1"]) == 0
    captured = capsys.readouterr()
    assert captured.out.strip() == "2"
    (record,) = [json.loads(x) for x in _lines(captured.err) if x.startswith("{")]
    assert record == {"generation": 0, "center": [1, 1], "order": 0, "shape": [[1]], "cubes": 1, "range": 6}
