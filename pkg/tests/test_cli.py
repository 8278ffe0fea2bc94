import json

import pytest

from polysphere import codec
from polysphere.check import run_checks
from polysphere.cli import main
from polysphere.polygon import ModuliSpec

from conftest import HEPT_A, HEPT_B, SQUARE_ISH


@pytest.fixture
def files(tmp_path):
    def poly(name, n, r, verts):
        path = tmp_path / name
        path.write_text(json.dumps({"n": n, "r": r, "vertices": [list(v) for v in verts]}))
        return str(path)

    return {
        "quad": poly("quad.json", 4, 2.0, SQUARE_ISH),
        "hept_a": poly("hept_a.json", 7, 5.2, HEPT_A),
        "hept_b": poly("hept_b.json", 7, 5.2, HEPT_B),
        "dir": tmp_path,
    }


def test_map(files, capsys):
    assert main(["map", files["quad"]]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["i0"] == 2 and d["n"] == 4
    assert d["t"] == pytest.approx([0.0, 1.0], abs=1e-10)


def test_map_invalid_exit_1(files, capsys):
    # drawn coordinates only pass at a loose tolerance
    assert main(["map", files["hept_a"]]) == 1
    assert "error" in capsys.readouterr().err
    assert main(["map", files["hept_a"], "--tol", "0.05"]) == 0


def test_usage_errors_exit_2(files):
    for argv in (["check", "--n", "3", "--r", "1.5"], ["plan", files["quad"]], ["bogus"], ["map", files["quad"], "--tol", "2"]):
        with pytest.raises(SystemExit) as info:
            main(argv)
        assert info.value.code == 2


def test_missing_file_exit_1(files):
    assert main(["map", str(files["dir"] / "nope.json")]) == 1


def test_unmap_map(files, capsys):
    out = files["dir"] / "coords.json"
    assert main(["map", files["hept_b"], "--tol", "0.05", "--out", str(out)]) == 0
    poly = files["dir"] / "poly.json"
    assert main(["unmap", str(out), "--out", str(poly)]) == 0
    assert main(["map", str(poly), "--tol", "1e-12"]) == 0
    again = json.loads(capsys.readouterr().out)
    first = json.loads(out.read_text())
    assert again["i0"] == first["i0"] == 4
    assert again["t"][:3] == pytest.approx(first["t"][:3], abs=1e-9)


def test_reflect(files, capsys):
    assert main(["reflect", files["quad"]]) == 0
    p = codec.decode_polygon(capsys.readouterr().out)
    assert p.vertices[2][1] < 0


def test_plan_outputs(files, capsys):
    d = files["dir"]
    a, b = d / "a.json", d / "b.json"
    a.write_text(json.dumps({"n": 4, "r": 2.0, "t": [1.0, 0.0]}))
    b.write_text(json.dumps({"n": 4, "r": 2.0, "t": [-0.5, 1.0]}))
    assert main(["unmap", str(a), "--out", str(d / "pa.json")]) == 0
    assert main(["unmap", str(b), "--out", str(d / "pb.json")]) == 0
    args = ["plan", str(d / "pa.json"), str(d / "pb.json"), "--steps", "4"]
    assert main(args + ["--csv", str(d / "p.csv"), "--svg-dir", str(d / "svg"), "--overlay"]) == 0
    pl = json.loads(capsys.readouterr().out)
    assert pl["steps"] == 4 and len(pl["frames"]) == 5
    assert len((d / "p.csv").read_text().splitlines()) == 6
    assert sorted(p.name for p in (d / "svg").iterdir())[-1] == "frame_004.svg"
    # render accepts the plan file too
    (d / "plan.json").write_text(codec.dumps(pl))
    assert main(["render", str(d / "plan.json"), "--out", str(d / "svg2")]) == 0
    assert len(list((d / "svg2").iterdir())) == 5


def test_plan_antipodal_exit_1(files, capsys):
    d = files["dir"]
    assert main(["reflect", files["hept_b"], "--tol", "0.05", "--out", str(d / "m.json")]) == 0
    assert main(["plan", files["hept_b"], str(d / "m.json"), "--tol", "0.05"]) == 1
    assert "antipodal" in capsys.readouterr().err
    assert main(["plan", files["hept_b"], str(d / "m.json"), "--tol", "0.05", "--mode", "unoriented"]) == 0


def test_sample(capsys):
    assert main(["sample", "--n", "5", "--r", "3.5", "--count", "3", "--seed", "2"]) == 0
    polys = json.loads(capsys.readouterr().out)
    assert len(polys) == 3
    for d in polys:
        codec.polygon_from_dict(d, 1e-9)


def test_check_matches_library(tmp_path):
    outs = []
    for k in range(2):
        path = tmp_path / f"c{k}.json"
        assert main(["check", "--n", "6", "--r", "4.5", "--count", "200", "--seed", "7", "--out", str(path)]) == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]
    assert json.loads(outs[0]) == json.loads(codec.dumps(run_checks(ModuliSpec(6, 4.5), 200, 7)))


def test_render_deterministic(files):
    d = files["dir"]
    for k in range(2):
        assert main(["render", files["hept_a"], "--tol", "0.05", "--overlay", "--out", str(d / f"r{k}.svg")]) == 0
    assert (d / "r0.svg").read_bytes() == (d / "r1.svg").read_bytes()
