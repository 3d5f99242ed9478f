import json
from fractions import Fraction

import pytest

from tdesign.cli import main
from tdesign.configspace import RATIONAL
from tdesign.constructions import cross_polytope, two_octagons
from tdesign.designfile import design_from_dict, design_to_dict, load_design


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def octagon_file(tmp_path, capsys):
    path = tmp_path / "oct.json"
    assert run(capsys, "construct", "octagons", "--r1", "1", "--r2", "2", "--w1", "1", "--out", str(path))[0] == 0
    return path


def test_verify_octagons(octagon_file, capsys):
    code, out, _ = run(capsys, "verify", str(octagon_file), "--degree", "9")
    assert code == 0
    rep = json.loads(out)
    assert rep["schema"] == "tdesign.report/1"
    assert rep["result"]["classification"]["label"] == "tight on 2 spheres"
    assert rep["result"]["design"]["max_residual"] <= 1e-12
    assert "wall_time" not in rep


def test_verify_degree_10_fails(octagon_file, capsys):
    assert run(capsys, "verify", str(octagon_file), "--degree", "10")[0] == 1


def test_zero_weight_file(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"dimension": 2, "points": [
        {"coords": ["1", "0"], "weight": "0"}, {"coords": ["-1", "0"], "weight": "1"}]}))
    code, _, err = run(capsys, "verify", str(path), "--degree", "1")
    assert code == 2 and "weight" in err


@pytest.mark.parametrize("payload", ["{not json", json.dumps({"dimension": 2}),
                                     json.dumps({"dimension": 2, "points": [{"coords": ["1/0", "1"], "weight": "1"}]}),
                                     json.dumps({"dimension": 2, "points": [{"coords": ["1"], "weight": "1"}]})])
def test_malformed_files(tmp_path, capsys, payload):
    path = tmp_path / "bad.json"
    path.write_text(payload)
    assert run(capsys, "verify", str(path), "--degree", "1")[0] == 2


def test_missing_file_and_bad_usage(capsys):
    assert run(capsys, "verify", "/nonexistent.json", "--degree", "1")[0] == 2
    assert run(capsys, "verify")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "--version")[0] == 0


@pytest.mark.parametrize("args,bound", [(("--dim", "2", "--shells", "2", "--degree", "9"), 16),
                                        (("--dim", "8", "--shells", "1", "--degree", "7"), 240),
                                        (("--dim", "4", "--shells", "3", "--degree", "9", "--with-origin"), 91)])
def test_bound(capsys, tmp_path, args, bound):
    code, out, _ = run(capsys, "bound", *args)
    assert code == 0 and json.loads(out)["result"]["bound"] == bound
    report = tmp_path / "b.json"
    code, out, _ = run(capsys, "bound", *args, "--report", str(report))
    assert out.strip() == str(bound)
    assert json.loads(report.read_text())["result"]["bound"] == bound


def test_construct_counts(capsys):
    for argv, size in [(("e8",), 240), (("polygon", "--m", "8"), 8), (("octagons",), 16),
                       (("cross-polytope", "--n", "3"), 6)]:
        code, out, _ = run(capsys, "construct", *argv)
        assert code == 0 and len(json.loads(out)["points"]) == size


def test_gegenbauer(capsys):
    assert run(capsys, "gegenbauer", "--dim", "2", "--degree", "4")[1].strip() == "2 - 16*x^2 + 16*x^4"
    assert run(capsys, "gegenbauer", "--dim", "5", "--degree", "0")[1].strip() == "1"
    assert run(capsys, "gegenbauer", "--dim", "3", "--degree", "4", "--eval", "1")[1].strip() == "9"
    assert run(capsys, "gegenbauer", "--dim", "1", "--degree", "4")[0] == 2


def test_certify(capsys, tmp_path, monkeypatch):
    monkeypatch.delenv("TDL_JOBS", raising=False)
    code, out, err = run(capsys, "certify", "--from", "3", "--to", "10")
    assert code == 0 and json.loads(out)["result"]["verdict"] == "no tight 9-design on 2 spheres in range"
    assert run(capsys, "certify", "--from", "2", "--to", "1")[0] == 2
    report = tmp_path / "c.json"
    code, _, err = run(capsys, "certify", "--report", str(report))
    assert code == 0
    assert json.loads(report.read_text())["result"]["admissible"] == [23, 2399, 235223]
    assert "n=23: Case I excluded at step 4" in err


def test_reports_byte_identical(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("TDL_JOBS", "2")
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "certify", "--from", "3", "--to", "5000", "--report", str(a))
    monkeypatch.setenv("TDL_JOBS", "1")
    run(capsys, "certify", "--from", "3", "--to", "5000", "--report", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_strength_and_pell(octagon_file, capsys):
    code, out, _ = run(capsys, "strength", str(octagon_file))
    assert code == 0 and json.loads(out)["result"]["strength"] == 9
    code, out, _ = run(capsys, "pell", "--to", "300000")
    rows = json.loads(out)["result"]["solutions"]
    assert [r["n"] for r in rows if r["k_even"]] == [23, 2399, 235223]


def test_float_round_trip_is_bit_exact():
    cfg = two_octagons(1, 2, 1)
    back = design_from_dict(json.loads(json.dumps(design_to_dict(cfg))))
    assert back.coords == cfg.coords and back.weights == cfg.weights


def test_rational_round_trip(tmp_path):
    cfg = cross_polytope(3, r=Fraction(2, 3), w=Fraction(5, 7))
    path = tmp_path / "cp.json"
    path.write_text(json.dumps(design_to_dict(cfg)))
    back = load_design(path)
    assert back.backend == RATIONAL
    assert back.coords == cfg.coords and back.weights == cfg.weights


def test_backend_override(octagon_file):
    assert load_design(octagon_file, "float").backend == "float"
    cfg = design_from_dict({"dimension": 1, "points": [{"coords": ["0.5"], "weight": "1"}]}, "rational")
    assert cfg.coords == ((Fraction(1, 2),),)
