import json
import subprocess
import sys

import pytest

from fatpoints.cli import main
from fatpoints.geometry import ProjPoint, line_through
from fatpoints.scheme import FatPointScheme

P1, P2, P3 = ProjPoint((1, 2, 3)), ProjPoint((4, -1, 2)), ProjPoint((2, 5, -7))


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--output", "json")
    return code, json.loads(out)


@pytest.fixture
def triangle_files(tmp_path):
    Z = FatPointScheme(((P1, 3), (P2, 3), (P3, 2)))
    scheme = tmp_path / "triangle.json"
    scheme.write_text(json.dumps(Z.to_json()))
    L12, L13, L23 = line_through(P1, P2), line_through(P1, P3), line_through(P2, P3)
    lines = tmp_path / "lines.json"
    lines.write_text(json.dumps({"lines": [l.to_json() for l in (L12, L12, L13, L23)]}))
    return scheme, lines


def test_validate(capsys):
    code, out, _ = run(capsys, "validate", "--delta", "1,2,3,4,4,3,1")
    assert code == 0
    assert "alpha = 4" in out and "7,5,4,2" in out and "•" in out
    code, data = run_json(capsys, "validate", "--delta", "1")
    assert code == 0 and data["valid"]
    code, out, err = run(capsys, "validate", "--delta", "1,3")
    assert code == 2 and "(a)" in err


def test_conjugate_and_bounds(capsys):
    code, out, _ = run(capsys, "conjugate", "--delta", "1,2,3,4,2")
    assert code == 0 and out.strip() == "5,4,2,1"
    code, data = run_json(capsys, "bounds", "--delta", "1,2,3,4,2")
    assert data["predicted_doubles"] == 3
    assert (data["lower_bound"], data["upper_bound"]) == (2, 6)
    assert data["all_doubles"] is False and data["arithmetic_staircase"] is False


def test_construct(capsys):
    code, data = run_json(capsys, "construct", "--delta", "1,2,3,4,2", "--seed", "1")
    assert code == 0 and data["verdict"] == "PASS"
    assert data["trace"]["doubles"] == 3 and data["trace"]["reduced"] == 3
    code, data = run_json(capsys, "construct", "--delta", "1,2,2,1")
    assert code == 0 and data["trace"]["doubles"] == 1 and data["trace"]["reduced"] == 3
    code, data = run_json(capsys, "construct", "--delta", "1,2,3,4,2", "--stop-at", "2")
    assert code == 0 and data["verdict"] == "PASS"
    assert (data["trace"]["doubles"], data["trace"]["reduced"]) == (2, 6)
    code, out, _ = run(capsys, "construct", "--delta", "1,2,3,4,2")
    assert "STEP 1" in out and "PASS" in out


def test_construct_reports_failure(capsys, monkeypatch):
    from fatpoints import cli, hfcore

    monkeypatch.setattr(cli.oracle, "delta_hf", lambda Z: hfcore.validate_delta((1, 1)))
    code, out, _ = run(capsys, "construct", "--delta", "1,2,2,1")
    assert code == 1 and "FAIL" in out


def test_json_is_deterministic(capsys):
    argv = ("construct", "--delta", "1,2,3,3,1", "--seed", "7", "--output", "json")
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_construct_pipes_into_hilbert(capsys, tmp_path):
    _, out, _ = run(capsys, "construct", "--delta", "1,2,3,4,2", "--stop-at", "2",
                    "--output", "json")
    path = tmp_path / "c.json"
    path.write_text(out)
    code, data = run_json(capsys, "hilbert", "--scheme", str(path))
    assert code == 0 and data["delta"] == [1, 2, 3, 4, 2]


def test_stdin_round_trip():
    exe = [sys.executable, "-m", "fatpoints"]
    first = subprocess.run(exe + ["construct", "--delta", "1,2,3,4,2", "--output", "json"],
                           capture_output=True, text=True, check=True)
    second = subprocess.run(exe + ["hilbert", "--scheme", "-", "--output", "json"],
                            input=first.stdout, capture_output=True, text=True, check=True)
    assert json.loads(second.stdout)["delta"] == [1, 2, 3, 4, 2]


def test_hilbert_files(capsys, tmp_path, triangle_files):
    scheme, _ = triangle_files
    code, data = run_json(capsys, "hilbert", "--scheme", str(scheme))
    assert code == 0 and data["stable_value"] == 15
    assert data["hilbert"] == [1, 3, 6, 10, 14, 15]
    one = tmp_path / "one.json"
    one.write_text(json.dumps(FatPointScheme(((P1, 2),)).to_json()))
    code, out, _ = run(capsys, "hilbert", "--scheme", str(one))
    assert out.startswith("H: 1, 3, 3, ...")
    code, data = run_json(capsys, "hilbert", "--scheme", str(one), "--max-degree", "3")
    assert data["hilbert"] == [1, 3, 3, 3]


def test_hilbert_star(capsys, tmp_path):
    _, out, _ = run(capsys, "star", "--t", "3", "--output", "json")
    path = tmp_path / "star.json"
    path.write_text(out)
    _, data = run_json(capsys, "hilbert", "--scheme", str(path))
    assert data["hilbert"] == [1, 3, 6, 10, 14, 18]
    assert data["delta"] == [1, 2, 3, 4, 4, 4]


def test_reduce(capsys, tmp_path, triangle_files):
    scheme, lines = triangle_files
    code, data = run_json(capsys, "reduce", "--scheme", str(scheme), "--lines", str(lines))
    assert code == 0
    assert data["reduction_vector"] == [6, 4, 3, 2] and data["full"]
    assert data["gms_hilbert"] == [1, 3, 6, 10, 14, 15]

    short = tmp_path / "short.json"
    short.write_text(json.dumps([line_through(P1, P2).to_json()]))
    _, data = run_json(capsys, "reduce", "--scheme", str(scheme), "--lines", str(short))
    assert not data["full"] and "gms_note" in data

    # P1 + P2 reduced one point at a time: full but (1, 1)
    small = tmp_path / "small.json"
    small.write_text(json.dumps(FatPointScheme(((P1, 1), (P2, 1))).to_json()))
    odd = tmp_path / "odd.json"
    odd.write_text(json.dumps([line_through(P1, P3).to_json(), line_through(P2, P3).to_json()]))
    _, data = run_json(capsys, "reduce", "--scheme", str(small), "--lines", str(odd))
    assert data["reduction_vector"] == [1, 1] and data["full"]
    assert "NotStrictlyDecreasing" in data["gms_note"]


def test_star_variants(capsys):
    code, out, _ = run(capsys, "star", "--t", "3")
    assert code == 0 and "MATCH" in out and "1, 2, 3, 4, 4, 4" in out
    code, data = run_json(capsys, "star", "--t", "3", "--variant", "plus-point-on")
    assert code == 0 and data["delta"] == [1, 2, 3, 4, 4, 4, 1]
    code, data = run_json(capsys, "star", "--t", "3", "--variant", "plus-point-off")
    assert code == 0 and data["delta"][4] == 5
    code, data = run_json(capsys, "star", "--t", "3", "--variant", "near-star")
    assert code == 0 and data["ideal_dimensions"]["5"] == 2
    code, _, err = run(capsys, "star", "--t", "2", "--variant", "near-star")
    assert code == 2


def test_asymptotic(capsys):
    code, out, _ = run(capsys, "asymptotic", "--t-min", "3", "--t-max", "4")
    lines = out.strip().splitlines()
    assert lines[0] == "t,s,ratio,ratio_float"
    assert lines[1].startswith("3,3,") and lines[2].startswith("4,3,3/4,")
    code, data = run_json(capsys, "asymptotic", "--t-min", "1684", "--t-max", "1684")
    assert data["rows"][0]["s"] == 1275
    code, data = run_json(capsys, "asymptotic", "--t-min", "10", "--t-max", "9")
    assert code == 0 and data["rows"] == []


def test_input_errors(capsys, tmp_path):
    assert run(capsys, "construct", "--delta", "2,1")[0] == 2
    assert run(capsys, "construct", "--delta", "1,2", "--stop-at", "0")[0] == 2
    assert run(capsys, "hilbert", "--scheme", str(tmp_path / "missing.json"))[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"points": [{"coords": ["0", "0", "0"], "mult": 1}]}')
    assert run(capsys, "hilbert", "--scheme", str(bad))[0] == 2


def test_out_file(capsys, tmp_path):
    target = tmp_path / "o.json"
    code, out, _ = run(capsys, "conjugate", "--delta", "1,2,1", "--output", "json",
                       "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["conjugate"] == [3, 1]
