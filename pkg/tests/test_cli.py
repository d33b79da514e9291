import json
import re

import pytest

from blobdecomp.cli import main
from blobdecomp.repdims import DecompMatrix


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_params(capsys):
    code, out, _ = run(capsys, "params", "--l", "5", "--m", "2", "--n", "13")
    assert code == 0
    assert "k=1" in out
    assert "fundamental alcove: (-2, 3)" in out
    assert "walls: -12,-7,-2,3,8,13" in out


def test_params_k_second_family(capsys):
    code, out, _ = run(capsys, "params", "--l", "7", "--m", "3", "--n", "10", "--format", "json")
    assert code == 0 and json.loads(out)["k"] == 5


@pytest.mark.parametrize(
    "argv, name",
    [
        (["--l", "4", "--m", "2", "--n", "5"], "EvenOrSmallL"),
        (["--l", "5", "--m", "4", "--n", "5"], "MOutOfRange"),
        (["--l", "5", "--m", "2", "--n", "0"], "BadN"),
    ],
)
def test_params_invalid(capsys, argv, name):
    code, out, err = run(capsys, "params", *argv)
    assert code == 2 and name in err and out == ""


def test_walk_example(capsys):
    code, out, _ = run(capsys, "walk", "++++-+", "--l", "5", "--m", "2")
    assert code == 0
    assert "R_t = [5]" in out and "A_t = []" in out
    assert re.search(r"addable/removable nodes\): +-1$", out, re.M)
    assert re.search(r"\|A\|-\|R\|\): +-1$", out, re.M)
    assert "residues: 1,2,3,4,4,0" in out


def test_walk_json(capsys):
    code, out, _ = run(capsys, "walk", "++++-+", "--l", "5", "--m", "2", "--format", "json")
    doc = json.loads(out)
    assert doc["degree_g"] == doc["degree_walk"] == -1 and doc["R"] == [5]


def test_walk_as_weights_is_equivalent(capsys):
    _, a, _ = run(capsys, "walk", "+-", "--l", "5", "--m", "2", "--format", "json")
    _, b, _ = run(capsys, "walk", "--as-weights", "0,1,0", "--l", "5", "--m", "2", "--format", "json")
    assert a == b
    doc = json.loads(a)
    assert doc["degree_g"] == 0 and doc["A"] == doc["R"] == []


def test_walk_reports_word_degree(capsys):
    # t^lambda for lambda = -6 at n = 6 shares its class with the other shapes
    code, out, _ = run(capsys, "walk", "--l", "5", "--m", "2", "--format", "json", "--", "-+----")
    doc = json.loads(out)
    assert code == 0 and doc["degree_word"] == doc["degree_g"]


def test_walk_malformed(capsys):
    code, _, err = run(capsys, "walk", "--as-weights", "0,2", "--l", "5", "--m", "2")
    assert code == 2 and "MalformedWalk" in err


def test_orbit(capsys):
    code, out, _ = run(capsys, "orbit", "--lambda", "-19", "--l", "5", "--m", "2", "--n", "19", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["kappa"] == 3
    assert doc["m_set"] == [-19, 15, -15, 11, -9, 5, -5, 1]
    _, out, _ = run(capsys, "orbit", "--lambda", "0", "--l", "5", "--m", "2", "--n", "8", "--format", "json")
    assert json.loads(out)["m_set"] == [0]


def test_orbit_bipartition_sugar(capsys):
    _, a, _ = run(capsys, "orbit", "--bipartition", "0,13", "--l", "5", "--m", "2", "--n", "13")
    _, b, _ = run(capsys, "orbit", "--lambda", "-13", "--l", "5", "--m", "2", "--n", "13")
    assert a == b
    assert "lambda_6 = -1" in a


def test_dims(capsys):
    code, out, _ = run(capsys, "dims", "--lambda", "-16", "--l", "5", "--m", "2", "--n", "16", "--format", "csv")
    assert code == 0
    rows = out.splitlines()
    assert [r.split(",")[2] for r in rows[1:]] == ["1", "t", "t", "t^2", "t^2+1", "t^3+t"]
    _, pretty, _ = run(capsys, "dims", "--lambda", "-16", "--l", "5", "--m", "2", "--n", "16")
    assert "dim_t Delta = t^3+t" in pretty


def test_decomp_csv_identity(capsys):
    code, out, _ = run(capsys, "decomp", "--l", "5", "--m", "2", "--n", "2", "--format", "csv")
    assert code == 0
    rows = [r.split(",") for r in out.splitlines()[1:]]
    assert len(rows) == 9
    for mu, lam, poly in rows:
        assert poly == ("1" if mu == lam else "0")


def test_decomp_json_round_trip(capsys, tmp_path):
    target = tmp_path / "m.json"
    code, out, _ = run(capsys, "decomp", "--l", "5", "--m", "2", "--n", "9", "--format", "json", "--out", str(target))
    assert code == 0 and out == ""
    text = target.read_text()
    assert DecompMatrix.from_dict(json.loads(text)).to_json() + "\n" == text


def test_output_is_deterministic(capsys):
    argv = ["decomp", "--l", "7", "--m", "3", "--n", "10", "--format", "json"]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--l", "5", "--m", "2", "--max-n", "13")
    assert code == 0 and "all checks passed" in out


def test_verify_parallel_matches_serial(capsys):
    argv = ["verify", "--l", "7", "--m", "3", "--max-n", "8", "--format", "json"]
    _, serial, _ = run(capsys, *argv)
    _, parallel, _ = run(capsys, *argv, "--parallel", "2")
    assert serial == parallel and json.loads(serial)["passed"]


def test_verify_invalid(capsys):
    code, _, err = run(capsys, "verify", "--l", "5", "--m", "1", "--max-n", "3")
    assert code == 2 and "MOutOfRange" in err


def test_missing_lambda(capsys):
    code, _, err = run(capsys, "dims", "--l", "5", "--m", "2", "--n", "3")
    assert code == 2 and "--lambda" in err


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "blobdecomp", "params", "--l", "5", "--m", "2", "--n", "13"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and "walls: -12,-7,-2,3,8,13" in proc.stdout
