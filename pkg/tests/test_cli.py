import csv
import hashlib
import io
import json

import pytest

from centroidal.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def p8(tmp_path, capsys):
    path = tmp_path / "p8.txt"
    assert run(capsys, "gen", "path", "8", "-o", str(path))[0] == 0
    return path


def write_basis(tmp_path, ids, name="b.txt"):
    path = tmp_path / name
    path.write_text("".join(f"{v}\n" for v in ids))
    return str(path)


def test_gen_path(p8):
    lines = [l for l in p8.read_text().splitlines() if not l.startswith("#")]
    assert lines[0] == "n 8" and len(lines) == 8


@pytest.mark.parametrize("family, param, n, k", [("diam3", "4", 51, 4), ("cycle-basis", "18", 18, 4)])
def test_gen_constructions(tmp_path, capsys, family, param, n, k):
    out = tmp_path / "g.txt"
    assert run(capsys, "gen", family, param, "-o", str(out))[0] == 0
    assert f"n {n}" in out.read_text()
    assert len((tmp_path / "g.txt.basis").read_text().split()) == k


def test_gen_stdout_and_extremal(capsys):
    code, out, _ = run(capsys, "gen", "extremal", "U_n", "5")
    assert code == 0 and out.startswith("# basis: 0 1 3 4\n")


@pytest.mark.parametrize("argv", [("gen", "nope", "3"), ("gen", "diam2", "3"), ("gen", "path"), ("gen", "extremal", "K_n")])
def test_gen_bad_params(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_verify_valid_and_invalid(p8, tmp_path, capsys):
    code, out, _ = run(capsys, "verify", str(p8), write_basis(tmp_path, [0, 2, 5, 7]), "--rank-vectors")
    assert code == 0 and out.startswith("valid") and "r(1) = {0,2}<5<7" in out
    code, out, _ = run(capsys, "verify", str(p8), write_basis(tmp_path, [0, 2, 5]))
    assert code == 1 and "invalid" in out and "4 and 5" in out
    code, out, _ = run(capsys, "verify", str(p8), write_basis(tmp_path, range(8)))
    assert code == 0


def test_verify_json(p8, tmp_path, capsys):
    code, out, _ = run(capsys, "verify", str(p8), write_basis(tmp_path, [0, 2, 5]), "--json")
    report = json.loads(out)
    assert code == 1 and report["results"]["valid"] is False and report["results"]["witness"] == [4, 5]
    assert report["input_digest"] == hashlib.sha256(p8.read_bytes()).hexdigest()


def test_cd_exact(p8, tmp_path, capsys):
    code, out, _ = run(capsys, "cd", "exact", str(p8))
    assert code == 0 and "CD = 4" in out and "basis: 0 2 5 7" in out
    fig = tmp_path / "fig.txt"
    run(capsys, "gen", "fig2a", "-o", str(fig))
    assert "CD = 3" in run(capsys, "cd", "exact", str(fig))[1]


def test_cd_exact_uncertified(p8, capsys):
    code, out, _ = run(capsys, "cd", "exact", str(p8), "--size-cap", "3", "--json")
    assert code == 0 and json.loads(out)["results"]["certified"] is False


def test_cd_approx_c18(tmp_path, capsys):
    c18 = tmp_path / "c18.txt"
    run(capsys, "gen", "cycle", "18", "-o", str(c18))
    code, out, _ = run(capsys, "cd", "approx", str(c18), "--json")
    results = json.loads(out)["results"]
    assert code == 0 and 4 <= results["value"] <= 17
    assert results["bounds"]["bell"]["value"] == 4
    code, out, _ = run(capsys, "verify", str(c18), write_basis(tmp_path, results["basis"]))
    assert code == 0


def test_json_reports_are_reproducible(p8, capsys):
    reports = []
    for _ in range(2):
        report = json.loads(run(capsys, "cd", "exact", str(p8), "--json")[1])
        report.pop("wall_time")
        reports.append(json.dumps(report, sort_keys=True))
    assert reports[0] == reports[1]


def test_bounds_command(p8, capsys):
    code, out, _ = run(capsys, "bounds", str(p8), "--json")
    assert code == 0 and json.loads(out)["results"]["order"]["value"] == 7


@pytest.mark.parametrize("text", ["0 1\n1 x\n", "0 1\n2 3\n"])
def test_bad_graph_inputs(tmp_path, capsys, text):
    path = tmp_path / "bad.txt"
    path.write_text(text)
    code, _, err = run(capsys, "cd", "exact", str(path))
    assert code == 2 and err.startswith("error:")


def test_missing_file(capsys, tmp_path):
    assert run(capsys, "verify", str(tmp_path / "none"), str(tmp_path / "none"))[0] == 2


def test_bad_basis_file(p8, tmp_path, capsys):
    assert run(capsys, "verify", str(p8), write_basis(tmp_path, [0, 9]))[0] == 2


def test_sweep_five(capsys):
    code, out, err = run(capsys, "sweep", "5")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and rows[0] == ["n", "m", "diameter", "md", "cd", "ld", "bell_lb", "path_lb", "family", "approx_cd", "ratio"]
    assert len(rows) - 1 == 1 + 1 + 2 + 6 + 21
    assert "0 violations" in err


def test_sweep_only_extremal(capsys):
    code, out, _ = run(capsys, "sweep", "7", "--only-extremal")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    seven = sorted(r["family"] for r in rows if r["n"] == "7")
    assert seven == sorted(["K_n", "K_1,n-1", "K_2,n-2", "S_n", "T_n", "U_n"])
    assert all(r["cd"] == str(int(r["n"]) - 1) for r in rows if int(r["n"]) >= 3)


def test_sweep_guard_and_sample(capsys):
    assert run(capsys, "sweep", "8")[0] == 2
    assert run(capsys, "sweep")[0] == 2
    a = run(capsys, "sweep", "--sample", "4", "--n", "9", "--p", "0.3", "--seed", "5")
    b = run(capsys, "sweep", "--sample", "4", "--n", "9", "--p", "0.3", "--seed", "5")
    assert a[0] == 0 and a[1] == b[1]


def test_sweep_writes_file(tmp_path, capsys):
    out = tmp_path / "s.csv"
    assert run(capsys, "sweep", "3", "-o", str(out))[0] == 0
    assert len(out.read_text().splitlines()) == 1 + 1 + 1 + 2
