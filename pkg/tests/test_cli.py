import csv
import io
import json

import numpy as np
import pytest

from numrad.cli import main
from numrad.kernel import dumps_matrix, load_matrix, save_matrix

E12 = np.array([[0, 1], [0, 0]], dtype=complex)


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, M in {
        "E12": E12,
        "I": np.eye(2),
        "diag12": np.diag([1.0, 2.0]),
        "diag14": np.diag([1.0, 4.0]),
        "rand": np.random.default_rng(0).standard_normal((3, 3)) * (1 + 0.5j),
    }.items():
        paths[name] = tmp_path / f"{name}.json"
        save_matrix(paths[name], M)
    return paths


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


# -- compute ----------------------------------------------------------------------


def test_compute_examples(files, capsys):
    assert run(capsys, "compute", files["E12"], "--quantity", "w") == (0, "0.5\n", "")
    assert run(capsys, "compute", files["E12"], "--weight", files["diag14"], "--quantity", "w")[1] == "0.25\n"
    assert run(capsys, "compute", files["I"], "--quantity", "m")[1] == "1\n"


@pytest.mark.parametrize("quantity,expected", [
    ("r", "0"), ("norm", "1"), ("cA", "0"), ("m", "0"),
])
def test_compute_other_quantities(files, capsys, quantity, expected):
    code, out, _ = run(capsys, "compute", files["E12"], "--quantity", quantity)
    assert code == 0
    assert float(out) == pytest.approx(float(expected), abs=1e-12)


def test_compute_prints_twelve_significant_digits(files, capsys):
    _, out, _ = run(capsys, "compute", files["rand"], "--quantity", "norm")
    digits = out.strip().replace(".", "").replace("-", "").lstrip("0")
    assert len(digits) <= 12


def test_compute_weighted_quantities(files, capsys):
    _, out, _ = run(capsys, "compute", files["E12"], "--weight", files["diag14"], "--quantity", "norm")
    assert float(out) == pytest.approx(0.5)
    _, out, _ = run(capsys, "compute", files["diag12"], "--weight", files["diag14"], "--quantity", "m")
    assert float(out) == pytest.approx(1)


def test_adjoint_output_roundtrips_exactly(files, capsys, tmp_path):
    code, out, _ = run(capsys, "compute", files["rand"], "--quantity", "adjoint")
    assert code == 0
    path = tmp_path / "adj.json"
    path.write_text(out)
    A = load_matrix(path)
    assert np.array_equal(A, load_matrix(files["rand"]).conj().T)
    assert dumps_matrix(A) == out.strip()
    _, out, _ = run(capsys, "compute", files["E12"], "--weight", files["diag14"], "--quantity", "adjoint")
    path.write_text(out)
    assert np.allclose(load_matrix(path), E12.T / 4)


def test_compute_input_errors(files, capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, out, err = run(capsys, "compute", bad)
    assert code == 2 and out == "" and len(err.strip().splitlines()) == 1
    assert run(capsys, "compute", tmp_path / "missing.json")[0] == 2
    assert run(capsys, "compute", files["E12"], "--weight", files["E12"])[0] == 2
    assert run(capsys, "compute", files["E12"], "--weight", files["rand"])[0] == 2


def test_bad_flags_exit_2(files, capsys):
    with pytest.raises(SystemExit) as exc:
        main(["compute", str(files["E12"]), "--quantity", "trace"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "bogus"])
    assert exc.value.code == 2
    capsys.readouterr()


# -- verify -----------------------------------------------------------------------


def test_verify_writes_report_and_summary(capsys, tmp_path):
    out = tmp_path / "rep.json"
    code, stdout, _ = run(capsys, "verify", "--suite", "s3", "--trials", "1", "--seed", "1", "--out", out)
    assert code == 0
    assert stdout.startswith("suite=s3 trials=1") and "violations=0" in stdout
    rep = json.loads(out.read_text())
    assert rep["violations"] == 0
    ids = {d["bound_id"] for d in rep["per_bound"]}
    assert "refuted-radius-scalarization" in ids


def test_verify_csv_lists_fixture(capsys, tmp_path):
    out = tmp_path / "rep.csv"
    assert run(capsys, "verify", "--suite", "s3", "--trials", "1", "--seed", "1", "--format", "csv",
               "--out", out)[0] == 0
    rows = list(csv.DictReader(io.StringIO(out.read_text())))
    fixture = [r for r in rows if r["bound_id"] == "refuted-radius-scalarization"]
    assert len(fixture) == 1 and float(fixture[0]["lhs"]) == pytest.approx(2.0)


def test_verify_without_out_keeps_stdout_parseable(capsys):
    code, out, err = run(capsys, "verify", "--suite", "lemmas", "--trials", "2", "--dim", "2")
    assert code == 0
    assert json.loads(out)["suite"] == "lemmas"
    assert err.startswith("suite=lemmas")


def test_verify_exit_1_on_violation(capsys, monkeypatch):
    import numrad.suite as suite_mod
    from numrad.bounds import make_report

    monkeypatch.setitem(suite_mod.TRIALS, "s2", lambda rng, dim, k, cfg: [make_report("forced", 2.0, 1.0)])
    code, _, err = run(capsys, "verify", "--suite", "s2", "--trials", "1")
    assert code == 1 and "violations=1" in err


def test_verify_bad_values_exit_2(capsys):
    assert run(capsys, "verify", "--suite", "s2", "--trials", "0")[0] == 2
    assert run(capsys, "verify", "--suite", "s2", "--dim", "1")[0] == 2
    assert run(capsys, "verify", "--suite", "s2", "--grid", "4")[0] == 2


def test_verify_is_byte_identical(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        run(capsys, "verify", "--suite", "all", "--trials", "3", "--dim", "3", "--seed", "7", "--out", path)
    assert a.read_bytes() == b.read_bytes()


# -- boundary ---------------------------------------------------------------------


def _rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_boundary_examples(files, capsys, tmp_path):
    out = tmp_path / "b.csv"
    assert run(capsys, "boundary", files["E12"], "--points", "360", "--out", out)[0] == 0
    rows = _rows(out.read_text())
    assert len(rows) == 360
    assert all(abs(abs(complex(float(r["re"]), float(r["im"]))) - 0.5) <= 1e-9 for r in rows)
    _, text, _ = run(capsys, "boundary", files["I"], "--points", "8")
    rows = _rows(text)
    assert len(rows) == 8 and all(float(r["re"]) == 1 and float(r["im"]) == 0 for r in rows)
    _, text, _ = run(capsys, "boundary", files["diag12"], "--points", "16")
    assert all(abs(float(r["im"])) <= 1e-9 for r in _rows(text))


def test_boundary_needs_three_points(files, capsys):
    assert run(capsys, "boundary", files["E12"], "--points", "2")[0] == 2
