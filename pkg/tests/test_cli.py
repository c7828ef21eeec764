"""End-to-end CLI coverage: subcommands, file formats, exit-code contract."""

import json
import subprocess
import sys

import numpy as np
import pytest

from renyivar import matrixio, spectral

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC, EXIT_FAIL = 0, 2, 3, 4


def cli(*args):
    proc = subprocess.run([sys.executable, "-m", "renyivar.cli", *args],
                          capture_output=True, text=True)
    return proc


@pytest.fixture
def density_files(tmp_path):
    rho = tmp_path / "rho.json"
    sig = tmp_path / "sig.json"
    matrixio.save_matrix(str(rho), np.diag([0.5, 0.5]))
    matrixio.save_matrix(str(sig), np.diag([0.25, 0.75]))
    return str(rho), str(sig)


def test_entropy_petz_scalar_oracle(density_files):
    rho, sig = density_files
    proc = cli("entropy", "--kind", "petz", "--alpha", "2", "--a", rho, "--b", sig)
    assert proc.returncode == EXIT_OK
    assert json.loads(proc.stdout)["value"] == pytest.approx(np.log(4.0 / 3.0), abs=1e-6)


def test_entropy_fidelity_self(density_files):
    rho, _ = density_files
    proc = cli("entropy", "--kind", "fidelity", "--a", rho, "--b", rho)
    assert json.loads(proc.stdout)["value"] == pytest.approx(1.0, abs=1e-9)


def test_entropy_alpha_z_collapse(density_files):
    rho, sig = density_files
    az = cli("entropy", "--kind", "alpha-z", "--alpha", "2", "--z", "1", "--a", rho, "--b", sig)
    pz = cli("entropy", "--kind", "petz", "--alpha", "2", "--a", rho, "--b", sig)
    assert json.loads(az.stdout)["value"] == pytest.approx(json.loads(pz.stdout)["value"], abs=1e-10)


def test_entropy_alpha_one_is_numeric_error(density_files):
    rho, sig = density_files
    proc = cli("entropy", "--kind", "sandwiched", "--alpha", "1", "--a", rho, "--b", sig)
    assert proc.returncode == EXIT_NUMERIC


def test_psi_tags_and_value(tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    matrixio.save_matrix(str(a), np.diag([2.0, 8.0]))
    matrixio.save_matrix(str(b), np.eye(2))
    proc = cli("psi", "--p", "1", "--q", "1", "--s", "0.5", "--a", str(a), "--b", str(b))
    doc = json.loads(proc.stdout)
    assert doc["value"] == pytest.approx(4.242641, abs=1e-6)
    assert doc["tags"] == "min_31,min_32,concave_42i"


def test_variational_random_instance_passes():
    proc = cli("variational", "--p", "1", "--q", "1", "--s", "0.5",
               "--theorem", "3.1", "--dim", "3", "--seed", "1")
    assert proc.returncode == EXIT_OK
    doc = json.loads(proc.stdout)
    assert doc["relative_gap"] <= 1e-7
    assert doc["bound_direction"] == "upper"


def test_variational_regime_mismatch_exit_2():
    proc = cli("variational", "--p", "1", "--q", "1", "--s", "2",
               "--theorem", "3.2", "--seed", "1")
    assert proc.returncode == EXIT_USAGE
    assert "regime" in proc.stderr.lower() or "family" in proc.stderr.lower()


def test_verify_pass_and_report(tmp_path):
    out = tmp_path / "report.json"
    proc = cli("verify", "--suite", "gelfand-naimark", "--dim", "4",
               "--trials", "100", "--seed", "42", "--out", str(out))
    assert proc.returncode == EXIT_OK
    doc = json.loads(out.read_text())
    assert doc["pass"] is True and doc["violations"] == []


def test_verify_convexity_dispatch():
    proc = cli("verify", "--suite", "convexity", "--p", "0.5", "--q", "0.5",
               "--s", "1", "--dim", "2", "--trials", "60", "--seed", "7")
    assert proc.returncode == EXIT_OK
    # no --q means the single-argument functional path
    proc2 = cli("verify", "--suite", "convexity", "--p", "0.5", "--s", "2",
                "--dim", "2", "--trials", "60", "--seed", "7")
    assert proc2.returncode == EXIT_OK


def test_verify_unknown_regime_exit_2():
    proc = cli("verify", "--suite", "convexity", "--p", "3", "--q", "0.5",
               "--s", "1", "--dim", "2", "--trials", "10", "--seed", "1")
    assert proc.returncode == EXIT_USAGE


def test_verify_failure_exit_4():
    proc = cli("verify", "--suite", "limits", "--trials", "10", "--seed", "5")
    assert proc.returncode == EXIT_FAIL
    doc = json.loads(proc.stdout)
    assert doc["pass"] is False


def test_verify_reports_byte_identical(tmp_path):
    f1, f2 = tmp_path / "r1.json", tmp_path / "r2.json"
    args = ("verify", "--suite", "variational", "--p", "1", "--q", "1", "--s", "0.5",
            "--dim", "2", "--trials", "20", "--seed", "11")
    cli(*args, "--out", str(f1))
    cli(*args, "--out", str(f2))
    assert f1.read_bytes() == f2.read_bytes()


def test_missing_required_flag_exit_2():
    proc = cli("verify", "--suite", "variational", "--dim", "2",
               "--trials", "10", "--seed", "1")
    assert proc.returncode == EXIT_USAGE


def test_matrix_file_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"n": 2, "field": "real", "data": [1, 0, 0]}))
    proc = cli("entropy", "--kind", "fidelity", "--a", str(bad), "--b", str(bad))
    assert proc.returncode == EXIT_USAGE

    notpd = tmp_path / "notpd.json"
    matrixio.save_matrix(str(notpd), np.diag([1.0, -1.0]))
    good = tmp_path / "good.json"
    matrixio.save_matrix(str(good), np.eye(2))
    proc2 = cli("entropy", "--kind", "fidelity", "--a", str(notpd), "--b", str(good))
    assert proc2.returncode == EXIT_USAGE


def test_matrixio_round_trip(tmp_path):
    m = spectral.random_pd(3, 21).mat
    path = tmp_path / "m.json"
    matrixio.save_matrix(str(path), m)
    back = matrixio.load_matrix(str(path), expect="pd")
    assert np.max(np.abs(back.mat - m)) < 1e-12
    doc = json.loads(path.read_text())
    assert doc["field"] == "complex" and doc["n"] == 3
