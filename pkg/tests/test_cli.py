"""CLI subcommands, output formats and exit codes."""

import json

import numpy as np
import pytest

from pseudoherm.cli import cli_main
from pseudoherm.io import save_coefficients, save_matrix
from pseudoherm.antilinear import CoefficientFamily
from pseudoherm.ensembles import planted_matrix


@pytest.fixture
def identity2(tmp_path):
    path = tmp_path / "identity2.json"
    save_matrix(path, np.eye(2))
    return str(path)


@pytest.fixture
def real_matrix(tmp_path, rng):
    path = tmp_path / "planted_real.json"
    save_matrix(path, planted_matrix(rng, 4, "real").matrix)
    return str(path)


@pytest.fixture
def paired_matrix(tmp_path, rng):
    path = tmp_path / "planted_paired.json"
    save_matrix(path, planted_matrix(rng, 4, "paired").matrix)
    return str(path)


@pytest.fixture
def unpaired_matrix(tmp_path, rng):
    path = tmp_path / "unpaired.json"
    save_matrix(path, planted_matrix(rng, 3, "unpaired").matrix)
    return str(path)


def test_analyze_identity(identity2, capsys):
    assert cli_main(["analyze", identity2]) == 0
    out = capsys.readouterr().out
    assert "all_real" in out


def test_analyze_json_output(real_matrix, capsys):
    assert cli_main(["analyze", "--output", "json", real_matrix]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["spectrum_class"] == "all_real"
    assert payload["exact_symmetry"] is True


def test_metric_on_unpaired_exits_one(unpaired_matrix, capsys):
    assert cli_main(["metric", unpaired_matrix]) == 1
    assert "UnpairedSpectrum" in capsys.readouterr().err


def test_metric_on_paired(paired_matrix, capsys):
    assert cli_main(["metric", "--output", "json", paired_matrix]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["positive_definite"] is False
    assert payload["intertwining_residual"] <= 1e-10


def test_hermitize_real_spectrum(real_matrix, capsys):
    assert cli_main(["hermitize", "--output", "json", real_matrix]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["hermiticity_residual"] < 1e-10
    assert payload["A"]["n"] == 4


def test_hermitize_paired_exits_one(paired_matrix, capsys):
    assert cli_main(["hermitize", paired_matrix]) == 1
    assert "SpectrumNotReal" in capsys.readouterr().err


def test_tau_with_coefficients(tmp_path, rng, capsys):
    h = planted_matrix(rng, 3, "real", degenerate=False).matrix
    matrix_path = tmp_path / "m.json"
    save_matrix(matrix_path, h)
    coeffs = CoefficientFamily(tuple(2.0 * np.eye(1, dtype=complex) for _ in range(3)))
    coeff_path = tmp_path / "c.json"
    save_coefficients(coeff_path, coeffs)
    assert cli_main(["tau", str(matrix_path), "--coeffs", str(coeff_path)]) == 0
    assert "intertwining_residual" in capsys.readouterr().out


def test_symmetry_command(paired_matrix, capsys):
    assert cli_main(["symmetry", "--output", "json", paired_matrix]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["exact_symmetry"] is False
    assert payload["commutation_residual"] <= 1e-10


def test_evolve_check(real_matrix):
    assert cli_main(["evolve-check", real_matrix, "--t", "0.7"]) == 0


def test_evolve_check_requires_t(real_matrix, capsys):
    assert cli_main(["evolve-check", real_matrix]) == 2


def test_pt_model_runs(capsys, tmp_path):
    out_path = tmp_path / "h.json"
    code = cli_main(
        ["pt-model", "--n", "21", "--L", "5", "--eps", "0.1", "--output", "json",
         "--save", str(out_path)]
    )
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["parity_intertwining_residual"] == 0.0
    assert payload["pt_commutation_residual"] == 0.0
    assert payload["eta_intertwining_residual"] <= 1e-9
    assert out_path.exists()


def test_factor_command(tmp_path, rng, capsys):
    c = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    c = (c + c.T) / 2
    path = tmp_path / "c.json"
    save_matrix(path, c)
    assert cli_main(["factor", "--output", "json", str(path)]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["residual"] <= 1e-10


def test_missing_file_exits_two(capsys):
    assert cli_main(["analyze", "/nonexistent/m.json"]) == 2


def test_malformed_json_exits_two(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    assert cli_main(["analyze", str(path)]) == 2


def test_wrong_length_data_exits_two(tmp_path, capsys):
    path = tmp_path / "short.json"
    path.write_text(json.dumps({"n": 2, "data": [[1.0, 0.0]]}))
    assert cli_main(["analyze", str(path)]) == 2


def test_usage_error_exits_two(capsys):
    assert cli_main(["no-such-command"]) == 2


def test_tolerance_flags_are_plumbed(identity2, capsys):
    code = cli_main(["analyze", "--tol", "1e-8", "--cluster-gap", "1e-6", identity2])
    assert code == 0
    assert "all_real" in capsys.readouterr().out
