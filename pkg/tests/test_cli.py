"""CLI contract: subcommands, exit codes, formats, determinism."""

import json

import numpy as np
import pytest

from polco import matrix_to_json, named_state_names
from polco.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --- generate -> analyze round trips ------------------------------------

@pytest.mark.parametrize(
    "argv",
    [
        ("--kind", "haar-pure", "--dim", "2", "--seed", "1"),
        ("--kind", "haar-pure", "--dim", "3", "--seed", "2"),
        ("--kind", "haar-pure", "--dim", "4", "--split", "2x2", "--seed", "3"),
        ("--kind", "haar-pure", "--dim", "9", "--split", "3x3", "--seed", "4"),
        ("--kind", "mixed", "--dim", "2", "--rank", "1", "--seed", "5"),
        ("--kind", "mixed", "--dim", "2", "--seed", "6"),
        ("--kind", "mixed", "--dim", "3", "--rank", "2", "--seed", "7"),
        ("--kind", "mixed", "--dim", "3", "--seed", "8"),
    ],
)
def test_generate_analyze_roundtrip(tmp_path, capsys, argv):
    path = tmp_path / "input.json"
    code, _, _ = run_cli(capsys, "generate", *argv, "--out", str(path))
    assert code == 0
    code, out, err = run_cli(capsys, "analyze", "--input", str(path))
    assert code == 0, err
    doc = json.loads(out)
    assert "predictability_sq" in doc and "stokes" in doc


def test_generate_analyze_all_named_states(tmp_path, capsys):
    for name in named_state_names():
        path = tmp_path / f"{name}.json"
        code, _, _ = run_cli(capsys, "generate", "--kind", "named", "--name", name, "--out", str(path))
        assert code == 0
        code, out, err = run_cli(capsys, "analyze", "--input", str(path))
        assert code == 0, (name, err)


def test_analyze_bell_values(tmp_path, capsys):
    path = tmp_path / "bell.json"
    run_cli(capsys, "generate", "--kind", "named", "--name", "bell_phi_plus", "--out", str(path))
    code, out, _ = run_cli(capsys, "analyze", "--input", str(path))
    assert code == 0
    doc = json.loads(out)
    assert doc["entanglement_sq"] == pytest.approx(1.0, abs=1e-12)
    assert doc["predictability_sq"] == 0.0
    assert doc["coherence_hs_sq"] == 0.0
    np.testing.assert_allclose(doc["stokes"]["s"], [0, 0, 0], atol=1e-12)


def test_analyze_maximally_mixed_matrix(tmp_path, capsys):
    path = tmp_path / "mixed.json"
    path.write_text(json.dumps(matrix_to_json(np.eye(3) / 3)))
    code, out, _ = run_cli(capsys, "analyze", "--input", str(path))
    assert code == 0
    doc = json.loads(out)
    assert doc["linear_entropy_sq"] == pytest.approx(1.0, abs=1e-12)
    assert doc["entanglement_sq"] is None


def test_analyze_partially_entangled_state(tmp_path, capsys):
    path = tmp_path / "partial.json"
    doc = {
        "dim": 4,
        "re": [np.sqrt(0.8), 0.0, 0.0, np.sqrt(0.2)],
        "im": [0.0, 0.0, 0.0, 0.0],
        "split": [2, 2],
    }
    path.write_text(json.dumps(doc))
    code, out, _ = run_cli(capsys, "analyze", "--input", str(path))
    assert code == 0
    assert json.loads(out)["entanglement_sq"] == pytest.approx(0.64, abs=1e-12)


# --- exit codes -----------------------------------------------------------

def test_analyze_malformed_json_exits_2(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    code, _, err = run_cli(capsys, "analyze", "--input", str(path))
    assert code == 2
    assert "parse" in err


def test_analyze_invalid_density_exits_3(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(matrix_to_json(np.diag([1.1, -0.1]))))
    code, _, err = run_cli(capsys, "analyze", "--input", str(path))
    assert code == 3
    assert "invalid" in err


def test_analyze_unnormalized_state_exits_3(tmp_path, capsys):
    path = tmp_path / "unnorm.json"
    path.write_text(json.dumps({"dim": 2, "re": [1.0, 1.0], "im": [0.0, 0.0]}))
    code, _, _ = run_cli(capsys, "analyze", "--input", str(path))
    assert code == 3


def test_verify_unknown_relation_exits_2(capsys):
    code, _, err = run_cli(capsys, "verify", "--relation", "bogus", "--samples", "5")
    assert code == 2
    assert "unknown relation" in err


def test_generate_unknown_name_exits_2(tmp_path, capsys):
    code, _, _ = run_cli(
        capsys, "generate", "--kind", "named", "--name", "bogus", "--out", str(tmp_path / "x.json")
    )
    assert code == 2


def test_usage_error_exits_2(capsys):
    assert run_cli(capsys, "analyze")[0] == 2  # missing --input
    assert run_cli(capsys, "nonsense")[0] == 2


def test_verify_bad_samples_exits_2(capsys):
    code, _, _ = run_cli(capsys, "verify", "--relation", "pct", "--samples", "0")
    assert code == 2


# --- verify ------------------------------------------------------------------

def test_verify_passing_campaign(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--relation", "qutrit-triality", "--samples", "200", "--seed", "7"
    )
    assert code == 0
    summary = json.loads(out)
    assert summary["failures"] == 0
    assert summary["n_samples"] == 200
    assert summary["max_residual"] < 1e-9


def test_verify_all_relations_pass(capsys):
    from polco import relation_ids

    for relation in relation_ids():
        code, out, _ = run_cli(
            capsys, "verify", "--relation", relation, "--samples", "100", "--seed", "21"
        )
        assert code == 0, (relation, out)


def test_verify_failing_campaign_exits_1(capsys):
    code, out, _ = run_cli(
        capsys,
        "verify", "--relation", "pct", "--samples", "20", "--seed", "3", "--tol", "1e-30",
    )
    assert code == 1
    assert json.loads(out)["failures"] > 0


def test_verify_rank_flag(capsys):
    code, out, _ = run_cli(
        capsys,
        "verify", "--relation", "qutrit-mixed-triality",
        "--samples", "50", "--seed", "9", "--rank", "3",
    )
    assert code == 0 and json.loads(out)["failures"] == 0


# --- determinism ----------------------------------------------------------------

def test_generate_byte_identical_for_same_seed(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run_cli(capsys, "generate", "--kind", "haar-pure", "--dim", "4", "--split", "2x2",
            "--seed", "42", "--out", str(a))
    run_cli(capsys, "generate", "--kind", "haar-pure", "--dim", "4", "--split", "2x2",
            "--seed", "42", "--out", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_verify_byte_identical_for_same_seed(capsys):
    args = ("verify", "--relation", "qubit-triality", "--samples", "50", "--seed", "42")
    _, out_a, _ = run_cli(capsys, *args)
    _, out_b, _ = run_cli(capsys, *args)
    assert out_a == out_b


def test_env_seed_default(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("POLCO_SEED", "777")
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run_cli(capsys, "generate", "--kind", "haar-pure", "--dim", "2", "--out", str(a))
    run_cli(capsys, "generate", "--kind", "haar-pure", "--dim", "2", "--seed", "777", "--out", str(b))
    assert a.read_bytes() == b.read_bytes()


# --- output formats ----------------------------------------------------------------

def test_csv_and_json_values_identical(tmp_path, capsys):
    path = tmp_path / "state.json"
    run_cli(capsys, "generate", "--kind", "haar-pure", "--dim", "4", "--split", "2x2",
            "--seed", "11", "--out", str(path))
    _, json_out, _ = run_cli(capsys, "analyze", "--input", str(path), "--format", "json")
    _, csv_out, _ = run_cli(capsys, "analyze", "--input", str(path), "--format", "csv")
    doc = json.loads(json_out)
    csv_values = dict(line.split(",", 1) for line in csv_out.splitlines()[1:])
    for key in ("predictability_sq", "coherence_hs_sq", "entanglement_sq", "linear_entropy_sq"):
        assert csv_values[key] == repr(doc[key])  # shortest round-trip text, both formats
    for index, component in enumerate(doc["stokes"]["s"]):
        assert csv_values[f"stokes.s.{index}"] == repr(component)


def test_table_format_renders(tmp_path, capsys):
    path = tmp_path / "state.json"
    run_cli(capsys, "generate", "--kind", "named", "--name", "bell_phi_plus", "--out", str(path))
    code, out, _ = run_cli(capsys, "analyze", "--input", str(path), "--format", "table")
    assert code == 0
    assert "predictability_sq" in out


# --- constants -----------------------------------------------------------------------

def test_constants_structure(capsys):
    code, out, _ = run_cli(capsys, "constants")
    assert code == 0
    doc = json.loads(out)
    f_entries = {tuple(entry[:3]): entry[3] for entry in doc["f_nonzero"]}
    assert f_entries[(1, 2, 3)] == pytest.approx(1.0, abs=1e-12)
    d_entries = {tuple(entry[:3]): entry[3] for entry in doc["d_nonzero"]}
    assert d_entries[(1, 1, 8)] == pytest.approx(1 / np.sqrt(3), abs=1e-12)
    assert (1, 1, 1) not in d_entries  # zero entries are pruned
    lam8 = doc["generators"]["3"][7]
    np.testing.assert_allclose(
        lam8["re"], (np.diag([1, 1, -2]) / np.sqrt(3)).tolist(), atol=1e-15
    )
    assert np.abs(np.asarray(lam8["im"])).max() == 0.0


def test_constants_table_format(capsys):
    code, out, _ = run_cli(capsys, "constants", "--format", "table")
    assert code == 0
    assert "f 1 2 3 1.0" in out
