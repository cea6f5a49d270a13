import json
import subprocess
import sys
from pathlib import Path

import pytest

from weilcensus.cli import main

CONFIGS = Path(__file__).resolve().parents[1] / "configs"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_zeta_table(capsys):
    code, out, _ = run_cli(capsys, "zeta", str(CONFIGS / "zeta_elliptic_f2.toml"))
    assert code == 0
    assert "T^2 + 2" in out
    assert " 1             3             3" in out


def test_zeta_counts_only_config(capsys):
    code, out, _ = run_cli(capsys, "zeta", str(CONFIGS / "zeta_counts_genus2.toml"),
                           "--nmax", "4", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["ch"] == ["4", "-4", "4", "-2", "1"]
    assert doc["rows"][0]["curve_points"] == "1"
    assert doc["rows"][0]["picard_order"] == "3"


def test_zeta_invalid_counts_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.toml"
    bad.write_text('[curve]\nq = 2\ngenus = 1\ncounts = [6]\n')
    code, _, err = run_cli(capsys, "zeta", str(bad))
    assert code == 2
    assert "error" in err


def test_torsion_pass_and_csv(capsys):
    code, out, _ = run_cli(capsys, "torsion", str(CONFIGS / "torsion_f2.toml"),
                           "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "ell,d,j,N,increment"
    assert "3,2,2,729,2" in lines


def test_torsion_ell_equals_p_rejected(capsys):
    code, _, err = run_cli(capsys, "torsion", str(CONFIGS / "torsion_f2.toml"),
                           "--ell", "2")
    assert code == 2
    assert "characteristic" in err


def test_torsion_trivial_variety(tmp_path, capsys):
    cfg = tmp_path / "t.toml"
    cfg.write_text('[weil]\nq = 4\nch = [1]\n[run]\nell = 3\nnmax = 5\n')
    code, out, _ = run_cli(capsys, "torsion", str(cfg))
    assert code == 0 and "PASS" in out


def test_dihedral_row_values(capsys):
    code, out, _ = run_cli(capsys, "dihedral", str(CONFIGS / "dihedral_synthetic.toml"),
                           "--format", "csv", "--nmax", "12")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,d,j,T_dihedral_ell_adic,T_dihedral_mod_ell,ratio_v_ell"
    assert lines[1].startswith("1,1,0,6,2,")
    assert lines[2].startswith("2,1,0,90,10,")
    assert len(lines) == 13


def test_dihedral_empty_labels(tmp_path, capsys):
    cfg = tmp_path / "d.toml"
    cfg.write_text(
        "[census.base]\nq = 2\ngenus = 2\nch = [4, -4, 4, -2, 1]\n"
        "[run]\nell = 3\nnmax = 4\n"
    )
    code, out, _ = run_cli(capsys, "dihedral", str(cfg), "--format", "csv")
    assert code == 0
    assert all(line.split(",")[3] == "0" for line in out.strip().splitlines()[1:])


def test_dihedral_invalid_e_beta(tmp_path, capsys):
    cfg = tmp_path / "d.toml"
    cfg.write_text(
        "[census.base]\nq = 2\ngenus = 2\nch = [4, -4, 4, -2, 1]\n"
        "[[census.beta]]\nn_beta = 1\ne_beta = 3\ncover_ch = [8, 0, 4, 0, 2, 0, 1]\n"
        "[run]\nell = 3\n"
    )
    code, _, err = run_cli(capsys, "dihedral", str(cfg))
    assert code == 2 and "not 1 or 2" in err


def test_dihedral_threads_env(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("WEIL_CENSUS_THREADS", "3")
    code, out, _ = run_cli(capsys, "dihedral", str(CONFIGS / "dihedral_synthetic.toml"),
                           "--format", "csv", "--nmax", "8")
    assert code == 0
    rows = [line.split(",")[0] for line in out.strip().splitlines()[1:]]
    assert rows == [str(n) for n in range(1, 9)]  # ordered by n regardless of pool


def test_twistcount_oracle_agreement(capsys):
    code, out, _ = run_cli(capsys, "twistcount", str(CONFIGS / "twistcount_small.toml"),
                           "--format", "json")
    assert code == 0
    doc = json.loads(out)
    for row in doc["data"]:
        if row["oracle"] is not None:
            assert row["formula"] == row["oracle"]


def test_recfit_json(capsys):
    code, out, _ = run_cli(capsys, "recfit", str(CONFIGS / "sequence_elliptic_f2.txt"),
                           "--q", "2", "--g", "1", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["fits"] and doc["k"] == "4"
    assert doc["drinfeld_shape"] is True


def test_strict_mode_rejects_unknown_keys(tmp_path, capsys):
    cfg = tmp_path / "z.toml"
    cfg.write_text('[curve]\nq = 2\ngenus = 1\ncounts = [3]\ntypo_key = 1\n')
    code, out, _ = run_cli(capsys, "zeta", str(cfg))
    assert code == 0  # default mode warns
    code, _, err = run_cli(capsys, "zeta", str(cfg), "--strict")
    assert code == 2 and "typo_key" in err


def test_floats_rejected(tmp_path, capsys):
    cfg = tmp_path / "z.toml"
    cfg.write_text('[curve]\nq = 2.0\ngenus = 1\ncounts = [3]\n')
    code, _, err = run_cli(capsys, "zeta", str(cfg))
    assert code == 2 and "exact integer" in err


def test_enum_cap_flag(tmp_path, capsys):
    cfg = tmp_path / "z.toml"
    cfg.write_text(
        '[curve]\nq = 2\ngenus = 1\n[curve.model]\ntype = "elliptic"\na = [0, 0, 1, 0, 0]\n'
    )
    code, _, err = run_cli(capsys, "zeta", str(cfg), "--enum-cap", "1")
    assert code == 2 and "cap" in err


def test_outputs_are_deterministic(capsys):
    outputs = set()
    for _ in range(2):
        code, out, _ = run_cli(capsys, "dihedral", str(CONFIGS / "dihedral_synthetic.toml"),
                               "--format", "json")
        assert code == 0
        outputs.add(out)
    assert len(outputs) == 1
    # a different factorization seed cannot change results
    code, out, _ = run_cli(capsys, "torsion", str(CONFIGS / "torsion_f2.toml"),
                           "--format", "csv")
    code2, out2, _ = run_cli(capsys, "torsion", str(CONFIGS / "torsion_f2.toml"),
                             "--format", "csv", "--seed", "12345")
    assert out == out2


def test_console_entry_point_runs():
    result = subprocess.run(
        [sys.executable, "-m", "weilcensus.cli", "zeta",
         str(CONFIGS / "zeta_elliptic_f2.toml"), "--format", "csv"],
        capture_output=True, text=True, timeout=300,
    )
    assert result.returncode == 0
    assert result.stdout.splitlines()[0] == "n,curve_points,picard_order"
