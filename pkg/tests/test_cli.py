"""Command-line entry points exercised through main(argv)."""

import csv
import io
import json

import numpy as np
import pytest

from fermap.cli import main
from fermap.fcidump import IntegralFile, dump


def run_cli(argv, capsys):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_sweep_csv(capsys):
    code, out = run_cli(
        ["sweep", "--dim", "1", "--sizes", "2,4", "--exponents", "8.75"], capsys
    )
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows[0]["JW_Qbts"] == "4"
    assert rows[1]["BKSF_TWt"] == "92"


def test_sweep_json_to_file(tmp_path, capsys):
    target = tmp_path / "sweep.json"
    code, _ = run_cli(
        [
            "sweep", "--dim", "1", "--sizes", "2", "--exponents", "8.75",
            "--format", "json", "--out", str(target),
        ],
        capsys,
    )
    assert code == 0
    decoded = json.loads(target.read_text())
    assert decoded[0]["bksf_qubits"] == 2


def test_transform_json(tmp_path, capsys):
    rng = np.random.default_rng(0)
    h = rng.normal(size=(2, 2))
    h = 0.5 * (h + h.T)
    eri = np.zeros((2,) * 4)
    eri[0, 0, 0, 0] = eri[1, 1, 1, 1] = 0.6
    eri[0, 0, 1, 1] = eri[1, 1, 0, 0] = 0.3
    path = tmp_path / "h2.fcidump"
    dump(IntegralFile(2, 2, h, eri, constant=0.7), path)
    code, out = run_cli(["transform", str(path), "--cutoff", "0"], capsys)
    assert code == 0
    reports = {r["label"]: r for r in json.loads(out)}
    assert reports["jw"]["qubits"] == 4
    assert reports["ose"]["qubits"] >= 1


def test_bounds_listing(capsys):
    code, out = run_cli(["bounds", "--molecules", "sio"], capsys)
    assert code == 0
    assert "92" in out and "182" in out and "28" in out


def test_verify_random_passes(capsys):
    code, out = run_cli(["verify", "--random", "3"], capsys)
    assert code == 0
    assert "PASS" in out


def test_verify_lattice_with_ancilla(capsys):
    code, out = run_cli(
        [
            "verify", "--dim", "1", "--sizes", "2", "--exponents", "8.75",
            "--ancilla", "--tolerance", "1e-8",
        ],
        capsys,
    )
    assert code == 0
    assert "ok" in out


def test_compare_subcommand(capsys):
    code, out = run_cli(
        ["compare", "--dim", "1", "--sizes", "2,4", "--exponents", "8.75"], capsys
    )
    assert code == 0
    assert "PASS" in out


def test_probe_subcommand(capsys):
    code, out = run_cli(["probe", "--modes", "4,6,8"], capsys)
    assert code == 0
    assert "R^2" in out


def test_unknown_command_exits():
    with pytest.raises(SystemExit):
        main(["frobnicate"])
