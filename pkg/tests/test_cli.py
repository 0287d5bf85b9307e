import json

import jsonschema
import pytest

from hkcoiso.cli import main, load_schema

CASES = [
    ("coisotropic", ["--preset", "u2-m2-e", "--n", "2", "--i", "2", "--mode", "cle"]),
    ("coisotropic", ["--preset", "u2-m2", "--n", "3", "--i", "2", "--route", "fujiki"]),
    ("harmonic", ["--preset", "u-m2", "--k", "3"]),
    ("fujiki", ["--preset", "u-m2", "--n", "2", "--mu", "3/2"]),
    ("gorenstein", ["--preset", "u2-m2", "--n", "2"]),
    ("chow-demo", ["--points", "2", "--n", "2"]),
]


def run_cli(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("command,args", CASES)
def test_json_matches_schema(capsys, command, args):
    code, out, _ = run_cli(capsys, [command] + args)
    assert code == 0
    jsonschema.validate(json.loads(out), load_schema(command))


def test_degree4_cli(capsys):
    _, out, _ = run_cli(capsys, [CASES[0][0]] + CASES[0][1])
    doc = json.loads(out)
    assert doc["dimension"] == 3
    assert doc["status"] == "asserted by theory: exactly 3"


def test_chow_table(capsys):
    _, out, _ = run_cli(capsys, ["chow-demo", "--points", "2", "--n", "2"])
    assert json.loads(out)["N_dims"] == [6, 3, 1]
    code, out, _ = run_cli(capsys, ["chow-demo", "--points", "2", "--n", "2", "--format", "text"])
    assert code == 0 and "N_k" in out


def test_csv_sweep(capsys):
    code, out, _ = run_cli(capsys, ["coisotropic", "--preset", "u2-m2-e", "--n", "2", "--format", "csv"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "i,cl,cle,full"
    assert lines[2].split(",")[2] == "3"


def test_output_file(capsys, tmp_path):
    dest = tmp_path / "h.json"
    code, out, _ = run_cli(capsys, ["harmonic", "--preset", "u", "--k", "2", "--out", str(dest)])
    assert code == 0 and out == ""
    assert json.loads(dest.read_text())["dim"] == 2


@pytest.mark.parametrize("argv", [
    ["coisotropic", "--preset", "u-m2", "--n", "2", "--i", "1"],          # tr too small
    ["coisotropic", "--preset", "u2-m2", "--n", "2", "--i", "2", "--mode", "cle"],  # rho = 1
    ["coisotropic", "--preset", "u2-m2", "--n", "2", "--i", "3"],
    ["harmonic", "--preset", "k3n2", "--k", "2"],
    ["fujiki", "--preset", "u", "--mu", "0"],
    ["fujiki", "--preset", "u", "--mu", "x"],
    ["harmonic", "--preset", "u", "--ns", "9"],
    ["chow-demo", "--points", "0"],
])
def test_config_errors_exit_2(capsys, argv):
    code, _, err = run_cli(capsys, argv)
    assert code == 2
    assert err.startswith("hkcoiso:")


def test_large_preset_allowed(capsys):
    code, out, _ = run_cli(capsys, ["harmonic", "--preset", "k3n2", "--allow-large", "--k", "1"])
    assert code == 0 and json.loads(out)["dim"] == 23


def test_gram_file(capsys, tmp_path):
    doc = {"gram": [[0, 1, 0], [1, 0, 0], [0, 0, "-2"]], "ns_basis": [[0, 0, 1]]}
    path = tmp_path / "lat.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run_cli(capsys, ["fujiki", "--gram-file", str(path), "--n", "2"])
    assert code == 0
    assert [c["mu_i"] for c in json.loads(out)["constants"]] == ["1", "5/3", "5"]


@pytest.mark.parametrize("doc", [
    {"gram": [[1, 1], [1, 1]]},
    {"gram": [[0, 1], [1, 0]], "extra": 1},
    {"gram": [[0, 1], [1, "0.5"]]},
    {"ns_basis": [[1, 0]]},
])
def test_bad_gram_file(capsys, tmp_path, doc):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, _, _ = run_cli(capsys, ["harmonic", "--gram-file", str(path)])
    assert code == 2


def test_missing_gram_file(capsys, tmp_path):
    code, _, _ = run_cli(capsys, ["harmonic", "--gram-file", str(tmp_path / "nope.json")])
    assert code == 2


def test_observed_status(capsys):
    _, out, _ = run_cli(capsys, ["coisotropic", "--preset", "u2-m2-e", "--n", "3", "--i", "3", "--mode", "cle"])
    doc = json.loads(out)
    assert doc["dimension"] == 4 and doc["status"] == "observed, not asserted"
