import io
import json
import subprocess
import sys

import pytest

from qsing.cli import format_record, has_float, main, parse_record

D4 = {"central": -2, "arms": [[-2], [-2], [-2]]}


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def records(text):
    return [parse_record(line) for line in text.splitlines() if line]


def test_resolve_lattice():
    code, out = run(["resolve", "cyclic:7/3", "--lattice"])
    assert code == 0
    (rec,) = records(out)
    assert rec["lattice"] == [[0, 7], [1, 3], [3, 2], [5, 1], [7, 0]]
    assert rec["schema"] == 1
    assert (rec["mGamma"], rec["route"], rec["hj"], rec["dual"]) == (9, "Table1Row3", [3, 2, 2], [2, 4])
    assert "charts" not in rec and "monomials" not in rec


def test_resolve_all_sections():
    code, out = run(["resolve", "cyclic:7/3", "--charts", "--monomials", "--lattice"])
    (rec,) = records(out)
    assert rec["monomials"] == [[7, 0], [4, 1], [1, 2], [0, 7]]
    assert rec["charts"][0] == {"eta": [-3, 1], "xi": [7, 0]}
    assert [t["coefficient"] for t in rec["transitions"]] == [3, 2, 2]


def test_resolve_tetra():
    code, out = run(["resolve", "tetra:7"])
    assert code == 0 and records(out)[0]["mGamma"] == 19


def test_resolve_md():
    code, out = run(["resolve", "cyclic:5/1", "--format", "md"])
    assert code == 0 and out.startswith("| field | value |")
    assert "| mGamma | 5 |" in out


@pytest.mark.parametrize(
    "argv, code, error",
    [
        (["resolve", "cyclic:6/3"], 3, "NotCoprime"),
        (["resolve", "cyclic:7/7"], 3, "QOutOfRange"),
        (["resolve", "idx3tetra:4"], 3, "TableTwoConditionViolated"),
        (["resolve", "cyclic:seven"], 2, "ParseError"),
        (["resolve", "dihedral:3,5"], 4, "DivisorDataRequired"),
    ],
)
def test_resolve_errors(argv, code, error, capsys):
    got, _ = run(argv)
    assert got == code
    err = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    assert err["error"] == error and err["schema"] == 1


def test_divisor_file(tmp_path):
    path = tmp_path / "d.json"
    path.write_text(json.dumps({"central": -3, "arms": [[-2], [-2], [-2, -2]]}))
    code, out = run(["resolve", "dihedral:3,5", "--divisor-file", str(path)])
    assert code == 0
    rec = records(out)[0]
    assert (rec["route"], rec["mGamma"], rec["embeddingDim"]) == ("Table1Row4", 16, 4)


def test_divisor_file_lookup_by_label(tmp_path):
    path = tmp_path / "d.json"
    path.write_text(json.dumps([
        {"label": "dihedral:5,3", "central": -4, "arms": [[-2], [-2], [-2]]},
        {"label": "dihedral:3,5", "central": -3, "arms": [[-2], [-2], [-2, -2]]},
    ]))
    code, out = run(["resolve", "dihedral:3,5", "--divisor-file", str(path)])
    assert records(out)[0]["mGamma"] == 16


def test_bad_divisor_file(tmp_path, capsys):
    path = tmp_path / "d.json"
    path.write_text(json.dumps({"central": -1, "arms": [[-2], [-2], [-2]]}))
    code, _ = run(["resolve", "dihedral:3,5", "--divisor-file", str(path)])
    assert code == 3
    assert "MinimalityViolation" in capsys.readouterr().err


def test_table1():
    code, out = run(["table1", "--pmax", "7"])
    recs = {r["group"]: r for r in records(out)}
    assert (recs["cyclic:3/1"]["dGamma"], recs["cyclic:3/1"]["mGamma"]) == (5, 2)
    assert (recs["cyclic:5/1"]["dGamma"], recs["cyclic:5/1"]["mGamma"]) == (9, 5)
    assert (recs["cyclic:7/3"]["dGamma"], recs["cyclic:7/3"]["mGamma"]) == (11, 9)
    assert "cyclic:7/6" not in recs and "cyclic:2/1" not in recs
    row4 = [r for r in recs.values() if r["row"] == 4]
    assert row4 and all(r["mGamma"] == r["mClosedForm"] for r in row4)


def test_table1_md():
    code, out = run(["table1", "--pmax", "5", "--format", "md"])
    assert code == 0 and "| cyclic:3/1 | 1 | 5 | 2 |" in out


def test_table3():
    code, out = run(["table3"])
    recs = records(out)
    by = {(r["family"], r["residue"]): r for r in recs}
    assert (by["tetra", 1]["smallestL"], by["tetra", 1]["mGamma"]) == (7, 19)
    assert (by["octa", 11]["smallestL"], by["octa", 11]["mGamma"]) == (11, 17)
    assert (by["icosa", 1]["smallestL"], by["icosa", 1]["mGamma"]) == (31, 25)


def test_verify_small():
    code, out = run(["verify", "--pmax", "2", "--lmax", "10"])
    assert code == 0
    recs = records(out)
    assert all(r["checked"] == 1 for r in recs if r.get("sweep") in ("hj_soundness", "determinant"))
    assert recs[-1]["failed"] == 0


def test_verify_fault(capsys):
    code, out = run(["verify", "--pmax", "10", "--inject-fault", "7/3"])
    assert code == 1
    assert "cyclic:7/3" in capsys.readouterr().err


def test_verify_bad_bounds():
    assert run(["verify", "--pmax", "1"])[0] == 2


def test_output_deterministic_and_float_free():
    for argv in (["resolve", "cyclic:12/5", "--charts", "--lattice", "--monomials"],
                 ["table1", "--pmax", "12"], ["table3"], ["verify", "--pmax", "10"]):
        first, second = run(argv)[1], run(argv)[1]
        assert first == second
        for rec in records(first):
            assert not has_float(rec)
            assert parse_record(format_record(rec)) == rec
            assert format_record(parse_record(format_record(rec))) == format_record(rec)


def test_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qsing.cli", "resolve", "cyclic:2/1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["route"] == "HyperkahlerA1"
