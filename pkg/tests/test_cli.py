import json
import subprocess
import sys

import pytest

from isofib.cli import main

KLEIN = ["fibration", "--group", "psl2:7", "--v1", "genus=0; a,b,(a*b)^-1", "--v2", "same"]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def canonical(text):
    return json.dumps(json.loads(text), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def test_cqs_text(capsys):
    code, out, _ = run(capsys, "cqs", "11", "7")
    assert code == 0
    assert out.split() == ["11", "7", "[2,3,2,2]", "8", "10+4/11", "-6/11"]


def test_cqs_json(capsys):
    code, out, _ = run(capsys, "cqs", "2", "1", "--format", "json")
    assert json.loads(out) == {"n": 2, "q": 1, "expansion": [2], "q_prime": 1, "B": "3", "h": "0"}
    assert canonical(out) == out


def test_cqs_not_coprime(capsys):
    code, out, err = run(capsys, "cqs", "4", "2")
    assert code == 2 and not out and "coprime" in err


def test_full_table(capsys):
    code, out, _ = run(capsys, "appendix-b", "--max-n", "14", "--format", "json")
    rows = {(r["n"], r["q"]): r for r in json.loads(out)}
    assert (10, 7) in rows and (10, 9) in rows
    assert rows[(12, 5)]["B"] == "53/6" and rows[(14, 3)]["h"] == "-19/7"
    _, out9, _ = run(capsys, "appendix-b", "--max-n", "9", "--format", "json")
    assert len(json.loads(out9)) == 27
    assert run(capsys, "appendix-b", "--max-n", "1")[0] == 2


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "2", "--format", "json")
    rows = json.loads(out)
    assert len(rows) == 6
    assert rows[-1] == {"genus": 2, "type": ["1/2", "2/5", "1/10"], "c": 4, "delta": "12/5",
                        "label": "Irreducible"}
    _, out, _ = run(capsys, "classify", "--genus", "1")
    assert "3 types" in out and "2+2/3" in out
    code, _, err = run(capsys, "classify", "0")
    assert code == 2 and "infinite family" in err


def test_fibration_report(capsys):
    code, out, _ = run(capsys, *KLEIN, "--format", "json")
    a = json.loads(out)
    assert code == 0
    assert a["invariants"] == {"K2": -6, "e": 18, "q": 0, "pg": 0, "chi": 1}
    assert [f["minus_one"] for f in a["fibres"]] == [False, False, True]
    assert a["fibres"][2]["c"] == 2 and a["fibres"][2]["delta"] == "5"
    assert a["minimal_model"]["K2"] == -4 and not a["bound"]["violations"]
    assert canonical(out) == out


def test_quasi_bundle_branch(capsys):
    code, out, _ = run(capsys, "fibration", "--group", "abelian:2x2",
                       "--v1", "genus=1; x,x|y,1", "--v2", "genus=1; y,y|x,1")
    assert code == 0 and "quasi-bundle: K^2 = 8 chi" in out


def test_twelve_nodes(capsys):
    _, out, _ = run(capsys, "fibration", "--group", "cyclic:2", "--v1", "x,x,x,x,x,x",
                    "--v2", "genus=1; x,x|x,x", "--format", "json")
    a = json.loads(out)
    assert (a["invariants"]["K2"], a["invariants"]["chi"]) == (4, 2)
    assert [f["delta"] for f in a["fibres"]] == ["6", "6"]


@pytest.mark.parametrize("argv", [
    ["fibration", "--group", "cyclic:2", "--v1", "x,x,x", "--v2", "same"],
    ["fibration", "--group", "cyclic:x", "--v1", "x,x", "--v2", "same"],
    ["fibration", "--group", "cyclic:3", "--v1", "y,y^2", "--v2", "same"],
    ["construct", "--set", "1/2,1/4", "--q", "0"],
    ["construct", "--set", "1/2,abc", "--q", "0"],
])
def test_invalid_input_exits_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and not out and err.startswith("isofib")


def test_construct(capsys):
    code, out, _ = run(capsys, "construct", "--set", "1/2,1/3,1/6", "--q", "1", "--format", "json")
    a = json.loads(out)
    assert code == 0 and a["construction"]["n"] == 6
    assert len(a["fibres"]) == 6
    assert all(f["minus_one"] and f["type"] == ["1/2", "1/3", "1/6"] for f in a["fibres"])
    _, out, _ = run(capsys, "construct", "--set", "1/3,1/3,1/3", "--q", "2", "--format", "json")
    inv = json.loads(out)["invariants"]
    assert inv["pg"] == inv["q"] == 2


def test_verify_only_groups(capsys):
    code, out, _ = run(capsys, "verify", "--only", "groups", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["ok"]
    assert {c["section"] for c in data["checks"]} == {"groups"}


def test_verify_mutation_fails(capsys):
    code, out, _ = run(capsys, "verify", "--only", "cqs-table", "--mutate", "h-sign")
    assert code == 1 and "FAIL" in out


def test_verify_unknown_section(capsys):
    assert run(capsys, "verify", "--only", "bogus")[0] == 2


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "isofib", "cqs", "7", "3"], capture_output=True, text=True)
    assert p.returncode == 0 and "[3,2,2]" in p.stdout


def test_full_verification_passes(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    assert "FAIL" not in out and out.strip().endswith("checks passed")
