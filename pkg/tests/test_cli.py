import json
import subprocess
import sys

import pytest

from ap3lattice.cli import main
from ap3lattice.poset import FinitePoset
from ap3lattice.tableaux import Tableau
from ap3lattice.triples import TripleSystem


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_count(capsys):
    assert run(capsys, "count", "--n", "4", "--object", "valid") == (0, "8\n")
    assert run(capsys, "count", "--n", "6", "--object", "Kn") == (0, "28\n")
    assert run(capsys, "count", "--n", "5", "--object", "Qn") == (0, "10\n")
    assert run(capsys, "count", "--n", "6", "--object", "Pn-ideals") == (0, "1024\n")
    assert run(capsys, "count", "--n", "5", "--object", "Mn") == (0, "64\n")


def test_guard(capsys):
    code, out = run(capsys, "count", "--n", "9", "--object", "Mn")
    assert code == 3 and out == ""
    code, _ = run(capsys, "hasse", "--n", "7", "--poset", "Mn")
    assert code == 3


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["count", "--n", "4", "--object", "nonsense"])
    assert exc.value.code == 2
    code, _ = run(capsys, "realize", "--n", "4", "--triples", "1,5,3")
    assert code == 2
    code, _ = run(capsys, "count", "--n", "1", "--object", "valid")
    assert code == 2


def test_enumerate_json_round_trips(capsys):
    code, out = run(capsys, "enumerate", "--n", "5", "--object", "valid", "--format", "json")
    systems = [TripleSystem.from_json(line) for line in out.splitlines()]
    assert code == 0 and len(systems) == 64 and len(set(systems)) == 64
    code, out = run(capsys, "enumerate", "--n", "6", "--object", "Kn", "--format", "json")
    ts = [Tableau.from_json(line) for line in out.splitlines()]
    assert len(ts) == 28 and ts == sorted(ts, key=Tableau.flat)


def test_enumerate_text(capsys):
    code, out = run(capsys, "enumerate", "--n", "4", "--object", "valid")
    assert out.splitlines() == ["{}", "1,2,3", "1,2,3;1,3,4", "1,2,3;2,3,4", "1,2,4", "1,2,4;2,3,4", "1,3,4", "2,3,4"]
    code, out = run(capsys, "enumerate", "--n", "6", "--object", "Un")
    assert out.count("# left1") == 1 and out.count("# right2") == 3
    for obj, count in (("KnL", 8), ("KnR1", 8), ("KnR2", 2)):
        code, out = run(capsys, "enumerate", "--n", "6", "--object", obj, "--format", "json")
        assert len(out.splitlines()) == count


def test_hasse(capsys):
    code, out = run(capsys, "hasse", "--n", "4", "--poset", "Mn", "--format", "dot")
    assert code == 0 and out.count("[label=") == 8 and out.count("->") == 10
    code, out = run(capsys, "hasse", "--n", "5", "--poset", "Pn", "--format", "json")
    p = FinitePoset.from_json(out)
    assert p.size == 10
    for poset in ("Phin", "Qn", "Kn", "Un"):
        code, out = run(capsys, "hasse", "--n", "6", "--poset", poset, "--format", "json")
        assert code == 0 and json.loads(out)["size"] > 0


def test_realize(capsys):
    assert run(capsys, "realize", "--n", "4", "--triples", "1,2,3;1,3,4") == (0, "1 2 3 5\n")
    assert run(capsys, "realize", "--n", "4", "--triples", "1,2,3;1,2,4") == (0, "infeasible\n")


def test_verify_small(capsys):
    code, out = run(capsys, "verify", "--n-max", "4", "--jobs", "1")
    assert code == 0 and "0 failed" in out


def test_console_script_module():
    out = subprocess.run([sys.executable, "-m", "ap3lattice", "count", "--n", "4", "--object", "valid"],
                         capture_output=True, text=True, check=True)
    assert out.stdout == "8\n"
