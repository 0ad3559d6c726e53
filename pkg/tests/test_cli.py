import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from zerosum.cli import main
from zerosum.sequences import Sequence

GOLDEN = Path(__file__).parent / "golden"


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), stdout=out)
    return code, out.getvalue()


@pytest.mark.parametrize(
    "argv,golden",
    [
        (["solve", "--seq", "p=7;A=1,6,2,5"], "solve_p7_1625.json"),
        (["solve", "--seq", "p=5;A=1,1,1,2", "--alpha", "2"], "solve_p5_1112_a2.json"),
        (["solve", "--seq", "p=5;A=1,1,1,2", "--alpha", "2", "--enum", "mitm"], "solve_p5_1112_a2.json"),
    ],
)
def test_solve_golden(argv, golden):
    code, out = run(*argv)
    assert code == 0
    assert json.loads(out) == json.loads((GOLDEN / golden).read_text())


def test_verbs():
    assert json.loads(run("dim", "--seq", "p=7;A=6,1,5,2,4,3")[1])["dim"] == 4
    d = json.loads(run("minimal", "--seq", "p=5;A=1,1,1,4")[1])
    assert d["basis"] == [[1, 4], [2, 4], [3, 4]] and d["count"] == 3
    d = json.loads(run("classify", "--seq", "p=7;A=6,1,5,2,4,3")[1])
    assert d["tag"] == "ZS_Sporadic7" and d["verified_dim"] == 4
    d = json.loads(run("reconstruct", "--seq", "p=7;A=6,1,5,2,4,3")[1])
    assert len(d["classes"]) == 2 and d["includes_collinear"]
    d = json.loads(run("affine", "--seq", "p=5;A=1,1,1,2", "--alpha", "2")[1])
    assert d["I"] == [4] and d["dim"] == d["reduced_dim"] == 3
    d = json.loads(run("ratio", "--seq", "p=7;A=6,1,5,2,4,3", "--b", "6,1,3,4,2,5")[1])
    assert d["d"] == 3 and d["conditions"]["passed"]


def test_text_output():
    code, out = run("dim", "--seq", "p=7;A=6,1,5,2,4,3", "--output", "text")
    assert code == 0 and out.strip() == "4"
    code, out = run("verify", "--p", "5", "--l", "5", "--output", "text")
    assert out.startswith("checked 14  failures 0")


def test_verify_exit_codes():
    code, out = run("verify", "--p", "5", "--l", "5", "--checks", "all")
    assert code == 0 and json.loads(out)["checked"] == 14
    code, out = run("verify", "--p", "7", "--l", "6", "--filter", "zero_sum")
    assert code == 1 and json.loads(out)["failures"]


@pytest.mark.parametrize(
    "argv",
    [
        ["solve", "--seq", "p=6;A=1"],
        ["solve", "--seq", "p=7;A=0,1"],
        ["solve"],
        ["ratio", "--seq", "p=7;A=1,2"],
        ["ratio", "--seq", "p=7;A=1,2", "--b", "1"],
        ["verify", "--p", "5"],
        ["verify", "--p", "5", "--l", "5", "--shard", "3/2"],
        ["verify", "--p", "5", "--l", "5", "--shard", "x"],
        ["verify", "--p", "17", "--l", "20"],
        ["reconstruct", "--seq", "p=13;A=1,1,1,1,1,1,1"],
    ],
)
def test_bad_input_exit_2(argv, capsys):
    code, _ = run(*argv)
    assert code == 2
    assert capsys.readouterr().err.count("\n") == 1


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as e:
        main(["frobnicate"])
    assert e.value.code == 2


def test_sequence_text_round_trip():
    d = json.loads(run("affine", "--seq", "p=7;A=3,3,5", "--alpha", "6")[1])
    A = Sequence.parse(d["reduced"])
    assert str(A) == d["reduced"] and A.p == 7


def test_console_script():
    r = subprocess.run([sys.executable, "-m", "zerosum.cli", "dim", "--seq", "p=5;A=1,2,2"], capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)["dim"] == 1
