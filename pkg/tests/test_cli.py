import subprocess
import sys

import numpy as np
import pytest

from partsum import io
from partsum.cli import main
from partsum.distribution import random_parent
from partsum.katz import katz_g


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_limit_binomial(capsys):
    code, out, _ = run(capsys, "limit", "--katz", "0.5,0", "--S", "3")
    assert code == 0
    assert out.splitlines() == ["binomial k=2 p=0.166666666666667", "0.694444 0.277778 0.027778"]


def test_limit_boundary(capsys):
    code, out, err = run(capsys, "limit", "--katz", "1.2,0.4", "--S", "2")
    assert code == 1 and out == "" and "boundary" in err


def test_classify_boundary(capsys):
    code, out, _ = run(capsys, "classify", "--katz", "1.2,0.4", "--S", "2")
    assert code == 1
    lines = out.splitlines()
    assert lines[0] == "boundary"
    assert lines[1] == "path: alpha>beta -> alpha>1 -> alpha+beta-2<0 -> S=S*"


def test_classify_diagonal_provenance(capsys):
    code, out, _ = run(capsys, "classify", "--katz", "0.3,0.3", "--S", "5")
    assert code == 0 and out.startswith("deterministic\npath: alpha=beta")


def test_iterate_katz(capsys, tmp_path):
    trace = tmp_path / "t.csv"
    code, out, _ = run(capsys, "iterate", "--katz", "0.5,0", "--S", "3", "--trace", str(trace))
    assert code == 0
    assert out.splitlines()[-1] == "0.694444 0.277778 0.027778"
    assert trace.read_text().startswith("step,step_distance,rayleigh\n")


def test_iterate_g_table_and_parent_file(capsys, tmp_path):
    g = tmp_path / "g.csv"
    p = tmp_path / "p.csv"
    io.write_gtable(katz_g((0.2, 0.8), 6), g)
    io.write_distribution(random_parent(6, 1), p)
    code, out, _ = run(capsys, "iterate", "--g-table", str(g), "--parent", str(p))
    assert code == 0
    assert out.splitlines()[-1] == "1.000000 0.000000 0.000000 0.000000 0.000000 0.000000"


def test_iterate_random_parent_seed_env(capsys, monkeypatch):
    args = ("iterate", "--katz", "0.5,0", "--S", "4", "--parent", "random:3", "--steps", "5", "--tol", "1e-300")
    _, a, _ = run(capsys, *args)
    monkeypatch.setenv("PSL_SEED", "99")
    _, b, _ = run(capsys, *args)
    monkeypatch.setenv("PSL_SEED", "3")
    _, c, _ = run(capsys, *args)
    assert a == c and a != b


def test_iterate_alpha_equals_beta(capsys):
    # constant g converges only at rate O(S/n): the cap is reached
    code, out, err = run(capsys, "iterate", "--katz", "0.3,0.3", "--S", "5", "--parent", "uniform", "--steps", "20000")
    assert code == 1 and "no convergence" in err
    last = [float(x) for x in out.split(":")[1].split()]
    assert last[0] > 0.9997 and np.argmax(last) == 0


def test_scan(capsys, tmp_path):
    out = tmp_path / "scan.csv"
    code, stdout, _ = run(capsys, "scan", "--alpha", "0.5:0.5:1", "--beta", "0:0:1", "--S", "3", "--out", str(out))
    assert code == 0 and "1 rows" in stdout
    assert out.read_text().splitlines()[1] == "0.5,0,3,binomial,2,0.166666666666667,"


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--katz", "0.5,0", "--S", "10", "--seeds", "50")
    assert code == 0
    max_tv = float(out.split("max_tv=")[1])
    assert max_tv < 1e-8


def test_verify_boundary(capsys):
    code, _, err = run(capsys, "verify", "--katz", "1.2,0.4", "--S", "2")
    assert code == 1 and "unique" in err


@pytest.mark.parametrize(
    "argv,flag",
    [
        (["limit", "--katz", "x", "--S", "3"], "--katz"),
        (["limit", "--katz", "-1,0", "--S", "3"], "--katz"),
        (["limit", "--katz", "0.5,0", "--S", "0"], "--S"),
        (["scan", "--alpha", "0:1", "--beta", "0:1:0.1", "--S", "3", "--out", "x"], "--alpha"),
        (["iterate", "--katz", "0.5,0"], "--S"),
        (["iterate", "--katz", "0.5,0", "--S", "3", "--parent", "nope"], "--parent"),
        (["iterate", "--S", "3"], "--katz"),
        (["frobnicate"], "invalid choice"),
    ],
)
def test_usage_errors(capsys, argv, flag):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2
    assert flag in capsys.readouterr().err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "partsum", "limit", "--katz", "0.2,0.8", "--S", "5"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines() == ["deterministic", "1.000000 0.000000 0.000000 0.000000 0.000000"]
