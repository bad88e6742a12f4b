import json
import os
import subprocess
import sys

import pytest

from hyperdet.cli import main
from hyperdet.exactalg import Polynomial, parse
from hyperdet.mdmatrix import load_matrix
from indep import GOLDEN_QUARTIC, parse_printed


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_process(*argv, env=None):
    return subprocess.run([sys.executable, "-m", "hyperdet", *argv], capture_output=True, text=True,
                          env={**os.environ, **(env or {})})


class TestClassify:
    def test_boundary(self, capsys):
        code, out, _ = run(capsys, "classify", "[2,2,3]")
        assert code == 0
        assert "class=boundary" in out and "degree=6" in out and "direction=3" in out

    def test_inner(self, capsys):
        code, out, _ = run(capsys, "classify", "2x2x2")
        assert code == 0 and "class=inner" in out and "method=pencil" in out

    def test_grassman_json(self, capsys):
        code, out, _ = run(capsys, "classify", "[2,2,5]", "--json")
        info = json.loads(out)
        assert code == 0 and info["class"] == "grassman" and info["pluckerLength"] == 10
        assert info["mseq"] == [1, 2, 3, 7]


class TestDet:
    def test_quartic(self, capsys):
        code, out, _ = run(capsys, "det", "[2,2,2]")
        assert code == 0
        assert parse(out) == Polynomial(parse_printed(GOLDEN_QUARTIC))

    def test_degenerate_sample(self, capsys, tmp_path):
        path = tmp_path / "deg.json"
        wit = tmp_path / "wit.json"
        code, _, _ = run(capsys, "make-degenerate", "[2,2,3]", "--seed", "3", "-o", str(path), "--witness", str(wit))
        assert code == 0
        code, out, _ = run(capsys, "det", str(path))
        assert code == 0 and out == "0\n"
        assert load_matrix(str(path)).dims == (2, 2, 3)
        assert json.loads(wit.read_text())["format"] == [2, 2, 3]

    def test_grassman_exit(self, capsys):
        code, _, err = run(capsys, "det", "[2,2,5]")
        assert code == 2 and "use plucker" in err

    def test_unsupported_exit(self, capsys):
        code, _, _ = run(capsys, "det", "[3,3,3]")
        assert code == 2

    def test_size_guard_exit(self, capsys):
        code, _, err = run(capsys, "det", "[2,2,2,4]")
        assert code == 3 and "cap" in err

    def test_size_guard_flag(self, capsys):
        code, _, _ = run(capsys, "det", "[2,2,3]", "--max-terms", "10")
        assert code == 3

    def test_size_guard_env(self):
        proc = run_process("det", "[2,3,4]", env={"HYPERDET_MAX_TERMS": "1000"})
        assert proc.returncode == 3

    def test_json_output(self, capsys):
        code, out, _ = run(capsys, "det", "[2,2]", "--json")
        obj = json.loads(out)
        assert code == 0 and obj["method"] == "square"

    def test_numeric_scalar(self, capsys, tmp_path):
        path = tmp_path / "m.json"
        path.write_text(json.dumps({"format": [2, 2], "mode": "numeric", "entries": [1, "1/2", 3, 4]}))
        code, out, _ = run(capsys, "det", str(path))
        assert code == 0 and out == "5/2\n"


class TestErrors:
    def test_unknown_flag(self, capsys):
        code, _, _ = run(capsys, "det", "[2,2]", "--frobnicate")
        assert code == 4

    def test_missing_file(self, capsys):
        code, _, _ = run(capsys, "det", "/nonexistent/matrix.json")
        assert code == 4

    def test_bad_json(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("[1, 2")
        code, _, _ = run(capsys, "det", str(path))
        assert code == 4

    def test_bad_policy(self, capsys):
        code, _, _ = run(capsys, "det", "[2,2,3]", "--policy", "nonsense")
        assert code == 4

    def test_unknown_command(self, capsys):
        code, _, _ = run(capsys, "frobnicate", "[2,2]")
        assert code == 4


class TestOtherCommands:
    def test_closed_det(self, capsys):
        code, out, _ = run(capsys, "closed-det", "[2,2]")
        assert code == 0
        assert parse(out).degree() == 6

    def test_minors(self, capsys):
        code, out, _ = run(capsys, "minors", "[2,2,2]")
        assert code == 0 and len(out.splitlines()) == 15

    def test_plucker(self, capsys):
        code, out, _ = run(capsys, "plucker", "[2,2,5]", "--json")
        obj = json.loads(out)
        assert code == 0 and len(obj["coordinates"]) == 10 and obj["allVanish"] is False

    def test_corank(self, capsys, tmp_path):
        path = tmp_path / "c.json"
        path.write_text(json.dumps({"format": [2, 2, 4], "mode": "numeric",
                                    "entries": [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0]}))
        code, out, _ = run(capsys, "corank", str(path))
        assert code == 0 and out == "rank=2\ncorankOne=true\n"

    def test_verify(self, capsys):
        code, out, _ = run(capsys, "verify", "[2,2]", "--samples", "8")
        assert code == 0 and json.loads(out)["passed"] is True

    def test_diagonal(self, capsys):
        code, out, _ = run(capsys, "diagonal", "[2,2,2]")
        text = out.strip()
        assert code == 0 and text.startswith("a[1,1,1]^6*") and text.endswith("a[2,2,2]^6")

    def test_diagonal_boundary(self, capsys):
        code, out, _ = run(capsys, "diagonal", "[3,3]", "--variant", "boundary")
        assert code == 0 and out == "a[1,1]*a[2,2]*a[3,3]\n"


def test_make_degenerate_reproducible(capsys):
    outs = [run(capsys, "make-degenerate", "[2,2,2]", "--seed", "7")[1] for _ in range(2)]
    assert outs[0] == outs[1]
    obj = json.loads(outs[0])
    assert set(obj) == {"matrix", "witness"}


def test_threads_do_not_change_output():
    a = run_process("det", "[2,3,2]", "--threads", "1")
    b = run_process("det", "[2,3,2]", "--threads", "2")
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout


@pytest.mark.parametrize("argv", [["det", "[2,2,2]"], ["classify", "[2,2,3]"]])
def test_entry_point(argv):
    proc = run_process(*argv)
    assert proc.returncode == 0 and proc.stdout
