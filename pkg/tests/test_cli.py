import json
import shutil
import subprocess
import sys

import pytest

from lyalg.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv, code", [
    (["check-algebra", "-i", "dim2"], 0),
    (["check-algebra", "-i", "dim4", "--suite", "adjoint"], 0),
    (["check-rep", "-i", "adjoint_dim2"], 0),
    (["check-cybe", "-i", "rmatrix_dim2"], 0),
    (["check-rb", "-i", "rb_dim2"], 0),
    (["check-bialgebra", "-i", "bialg_trivial", "--suite", "equivalence"], 0),
    (["check-bialgebra", "-i", "bialg_dim2"], 1),
    (["check-bialgebra", "-i", "bialg_dim2", "--suite", "coalgebra"], 0),
    (["check-matched-pair", "-i", "bialg_dim2"], 1),
    (["check-manin", "-i", "bialg_trivial"], 0),
    (["report", "-i", "prely_dim2"], 0),
    (["lift-rb", "-i", "rb_dim2"], 0),
])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_text_report(capsys):
    code, out, _ = run(capsys, "check-algebra", "-i", "dim2")
    lines = out.splitlines()
    assert lines[0] == "dim2 [ly-axioms]: PASS"
    assert len(lines) == 5 and all(l.strip().startswith("ok") for l in lines[1:])


def test_json_report_is_deterministic(capsys):
    first = run(capsys, "check-bialgebra", "-i", "bialg_dim2", "--suite", "equivalence",
                "--format", "json")[1]
    second = run(capsys, "check-bialgebra", "-i", "bialg_dim2", "--suite", "equivalence",
                 "--format", "json")[1]
    assert first == second
    doc = json.loads(first)
    assert doc["verdict"] == "fail" and "seconds" not in doc
    verdicts = {c["name"]: c["passed"] for c in doc["checks"]}
    assert verdicts == {"double_construction": False, "matched_pair": False,
                        "manin_triple": False, "three_way_agreement": True}


@pytest.mark.parametrize("argv, msg", [
    (["check-algebra", "-i", "no_such_file.json"], "no shipped fixture"),
    (["check-algebra", "-i", "rb_dim2"], "expected LYAlgebra"),
    (["check-algebra", "-i", "dim2", "--suite", "manin"], "does not apply"),
    (["search-rmatrix", "-i", "dim2", "--grid", "1,x"], "bad --grid"),
])
def test_usage_errors_exit_2(capsys, argv, msg):
    code, _, err = run(capsys, *argv)
    assert code == 2 and msg in err


def test_bad_file_exits_2(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"dim": 2, "binary": [[1, 2, 5, "1"]]}')
    code, _, err = run(capsys, "check-algebra", "-i", str(p))
    assert code == 2 and "$.binary[0]" in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as e:
        main(["check-algebra"])
    assert e.value.code == 2


def test_search_rmatrix(capsys):
    code, out, _ = run(capsys, "search-rmatrix", "-i", "dim2", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["count"] == 3
    assert [["0", "1"], ["-1", "0"]] in doc["solutions"]


def test_search_double_on_dim4(capsys):
    code, out, _ = run(capsys, "search-double", "-i", "dim4")
    assert code == 0
    assert out.splitlines()[0] == "3817 passing cobrackets, 3816 nonzero"


def test_build_double(capsys):
    code, out, _ = run(capsys, "build-double", "-i", "bialg_trivial", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["is_ly"] and doc["double"]["dim"] == 4
    assert run(capsys, "build-double", "-i", "bialg_dim2")[0] == 1


def test_console_script_and_module():
    exe = shutil.which("lyalg")
    cmds = [[sys.executable, "-m", "lyalg"]] + ([[exe]] if exe else [])
    for cmd in cmds:
        p = subprocess.run(cmd + ["check-cybe", "-i", "rmatrix_dim2"], capture_output=True,
                           text=True)
        assert p.returncode == 0, p.stderr
        assert "PASS" in p.stdout.splitlines()[0]
