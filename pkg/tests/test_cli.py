import subprocess
import sys

import pytest

from intercheck.analysis import Verdict, omega
from intercheck.cli import main
from intercheck.syntax import parse_model, parse_multitrace

from support import RUNNING_TEXT

RUNNING_MODEL = ("signature { lifelines = a, b, c; messages = m1, m2, m3, m4; }\n"
              f"interaction {{ {RUNNING_TEXT} }}\n")
STRICT_MODEL = "signature { lifelines = a, b; messages = m; }\ninteraction { strict(a!m, b?m) }\n"


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCheck:
    def test_pass(self, files, capsys):
        model = files("running.isd", RUNNING_MODEL)
        trace = files("t.mtr", "{a: a!m1.a?m4; b: eps; c: c!m4}")
        code, out, _ = run(capsys, "check", model, trace, "--witness")
        assert code == 0
        assert out.splitlines() == ["Pass", "witness: a!m1.c!m4.a?m4"]

    def test_bfs_no_memo(self, files, capsys):
        model = files("running.isd", RUNNING_MODEL)
        trace = files("t.mtr", "{a: a!m1.a?m4; b: eps; c: c!m4}")
        assert run(capsys, "check", "--search", "bfs", "--no-memo", model, trace)[0] == 0

    @pytest.mark.parametrize("trace, extended, verdict, code", [
        ("{a: a!m; b: eps}", True, "WeakPass", 2),
        ("{a: eps; b: b?m}", True, "Inconc", 3),
        ("{a: eps; b: b?m}", False, "Fail", 1),
        ("{a: a!m; b: b?m}", True, "Pass", 0),
    ])
    def test_verdict_exit_codes(self, files, capsys, trace, extended, verdict, code):
        argv = ["check", files("m.isd", STRICT_MODEL), files("t.mtr", trace)]
        if extended:
            argv.insert(1, "--extended")
        got, out, _ = run(capsys, *argv)
        assert (got, out.strip()) == (code, verdict)

    def test_dot_out(self, files, capsys, tmp_path):
        model = files("running.isd", RUNNING_MODEL)
        trace = files("t.mtr", "{a: a!m1.a?m4; b: eps; c: c!m4}")
        run(capsys, "check", model, trace, "--dot-out", str(tmp_path / "g.dot"))
        assert 'label="Cov"' in (tmp_path / "g.dot").read_text(encoding="utf-8")

    def test_budget(self, files, capsys):
        model = files("running.isd", RUNNING_MODEL)
        trace = files("t.mtr", "{a: a!m1.a?m4; b: eps; c: c!m4}")
        code, _, err = run(capsys, "check", "--budget", "1", model, trace)
        assert code == 65 and err


class TestUsage:
    def test_no_command(self, capsys):
        assert run(capsys)[0] == 64

    def test_bad_flag(self, capsys):
        assert run(capsys, "check", "--frobnicate")[0] == 64

    def test_missing_file(self, capsys, tmp_path):
        assert run(capsys, "draw", str(tmp_path / "nope.isd"))[0] == 64

    def test_parse_error(self, files, capsys):
        code, _, err = run(capsys, "draw", files("bad.isd", "signature { lifelines = a; messages = m; } interaction { strict(a!m) }"))
        assert code == 64
        assert "line 1, column 58" in err

    def test_trace_error(self, files, capsys):
        code, _, _ = run(capsys, "check", files("m.isd", STRICT_MODEL), files("t.mtr", "{a: b?m; b: eps}"))
        assert code == 64


def test_explore(files, capsys, tmp_path):
    model = files("m.isd", "signature { lifelines = b, c; messages = m2, m3; }\n"
                           "interaction { seq(alt(strict(b!m2, c?m2), 0), b!m3) }\n")
    code, out, _ = run(capsys, "explore", model, "--list-traces", "--dot-out", str(tmp_path / "t.dot"))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "3 accepted trace(s)"
    assert set(lines[1:]) == {"b!m3", "b!m2.c?m2.b!m3", "b!m2.b!m3.c?m2"}
    assert (tmp_path / "t.dot").read_text(encoding="utf-8").startswith("digraph")


def test_explore_loop_bound(files, capsys):
    model = files("m.isd", "signature { lifelines = a; messages = m; } interaction { loop_strict(a!m) }")
    assert run(capsys, "explore", model, "--loop-bound", "2")[1].startswith("4 accepted")
    assert run(capsys, "explore", model, "--loop-bound", "5", "--max-len", "1")[1].startswith("2 accepted")


def test_draw(files, capsys, tmp_path):
    model = files("m.isd", STRICT_MODEL)
    code, out, _ = run(capsys, "draw", model)
    assert code == 0 and 'label="strict"' in out
    run(capsys, "draw", model, "-o", str(tmp_path / "d.dot"))
    assert (tmp_path / "d.dot").read_text(encoding="utf-8") == out


def test_gen_sat(files, capsys, tmp_path):
    cnf = files("phi.cnf", "p cnf 4 2\n1 -2 4 0\n1 3 -4 0\n")
    outdir = tmp_path / "inst"
    code, out, _ = run(capsys, "gen-sat", cnf, str(outdir))
    assert code == 0
    assert "oracle: 1-in-3 satisfiable" in out
    assert "omega: Pass" in out
    sig, term = parse_model((outdir / "model.isd").read_text(encoding="utf-8"))
    mu = parse_multitrace((outdir / "trace.mtr").read_text(encoding="utf-8"), sig)
    assert omega(term, mu) is Verdict.PASS


def test_gen_sat_unsat(files, capsys, tmp_path):
    cnf = files("phi.cnf", "p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n")
    code, out, _ = run(capsys, "gen-sat", cnf, str(tmp_path / "inst"))
    assert code == 0
    assert "oracle: no 1-in-3 assignment" in out and "omega: Fail" in out


def test_bad_dimacs(files, capsys, tmp_path):
    assert run(capsys, "gen-sat", files("phi.cnf", "p cnf 3 1\n1 2 0\n"), str(tmp_path))[0] == 64


def test_console_entry_point(files):
    model = files("m.isd", STRICT_MODEL)
    trace = files("t.mtr", "{a: a!m; b: b?m}")
    proc = subprocess.run([sys.executable, "-m", "intercheck", "check", model, trace],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "Pass"
