import json
import shutil
import subprocess
from pathlib import Path

import pytest

from zigzag.cli import main
from zigzag.danielewski import s_q, zigzag_of
from zigzag.dsl import parse_program

DATA = Path(__file__).resolve().parent.parent / "data"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", DATA / "h_q3.zz", "--format", "json")
    rep = json.loads(out)
    assert code == 0
    assert (rep["class"], rep["m"], rep["q"], rep["paper_k"]) == ("H", 1, 3, 0)


def test_classify_text(capsys):
    code, out, _ = run(capsys, "classify", DATA / "a_minus_h.zz")
    assert code == 0
    assert "class: A_minus_H" in out
    assert "admits fixed-point-free C+-action: no" in out


def test_classify_dot(capsys):
    code, out, _ = run(capsys, "classify", DATA / "a_minus_h.zz", "--format", "dot")
    assert code == 0 and out.startswith("graph zigzag {")


def test_malformed_program_exits_2(capsys, tmp_path):
    f = tmp_path / "bad.zz"
    f.write_text("base hirzebruch 1\nstep1 on-d\nfinal { G on E0 ")
    code, out, err = run(capsys, "classify", f)
    assert code == 2 and out == ""
    assert f"{f}:3:17: syntax-error" in err


def test_semantic_error_exits_2(capsys):
    code, _, err = run(capsys, "check", DATA / "bad_location.zz")
    assert code == 2
    assert "bad_location.zz:3:1: invalid-location" in err


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "classify", tmp_path / "nope.zz")
    assert code == 2 and "nope.zz" in err


def test_check_passes(capsys):
    code, out, _ = run(capsys, "check", DATA / "a_minus_h.zz", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["ok"]
    assert [s["step"] for s in rep["steps"]] == [0, 1, 2, 3]
    assert "lemma2" in rep["steps"][2]


def test_lnd_on_four_variable_surface(capsys):
    code, out, _ = run(capsys, "lnd", DATA / "c4_surface.ring")
    lines = out.splitlines()
    assert code == 0
    assert len(lines) == 2
    assert all("certified-yes" in ln for ln in lines)


def test_lnd_rejects_non_preserving(capsys, tmp_path):
    f = tmp_path / "bad.ring"
    f.write_text("ring vars x, y\nideal { x*y - 1 }\nderivation e { x -> y; y -> 0 }\n")
    code, out, _ = run(capsys, "lnd", f, "--format", "json")
    rep = json.loads(out)
    assert code == 1
    assert rep["derivations"][0]["status"] == "no"
    assert rep["derivations"][0]["witness"]["image_normal_form"] == "y^2"


def test_lnd_syntax_error(capsys, tmp_path):
    f = tmp_path / "bad.ring"
    f.write_text("ring vars x\nderivation d { x -> q }\n")
    code, _, err = run(capsys, "lnd", f)
    assert code == 2 and ":2:21: unknown-variable" in err


def test_danielewski_roots(capsys, tmp_path):
    prog = tmp_path / "s3.zz"
    code, out, _ = run(capsys, "danielewski", "--roots", "1,2,3", "--format", "json", "--program-out", prog)
    rep = json.loads(out)
    assert code == 0
    assert rep["smooth"] and rep["class"] == "H"
    assert all(d["fixed_point_free"] for d in rep["derivations"].values())
    assert parse_program(prog.read_text()) == zigzag_of(s_q(3))


def test_danielewski_double_root(capsys):
    code, out, _ = run(capsys, "danielewski", "--roots", "0,0")
    assert code == 1
    assert "smooth: no" in out


def test_danielewski_bad_roots(capsys):
    code, _, err = run(capsys, "danielewski", "--roots", "1,two")
    assert code == 2 and "--roots" in err


def test_enumerate_counts(capsys):
    code, out, _ = run(capsys, "enumerate", "--max-k", 2, "--max-q", 1, "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["programs"] == 23


def test_enumerate_verify(capsys):
    code, out, _ = run(capsys, "enumerate", "--max-k", 3, "--max-q", 2, "--base-n", "0..1", "--verify", "all")
    assert code == 0
    assert "failures: 0" in out


@pytest.mark.parametrize(
    "args",
    [
        ["--verify", "lemma9"],
        ["--base-n", "a..b"],
        ["--base-n", "3..1"],
        ["--format", "dot"],
    ],
)
def test_enumerate_input_errors(capsys, args):
    code, _, _ = run(capsys, "enumerate", "--max-k", 1, "--max-q", 1, *args)
    assert code == 2


def test_out_file_matches_stdout(capsys, tmp_path):
    target = tmp_path / "report.json"
    _, out, _ = run(capsys, "classify", DATA / "h_q3.zz", "--format", "json")
    code, printed, _ = run(capsys, "classify", DATA / "h_q3.zz", "--format", "json", "--out", target)
    assert code == 0 and printed == ""
    assert target.read_text() == out


@pytest.mark.parametrize(
    "argv",
    [
        ["classify", DATA / "a_minus_h.zz", "--format", "json"],
        ["check", DATA / "a_minus_h.zz", "--format", "json"],
        ["lnd", DATA / "c4_surface.ring", "--format", "json"],
        ["danielewski", "--roots", "1,2,3", "--format", "dot"],
        ["enumerate", "--max-k", 3, "--max-q", 2, "--verify", "all", "--format", "json"],
    ],
)
def test_reports_are_deterministic(capsys, argv):
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second


@pytest.mark.skipif(shutil.which("zigzag") is None, reason="console script not installed")
def test_console_script():
    res = subprocess.run(["zigzag", "classify", str(DATA / "h_q3.zz")], capture_output=True, text=True)
    assert res.returncode == 0 and "class: H" in res.stdout
