import io
import json

import pytest

from speclab import builtins
from speclab.catmodel import dumps
from speclab.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_sspec_dot_is_edgeless_three_nodes():
    code, text = run("sspec", "--model", "kA2", "--format", "dot")
    assert code == 0
    assert text.count("label=") == 3 and "->" not in text


def test_radical_of_zero_in_a_infinity():
    code, text = run("radical", "--model", "A_infinity", "--thick", "0")
    assert code == 0
    assert "radical: alpha(L)" in text and "is_radical: False" in text


def test_verify_all_exits_zero():
    code, text = run("verify", "all")
    assert code == 0
    assert "FAIL" not in text


@pytest.mark.parametrize("argv", [
    ["model", "--model", "kA2"],
    ["sspec", "--model", "specZ", "--bound", "10"],
    ["shspec", "--model", "stmod_Cp", "--p", "5"],
    ["lattice", "--model", "An", "--n", "3"],
    ["radical", "--model", "kA2", "--thick", "S2"],
    ["psi", "--model", "kA2", "--points", "perp(S2);perp(P2)"],
    ["support", "--model", "kronecker", "--object", "R0_1"],
    ["matsui", "--model", "A_infinity"],
    ["fspcnt", "--model", "kA2"],
    ["rank", "theta", "--model", "kA2", "--object", "S2"],
    ["rank", "kernel", "--model", "kA2", "--object", "S2"],
    ["rank", "decompose", "--model", "An", "--n", "3", "--object", "S1+S2"],
    ["rank", "check", "--model", "kA2", "--object", "P1"],
    ["tube", "enumerate", "--n", "2"],
    ["tube", "wide", "--n", "3", "--arcs", "0-1,1-2"],
    ["tube", "perp", "--n", "3", "--arcs", "0-2"],
    ["tube", "verify", "--n", "2"],
    ["verify", "dinfinity"],
])
def test_every_subcommand_has_a_doc_mode_and_is_deterministic(argv):
    code, text = run(*argv, "--format", "doc")
    assert code == 0
    json.loads(text)
    assert run(*argv) == run(*argv)


def test_lattice_dot():
    code, text = run("lattice", "--model", "kA2", "--format", "dot")
    assert code == 0 and text.count("->") == 6


def test_model_file(tmp_path):
    path = tmp_path / "ka2.json"
    path.write_text(dumps(builtins.ka2_model()))
    assert run("sspec", "--model-file", str(path)) == run("sspec", "--model", "kA2")


def test_usage_errors(capsys):
    assert run("sspec")[0] == 1
    assert run("sspec", "--model", "kA2", "--model-file", "x.json")[0] == 1
    assert run("sspec", "--model", "nope")[0] == 1
    assert run("support", "--model", "kA2", "--object", "S2[q]")[0] == 1
    assert run("tube", "wide", "--n", "4", "--arcs", "0-2,1-3")[0] == 1
    assert run("bogus")[0] == 1
    assert run("radical", "--model", "kA2", "--thick", "S2", "--format", "dot")[0] == 1
    assert "error" in capsys.readouterr().err


def test_model_errors(tmp_path, capsys):
    assert run("support", "--model", "kA2", "--object", "Nope")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{}")
    assert run("sspec", "--model-file", str(bad))[0] == 2
    assert run("shspec", "--model", "specZ")[0] == 2


def test_guard_exit_code(monkeypatch, capsys):
    monkeypatch.delenv("SPECLAB_GUARD", raising=False)
    assert run("sspec", "--model", "specZ", "--bound", "100")[0] == 3


def test_verification_failure_exit_code(monkeypatch):
    from speclab import verify
    monkeypatch.setattr(verify, "verify_dinfinity", lambda: [verify._row("demo", 1, 2, "one is two")])
    assert run("verify", "dinfinity")[0] == 4
