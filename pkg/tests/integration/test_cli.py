"""End-to-end tests of the command-line interface."""

import pytest

from ltl_synth.cli import (
    EXIT_ERROR,
    EXIT_REALIZABLE,
    EXIT_UNREALIZABLE,
    EXIT_VERIFY_FAILED,
    parse_args,
    run,
)
from ltl_synth.extract import read_aiger


@pytest.fixture
def arbiter_file(specs_dir):
    return str(specs_dir / "arbiter2.spec")


def test_realizable_exit_code(arbiter_file, capsys):
    """A realizable specification prints the verdict and exits with 10."""
    assert run(["-f", arbiter_file]) == EXIT_REALIZABLE
    assert capsys.readouterr().out == "REALIZABLE\n"


def test_unrealizable_exit_code(specs_dir, capsys):
    assert run(["-f", str(specs_dir / "prophecy.spec")]) == EXIT_UNREALIZABLE
    assert capsys.readouterr().out.splitlines()[0] == "UNREALIZABLE"


def test_inline_formula(capsys):
    code = run(["--formula", "G (r -> F g)", "--ins", "r", "--outs", "g", "--exploration", "pq"])
    assert code == EXIT_REALIZABLE
    assert capsys.readouterr().out.startswith("REALIZABLE")


def test_unrealizable_synthesis_prints_no_controller(capsys):
    code = run(["--formula", "F (r & g)", "--ins", "r", "--outs", "g", "--mode", "synthesis"])
    assert code == EXIT_UNREALIZABLE
    assert capsys.readouterr().out == "UNREALIZABLE\n"


def test_synthesis_writes_verified_circuit(arbiter_file, tmp_path, capsys):
    """The written circuit parses and passes the closed-loop check."""
    target = tmp_path / "out" / "arbiter.aag"
    args = ["-f", arbiter_file, "--mode", "synthesis", "--verify", "-o", str(target)]
    assert run(args) == EXIT_REALIZABLE
    assert capsys.readouterr().out == "REALIZABLE\n"
    circuit = read_aiger(target.read_text(encoding="utf-8"))
    assert circuit.inputs == ["r1", "r2"]
    assert circuit.outputs == ["g1", "g2"]


def test_synthesis_to_stdout_with_quality(arbiter_file, capsys):
    args = ["-f", arbiter_file, "--mode", "synthesis", "--reference-size", "1000"]
    assert run(args) == EXIT_REALIZABLE
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "REALIZABLE"
    assert lines[1].startswith("quality: ")
    assert float(lines[1].split()[1]) >= 2.0
    assert lines[2].startswith("aag ")


def test_mealy_output(arbiter_file, capsys):
    args = ["-f", arbiter_file, "--mode", "synthesis", "--output", "mealy", "--verify"]
    assert run(args) == EXIT_REALIZABLE
    out = capsys.readouterr().out
    assert "mealy 3 inputs r1 r2 outputs g1 g2" in out


def test_stats(arbiter_file, capsys):
    assert run(["-f", arbiter_file, "--stats"]) == EXIT_REALIZABLE
    out = capsys.readouterr().out
    assert "env_nodes: " in out
    assert "solver_calls: " in out


@pytest.mark.parametrize("encoding", ["unstructured", "structured", "portfolio"])
@pytest.mark.parametrize("exploration", ["bfs", "bfs+", "pq", "pq+"])
@pytest.mark.parametrize("reduce", [False, True])
def test_flag_matrix(arbiter_file, tmp_path, encoding, exploration, reduce):
    """Every combination either verifies or refuses a structured encoding of a merged machine."""
    args = [
        "-f",
        arbiter_file,
        "--mode",
        "synthesis",
        "--exploration",
        exploration,
        "--encoding",
        encoding,
        "--verify",
        "-o",
        str(tmp_path / "c.aag"),
    ]
    if reduce:
        args.append("--reduce")
    code = run(args)
    if reduce and encoding == "structured":
        assert code in (EXIT_REALIZABLE, EXIT_ERROR)
    else:
        assert code == EXIT_REALIZABLE


def test_errors_exit_with_one(tmp_path, capsys):
    """Syntax errors, unknown propositions and missing files are reported on stderr."""
    assert run(["--formula", "G (r ->", "--ins", "r", "--outs", "g"]) == EXIT_ERROR
    assert capsys.readouterr().err.startswith("Error: ")
    assert run(["--formula", "G x", "--ins", "r", "--outs", "g"]) == EXIT_ERROR
    assert "Unknown proposition 'x'" in capsys.readouterr().err
    assert run(["-f", str(tmp_path / "missing.spec")]) == EXIT_ERROR
    assert run(["--formula", "G g", "--ins", "g", "--outs", "g"]) == EXIT_ERROR


def test_state_limit_is_an_error(arbiter_file, capsys):
    assert run(["-f", arbiter_file, "--max-states", "2"]) == EXIT_ERROR
    assert "Explored more than 2" in capsys.readouterr().err


def test_parse_args_defaults():
    args = parse_args(["--formula", "G g"])
    assert args.mode == "realizability"
    assert args.output == "aag"
    assert args.encoding == "portfolio"
    assert not args.verify
    with pytest.raises(SystemExit):
        parse_args(["--formula", "G g", "-f", "x.spec"])

def test_failed_verification_exit_code(arbiter_file, tmp_path, monkeypatch, capsys):
    monkeypatch.setattr("ltl_synth.cli.verify_controller", lambda *args: False)
    args = ["-f", arbiter_file, "--mode", "synthesis", "--verify", "-o", str(tmp_path / "c.aag")]
    assert run(args) == EXIT_VERIFY_FAILED
    assert "verification failed" in capsys.readouterr().err
