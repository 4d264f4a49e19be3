import json
from pathlib import Path

import pytest

from optopo.cli import run

INSTANCES = Path(__file__).resolve().parent.parent / "instances"
BULLET2 = str(INSTANCES / "bullet2.json")
BULLET3 = str(INSTANCES / "bullet3.json")


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_true_class(capsys):
    code, out, err = invoke(
        capsys, "check", "--instance", BULLET2,
        "--class", "weakly_almost_contra_tstar_cont",
    )
    assert code == 0
    assert "true" in out
    assert err == ""


def test_check_false_class(capsys):
    code, out, _ = invoke(
        capsys, "check", "--instance", BULLET2,
        "--class", "weakly_contra_tstar_cont",
    )
    assert code == 1
    assert "false" in out


def test_check_all_json(capsys):
    code, out, _ = invoke(capsys, "check", "--instance", BULLET3, "--all", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["results"]["almost_tstar_cont"] is True
    assert data["results"]["almost_contra_tstar_cont"] is False
    assert len(data["results"]) == 27


def test_check_list_classes(capsys):
    code, out, _ = invoke(capsys, "check", "--list-classes")
    assert code == 0
    assert "weakly_almost_contra_tstar_cont" in out


def test_check_unknown_class(capsys):
    code, out, err = invoke(
        capsys, "check", "--instance", BULLET2, "--class", "bogus"
    )
    assert code == 2
    assert out == ""
    assert "bogus" in err


def test_check_missing_file(capsys):
    code, _, err = invoke(
        capsys, "check", "--instance", "/nonexistent.json", "--class", "continuous"
    )
    assert code == 2
    assert err


def test_enumerate_count(capsys):
    code, out, _ = invoke(capsys, "enumerate", "--points", "3", "--count-only")
    assert code == 0
    assert out.strip() == "29"


def test_enumerate_stream_json(capsys):
    code, out, _ = invoke(capsys, "enumerate", "--points", "2", "--json")
    assert code == 0
    topos = json.loads(out)
    assert len(topos) == 4
    assert all(set(t) == {"points", "opens"} for t in topos)


def test_verify_holds(capsys):
    code, out, _ = invoke(
        capsys, "verify", "--proposition", "LEMMA_3_1", "--max-points", "2", "--json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["outcome"] == "holds_exhaustively"
    assert data["witness"] is None
    assert "elapsed_ms" not in data


def test_verify_unknown_proposition(capsys):
    code, _, err = invoke(capsys, "verify", "--proposition", "NOPE")
    assert code == 2
    assert "NOPE" in err


def test_search_counterexample_exit_code(capsys):
    code, out, _ = invoke(
        capsys, "search",
        "--target", "weakly_almost_contra_tstar_cont(f) and not almost_tstar_cont(f)",
        "--max-points", "3", "--json",
    )
    assert code == 1
    data = json.loads(out)
    assert data["outcome"] == "counterexample"
    assert data["witness"]["instance"]["operator"] == "int_cl"


def test_search_exhausted_exit_code(capsys):
    code, out, _ = invoke(
        capsys, "search", "--target", "continuous(f) and not beta_cont(f)",
        "--max-points", "2", "--json",
    )
    assert code == 0
    assert json.loads(out)["outcome"] == "holds_exhaustively"


def test_search_bad_formula(capsys):
    code, _, err = invoke(capsys, "search", "--target", "contin(f")
    assert code == 2
    assert err


def test_eval_stdlib_name(capsys):
    code, out, _ = invoke(
        capsys, "eval", "--instance", BULLET3, "--name", "almost_tstar_cont"
    )
    assert code == 0
    assert out.strip() == "true"


def test_eval_user_defs(tmp_path, capsys):
    d = tmp_path / "user.dsl"
    d.write_text("funclass both(f) := continuous(f) and contra_cont(f);\n")
    code, out, _ = invoke(
        capsys, "eval", "--defs", str(d), "--instance", BULLET3, "--name", "both",
    )
    assert code == 1
    assert out.strip() == "false"


def test_eval_wrong_kind(capsys):
    code, _, err = invoke(
        capsys, "eval", "--instance", BULLET3, "--name", "regular_open"
    )
    assert code == 2
    assert "setclass" in err


def test_json_output_is_byte_identical(capsys):
    argv = [
        "verify", "--proposition", "P3_4", "--max-points", "2", "--json",
    ]
    _, first, _ = invoke(capsys, *argv)
    _, second, _ = invoke(capsys, *argv)
    _, parallel, _ = invoke(capsys, *argv, "--jobs", "2")
    assert first == second == parallel


def test_usage_error_exit_code(capsys):
    assert invoke(capsys, "bogus")[0] == 2
    assert invoke(capsys, "check")[0] == 2  # no instance, no --list-classes
