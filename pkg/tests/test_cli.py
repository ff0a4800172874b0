"""Command-line surface: output shapes, determinism, and exit codes.
Everything runs in process through main(argv)."""

import json

import pytest

from forestinv.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_enumerate_json(capsys):
    code, out, err = run(capsys, "enumerate", "--vertices", "4")
    assert code == 0 and err == ""
    keys = json.loads(out)
    assert keys == ["(((())))", "((()()))", "(()(()))", "(()()())"]


def test_enumerate_is_deterministic(capsys):
    first = run(capsys, "enumerate", "--vertices", "6")
    second = run(capsys, "enumerate", "--vertices", "6")
    assert first == second


def test_enumerate_csv(capsys):
    code, out, err = run(capsys, "enumerate", "--vertices", "3", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "tree,alpha,vertex_count"
    assert lines[1:] == ["((())),1,3", "(()()),2,3"]


def test_enumerate_text(capsys):
    code, out, err = run(capsys, "enumerate", "--vertices", "2", "--format", "text")
    assert code == 0
    assert out == "(())\n"


def test_invariant_example(capsys):
    code, out, err = run(
        capsys, "invariant", "--tree", "(()())", "--operator", "delta-inv"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["tree"] == "(()())"
    assert payload["operator"] == "delta-inv"
    assert payload["alpha"] == 2
    assert payload["value"] == ["0", "1/6", "-1/2", "1/3"]


def test_invariant_canonicalizes_input(capsys):
    code, out, err = run(
        capsys, "invariant", "--tree", "((())())", "--operator", "nabla-inv"
    )
    assert code == 0
    assert json.loads(out)["tree"] == "(()(()))"


def test_invariant_qsym_default_bound(capsys):
    code, out, err = run(
        capsys, "invariant", "--tree", "(())", "--operator", "lambda-bar"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == [{"composition": [1, 1], "coefficient": "1"}]


def test_invariant_text_and_csv(capsys):
    code, out, err = run(
        capsys, "invariant", "--tree", "(())", "--operator", "delta-inv",
        "--format", "text",
    )
    assert code == 0
    assert out.splitlines() == ["tree (())", "alpha 1", "value -1/2*t + 1/2*t^2"]
    code, out, err = run(
        capsys, "invariant", "--tree", "(())", "--operator", "delta-inv",
        "--format", "csv",
    )
    assert code == 0
    assert out.splitlines()[0] == "tree,alpha,value"


def test_genfun_recurrence(capsys):
    code, out, err = run(
        capsys, "genfun", "--operator", "delta-inv", "--terms", "3"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["mode"] == "recurrence"
    assert len(payload["terms"]) == 3
    assert payload["terms"][0] == ["0", "1"]
    assert payload["terms"][1] == ["0", "-1/2", "1/2"]


def test_genfun_modes_agree(capsys):
    _, rec, _ = run(capsys, "genfun", "--operator", "lambda", "--terms", "4")
    _, enum, _ = run(
        capsys, "genfun", "--operator", "lambda", "--terms", "4",
        "--mode", "enumerate",
    )
    assert json.loads(rec)["terms"] == json.loads(enum)["terms"]


def test_genfun_verify_mode(capsys):
    code, out, err = run(
        capsys, "genfun", "--operator", "nabla-inv", "--terms", "5",
        "--mode", "verify",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["residual_zero"] is True
    assert all(coeffs == [] for coeffs in payload["residual"])


def test_verify_cayley(capsys):
    code, out, err = run(capsys, "verify", "--suite", "cayley", "--max-n", "10")
    assert code == 0
    results = json.loads(out)
    assert len(results) == 1
    assert results[0]["suite"] == "cayley"
    assert results[0]["passed"] is True


def test_verify_census_text(capsys):
    code, out, err = run(
        capsys, "verify", "--suite", "census", "--format", "text"
    )
    assert code == 0
    assert out.startswith("[PASS] census")


def test_verify_unknown_suite(capsys):
    code, out, err = run(capsys, "verify", "--suite", "nonsense")
    assert code == 1
    assert "unknown suite" in err


def test_collisions_clean(capsys):
    code, out, err = run(
        capsys, "collisions", "--operator", "lambda-bar", "--max-n", "5"
    )
    assert code == 0
    assert json.loads(out) == []
    code, out, err = run(
        capsys, "collisions", "--operator", "lambda-bar", "--max-n", "4",
        "--format", "text",
    )
    assert code == 0
    assert out.strip() == "no collisions for lambda-bar with n <= 4"


def test_planar_example(capsys):
    code, out, err = run(capsys, "planar", "--tree", "(a:(b:))")
    assert code == 0
    payload = json.loads(out)
    assert payload["tree"] == "(a:(b:))"
    assert payload["value"] == [{"word": ["a", "b"], "coefficient": "1"}]


def test_planar_with_labels_flag(capsys):
    code, out, err = run(
        capsys, "planar", "--tree", "(a:)", "--labels", "a,b", "--format", "text"
    )
    assert code == 0
    assert out.splitlines() == ["tree (a:)", "value a"]
    # tree uses a label missing from the declared set
    code, out, err = run(capsys, "planar", "--tree", "(z:)", "--labels", "a,b")
    assert code == 1
    assert "not in the family" in err


def test_planar_unknown_family(capsys):
    code, out, err = run(
        capsys, "planar", "--tree", "(a:)", "--operator", "mystery"
    )
    assert code == 1
    assert "unknown planar operator family" in err


def test_parse_error_exit_code(capsys):
    code, out, err = run(capsys, "invariant", "--tree", "((", "--operator", "delta-inv")
    assert code == 1
    assert err.startswith("error:")
    assert out == ""


def test_domain_error_exit_code(capsys):
    code, out, err = run(capsys, "genfun", "--operator", "delta-inv", "--terms", "0")
    assert code == 1
    assert "at least 1" in err


def test_resource_guard_exit_code(capsys):
    code, out, err = run(
        capsys, "genfun", "--operator", "delta-inv", "--terms", "17",
        "--mode", "enumerate",
    )
    assert code == 2
    assert err.startswith("resource limit:")
    code, out, err = run(capsys, "enumerate", "--vertices", "30")
    assert code == 2


def test_usage_errors(capsys):
    code, out, err = run(capsys, "enumerate", "--vertices", "3", "--bogus")
    assert code == 1
    code, out, err = run(capsys, "enumerate")
    assert code == 1
    code, out, err = run(capsys, "invariant", "--tree", "(())", "--operator", "noop")
    assert code == 1
    code, out, err = run(capsys, "enumerate", "--vertices", "3", "--format", "xml")
    assert code == 1


def test_help_exits_zero(capsys):
    code, out, err = run(capsys, "--help")
    assert code == 0
    assert "enumerate" in out


def test_all_formats_are_valid_json_when_asked(capsys):
    commands = [
        ("enumerate", "--vertices", "5"),
        ("invariant", "--tree", "(()(()))", "--operator", "lambda"),
        ("genfun", "--operator", "delta-inv", "--terms", "4"),
        ("collisions", "--operator", "delta-inv", "--max-n", "4"),
        ("planar", "--tree", "(a:(b:)(a:))"),
    ]
    for argv in commands:
        code, out, err = run(capsys, *argv)
        assert code == 0, argv
        json.loads(out)
