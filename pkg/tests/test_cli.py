import io
import json

import pytest

from src import config
from src.cli import EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, main
from src.verification import SUITES, PropertyViolation, Suite


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ("NAKAYAMA_LOG_LEVEL", "NAKAYAMA_WORKERS", "NAKAYAMA_FORMAT", "NAKAYAMA_MAX_SUITE_N"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setattr(config, "load_dotenv", lambda: None)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_human(capsys):
    code, out, _ = run(capsys, "analyze", "[3,4,4,3,2,1]")
    assert code == EXIT_OK
    assert "Global dimension: 3" in out


def test_analyze_json(capsys):
    code, out, _ = run(capsys, "analyze", "cyclic:[2,2]", "--format", "json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["global_dimension"] == "infinite"
    assert data["magnitude"] is None


def test_analyze_csv(capsys):
    code, out, _ = run(capsys, "analyze", "[2,1]", "--format", "csv")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "field,value"
    assert "global_dimension,1" in lines


def test_format_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("NAKAYAMA_FORMAT", "json")
    code, out, _ = run(capsys, "analyze", "[2,1]")
    assert code == EXIT_OK
    assert json.loads(out)["series"] == "[2,1]"


def test_analyze_reads_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("cyclic:[3,3,3,4]\n"))
    code, out, _ = run(capsys, "analyze", "-")
    assert code == EXIT_OK
    assert "Global dimension: 5" in out


@pytest.mark.parametrize("text", ["[3,1]", "garbage", "UDD"])
def test_analyze_rejects_bad_input(capsys, text):
    code, out, err = run(capsys, "analyze", text)
    assert code == EXIT_USAGE
    assert out == ""
    assert err.startswith("❌ Error running analyze")


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "linear", "--n", "3")
    assert code == EXIT_OK
    assert out.splitlines() == ["Found 2 linear object(s) for n=3:", "[2,2,1]", "[3,2,1]"]


@pytest.mark.parametrize("extra, total", [
    ([], "3"),
    (["--raw"], "4"),
])
def test_enumerate_count(capsys, extra, total):
    code, out, _ = run(capsys, "enumerate", "cyclic", "--n", "2", "--max-entry", "3", "--count", *extra)
    assert code == EXIT_OK
    assert out.strip() == total


def test_enumerate_sequence(capsys):
    code, out, _ = run(capsys, "enumerate", "cyclic-finite", "--n", "2", "--sequence")
    assert code == EXIT_OK
    assert out.splitlines() == ["cyclic-finite counts for n=1..2:", "  n=1: 0", "  n=2: 1"]

    code, out, _ = run(capsys, "enumerate", "cyclic-finite", "--n", "2", "--sequence", "--raw", "--format", "json")
    assert code == EXIT_OK
    assert json.loads(out) == {"family": "cyclic-finite", "n_max": 2, "counts": {"1": 0, "2": 2}}

    code, out, _ = run(capsys, "enumerate", "linear", "--n", "4", "--sequence", "--format", "csv")
    assert code == EXIT_OK
    assert out.strip() == "n,count\n1,1\n2,1\n3,2\n4,5"


def test_enumerate_sequence_needs_a_size(capsys):
    code, _, err = run(capsys, "enumerate", "dyck", "--n", "0", "--sequence")
    assert code == EXIT_USAGE
    assert "n_max must be at least 1" in err
    assert main(["enumerate", "dyck", "--n", "3", "--sequence", "--count"]) == EXIT_USAGE


def test_enumerate_json(capsys):
    code, out, _ = run(capsys, "enumerate", "trees", "--n", "3", "--format", "json")
    assert code == EXIT_OK
    assert json.loads(out) == {"family": "trees", "n": 3, "count": 2, "items": ["()()", "(())"]}


def test_distribution(capsys):
    code, out, _ = run(capsys, "distribution", "gldim", "--n", "3", "--format", "json")
    assert code == EXIT_OK
    assert json.loads(out) == {"statistic": "gldim", "n": 3, "counts": {"1": 1, "2": 1}}

    code, out, _ = run(capsys, "distribution", "height", "--n", "3", "--format", "csv")
    assert code == EXIT_OK
    assert out.strip() == "value,count\n1,1\n2,1"


def test_bijection(capsys):
    code, out, _ = run(capsys, "bijection", "sincere", "--from-dyck", "[3,4,4,3,2,1]")
    assert code == EXIT_OK
    assert out.strip() == "cyclic:[6,8,9,9,8,7]"

    code, out, _ = run(capsys, "bijection", "linear", "--to-dyck", "[3,3,2,1]")
    assert code == EXIT_OK
    assert out.strip() == "UUDUDD"


def test_bijection_outside_domain(capsys):
    code, _, err = run(capsys, "bijection", "m1", "--to-dyck", "cyclic:[2,2]")
    assert code == EXIT_DOMAIN
    assert "Outside the bijection's domain" in err


def test_bijection_usage_errors(capsys):
    assert main(["bijection", "bounded", "--to-dyck", "[2,1]"]) == EXIT_USAGE
    assert main(["bijection", "linear", "--to-dyck", "[2,1]", "--from-dyck", "UD"]) == EXIT_USAGE
    assert main(["bijection", "linear"]) == EXIT_USAGE


def test_verify_worked_examples(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "worked-examples")
    assert code == EXIT_OK
    assert "✓ PASS  worked-examples" in out
    assert out.rstrip().endswith("1/1 suite(s) passed")


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "codec", "--n", "4", "--format", "json")
    assert code == EXIT_OK
    [result] = json.loads(out)
    assert result["name"] == "codec"
    assert result["n"] == 4
    assert result["passed"]


def _always_fails(n, max_entry):
    yield 0
    raise PropertyViolation("cyclic:[2,2]")


def test_verify_reports_violation(capsys, monkeypatch):
    monkeypatch.setitem(SUITES, "worked-examples", Suite("worked-examples", _always_fails, 0, "fails"))
    code, out, _ = run(capsys, "verify", "--suite", "worked-examples")
    assert code == EXIT_VIOLATION
    assert "counterexample: cyclic:[2,2]" in out


def test_verify_respects_size_cap(capsys, monkeypatch):
    code, _, err = run(capsys, "verify", "--suite", "codec", "--n", "100")
    assert code == EXIT_USAGE
    assert "exceeds the configured maximum 12" in err

    monkeypatch.setenv("NAKAYAMA_MAX_SUITE_N", "3")
    assert main(["verify", "--suite", "codec", "--n", "4"]) == EXIT_USAGE


@pytest.mark.parametrize("n", ["0", "-3"])
def test_verify_rejects_empty_bound(capsys, n):
    code, out, err = run(capsys, "verify", "--suite", "sincere-bounce", "--n", n)
    assert code == EXIT_USAGE
    assert "PASS" not in out
    assert f"--n {n} must be at least 1" in err


@pytest.mark.parametrize("name, value", [
    ("NAKAYAMA_WORKERS", "abc"),
    ("NAKAYAMA_MAX_SUITE_N", "0"),
    ("NAKAYAMA_FORMAT", "xml"),
])
def test_bad_environment_is_a_usage_error(capsys, monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    code, out, err = run(capsys, "distribution", "gldim", "--n", "3")
    assert code == EXIT_USAGE
    assert out == ""
    assert err.startswith("❌ Error loading settings")


def test_bad_log_level_flag_is_a_usage_error(capsys):
    code, _, err = run(capsys, "--log-level", "loud", "analyze", "[2,1]")
    assert code == EXIT_USAGE
    assert "unknown log level" in err


def test_version_and_usage(capsys):
    assert main(["--version"]) == EXIT_OK
    assert "nakayama" in capsys.readouterr().out
    assert main([]) == EXIT_USAGE
    assert main(["enumerate", "linear"]) == EXIT_USAGE
