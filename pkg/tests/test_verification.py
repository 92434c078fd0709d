import anyio
import anyio.to_process
import pytest

from src import verification
from src.verification import (
    SUITES,
    PropertyViolation,
    Suite,
    SuiteResult,
    check,
    run_suite,
    run_suites,
    run_suites_async,
)


def test_registry_order():
    assert list(SUITES) == [
        "worked-examples",
        "codec",
        "homological",
        "quiver-oracle",
        "tree-distance",
        "decomposition",
        "equidistribution",
        "m1",
        "sincere-bounce",
    ]


def test_worked_examples_pass():
    result = run_suite("worked-examples")
    assert result.passed
    assert result.counterexample is None
    assert result.checked > 0


@pytest.mark.parametrize("name, n", [
    ("codec", 5),
    ("homological", 3),
    ("quiver-oracle", 3),
    ("tree-distance", 5),
    ("decomposition", 5),
    ("equidistribution", 6),
    ("m1", 4),
    ("sincere-bounce", 5),
])
def test_suites_pass_at_small_bounds(name, n):
    result = run_suite(name, n)
    assert result.passed, result.counterexample
    assert result.n == n
    assert result.checked > 0


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("no-such-suite")


def test_check():
    check(True, "unused")
    with pytest.raises(PropertyViolation) as info:
        check(False, "[2,1]")
    assert info.value.counterexample == "[2,1]"


def _fails_at_two(n, max_entry):
    check(n < 2, f"n={n}")
    yield 1


def _fails_at_three(n, max_entry):
    for k in range(1, n + 1):
        check(k < 3, f"k={k}")
        yield 1


def test_violation_is_reported(monkeypatch):
    monkeypatch.setitem(SUITES, "m1", Suite("m1", _fails_at_two, 2, "fails at two"))
    result = run_suite("m1")
    assert not result.passed
    assert result.checked == 0
    assert result.counterexample == "n=2"
    assert run_suite("m1", 1).passed


def test_violation_keeps_the_running_count(monkeypatch):
    monkeypatch.setitem(SUITES, "codec", Suite("codec", _fails_at_three, 5, "fails at three"))
    result = run_suite("codec")
    assert not result.passed
    assert result.checked == 2
    assert result.counterexample == "k=3"


def test_run_suites_keeps_order():
    results = run_suites(["codec", "worked-examples"], n=3)
    assert [r.name for r in results] == ["codec", "worked-examples"]
    assert all(isinstance(r, SuiteResult) and r.passed for r in results)


@pytest.fixture
def in_process_workers(monkeypatch):
    calls = []

    async def fake_run_sync(func, *args, limiter=None):
        calls.append(args[0])
        return func(*args)

    monkeypatch.setattr(anyio.to_process, "run_sync", fake_run_sync)
    return calls


async def test_run_suites_async_fans_out(in_process_workers):
    names = ["m1", "codec", "homological"]
    results = await run_suites_async(names, n=3, workers=2)
    assert [r.name for r in results] == names
    assert sorted(in_process_workers) == sorted(names)
    assert all(r.passed for r in results)


def test_run_suites_uses_workers(in_process_workers):
    results = run_suites(["codec", "m1"], n=3, workers=2)
    assert [r.name for r in results] == ["codec", "m1"]
    assert sorted(in_process_workers) == ["codec", "m1"]


def test_single_suite_stays_in_process(in_process_workers):
    run_suites(["codec"], n=3, workers=4)
    assert in_process_workers == []
    assert verification.SUITES["codec"].default_n == 10
