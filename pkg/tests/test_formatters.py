from src.dyck import PathParseError
from src.enumeration import Distribution
from src.kupisch import SeriesParseError
from src.reports import analyze, dyck_statistics, resolve
from src.utils.formatters import (
    format_dimension,
    format_distribution,
    format_dyck_report,
    format_error,
    format_items,
    format_matrix,
    format_rational,
    format_report,
    format_resolution,
    format_sequence,
    to_csv,
)
from src.verification import SuiteResult


def test_dimensions_and_rationals():
    assert format_dimension("infinite") == "∞"
    assert format_dimension(float("inf")) == "∞"
    assert format_dimension(4) == "4"
    assert format_rational({"num": 1, "den": 2}) == "1/2"
    assert format_rational({"num": 3, "den": 1}) == "3"


def test_matrix_is_right_aligned():
    assert format_matrix([[1, 10], [0, 1]], indent="") == [" 1 10", " 0  1"]


def test_format_report():
    text = format_report(analyze("cyclic:[2,2]"))
    assert text.startswith("**cyclic:[2,2]** (cyclic, n=2)")
    assert "  Global dimension: ∞" in text
    assert "Magnitude: undefined (singular Cartan matrix)" in text
    assert "    components: 2" in text

    linear = format_report(analyze("[3,4,4,3,2,1]"))
    assert "  Magnitude: 2" in linear
    assert "bounce [2,5] (count 2)" in linear


def test_format_resolution():
    text = format_resolution(resolve("cyclic:[2,2]", 0))
    assert text.splitlines()[0] == "**b(0,1)**  pdim ∞"
    assert text.endswith("e_0A ← e_1A ← e_0A ← e_1A ← …")


def test_format_dyck_report():
    text = format_dyck_report(dyck_statistics("UDUUDD"))
    assert "  Height: 2" in text
    assert "  Prime factors: UD · UUDD" in text
    assert "(empty)" in format_dyck_report(dyck_statistics(""))


def test_format_items():
    assert format_items("linear", 3, []) == "No linear objects for n=3."
    text = format_items("linear", 3, ["[2,2,1]", "[3,2,1]"])
    assert text.splitlines() == ["Found 2 linear object(s) for n=3:", "[2,2,1]", "[3,2,1]"]


def test_format_sequence():
    text = format_sequence("dyck", {2: 2, 1: 1, 3: 5})
    assert text.splitlines() == ["dyck counts for n=1..3:", "  n=1: 1", "  n=2: 2", "  n=3: 5"]


def test_format_distribution():
    dist = Distribution(statistic="gldim", n=3, counts={1: 1, 2: 1}, total=2)
    text = format_distribution(dist)
    assert text.splitlines()[0] == "gldim distribution, n=3 (2 objects)"
    assert text.endswith("polynomial: q + q^2")


def test_format_suite_results():
    from src.utils.formatters import format_suite_results

    results = [
        SuiteResult(name="codec", n=4, passed=True, checked=14, seconds=0.5),
        SuiteResult(name="m1", n=4, passed=False, checked=0, counterexample="cyclic:[2,2]", seconds=0.1),
    ]
    text = format_suite_results(results)
    assert "✓ PASS  codec (n=4, 14 checked, 0.50s)" in text
    assert "    counterexample: cyclic:[2,2]" in text
    assert text.endswith("1/2 suite(s) passed")


def test_to_csv():
    assert to_csv(["value", "count"], [(1, 2)]) == "value,count\n1,2"


def test_format_error():
    assert format_error(SeriesParseError("bad input")).startswith("❌ Error: Invalid Kupisch series - ")
    assert format_error(PathParseError("bad path"), "parsing").startswith("❌ Error parsing: Invalid Dyck path - ")
    assert format_error(ValueError("boom")) == "❌ Error: boom"
