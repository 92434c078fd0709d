import pytest

from src.dyck import PathParseError
from src.kupisch import SeriesParseError
from src.reports import (
    AnalysisReport,
    analyze,
    distribution,
    dyck_statistics,
    enumerate_family,
    family_sequence,
    parse_algebra,
    resolve,
    run_bijection,
)


def test_analyze_linear_example():
    report = analyze("[3,4,4,3,2,1]")
    assert report.classification == "connected_linear"
    assert report.global_dimension == 3
    assert report.projective_dimensions == [3, 2, 1, 1, 1, 0]
    assert report.magnitude == {"num": 2, "den": 1}
    assert report.even_pdim_simples == 2
    assert report.cartan_determinant == 1
    assert report.resolution_quiver is None
    assert [p.bijection for p in report.dyck_paths] == ["linear"]
    assert report.dyck_paths[0].bounce_points == [2, 5]
    assert report.dyck_paths[0].height == 3


def test_analyze_cyclic_example():
    report = analyze("cyclic:[3,3,3,4]")
    assert report.global_dimension == 5
    assert report.magnitude == {"num": 1, "den": 1}
    assert report.cokupisch == [3, 3, 4, 3]
    quiver = report.resolution_quiver
    assert quiver.successors == [3, 0, 1, 3]
    assert quiver.cycles == [{"vertices": [3], "weight": {"num": 1, "den": 1}}]
    assert quiver.finite_gldim
    assert not report.sincere
    assert [p.bijection for p in report.dyck_paths] == ["m1"]
    assert report.dyck_paths[0].area == [3, 3, 3, 2, 1]


def test_analyze_infinite_global_dimension():
    report = analyze("cyclic:[2,2]")
    assert report.global_dimension == "infinite"
    assert report.cartan_determinant == 0
    assert report.magnitude is None
    assert report.even_pdim_simples is None
    assert not report.resolution_quiver.finite_gldim


def test_analyze_sincere_attaches_paths():
    report = analyze("cyclic:[6,8,9,9,8,7]")
    assert report.sincere
    kinds = {p.bijection: p for p in report.dyck_paths}
    assert set(kinds) == {"m1", "sincere"}
    assert kinds["sincere"].bounce_count == 2


def test_analyze_accepts_paths():
    assert parse_algebra("UUDUDD").entries == (3, 3, 2, 1)
    assert analyze("UUDUDD").series == "[3,3,2,1]"


def test_analyze_json_round_trip():
    report = analyze("cyclic:[3,3,3,4]")
    restored = AnalysisReport.model_validate_json(report.model_dump_json())
    assert restored == report
    assert analyze(restored.series) == report


@pytest.mark.parametrize("text, error", [
    ("[3,1]", SeriesParseError),
    ("UDD", PathParseError),
])
def test_parse_errors(text, error):
    with pytest.raises(error):
        analyze(text)


def test_resolve_finite():
    report = resolve("cyclic:[6,8,9,9,8,7]", 0)
    assert report.module == "b(0,1)"
    assert report.projective_dimension == 4
    assert report.terms == [0, 1, 0, 3, 0]
    assert not report.truncated


def test_resolve_infinite_is_truncated():
    report = resolve("cyclic:[2,2]", 0)
    assert report.projective_dimension == "infinite"
    assert report.terms == [0, 1, 0, 1]
    assert report.truncated
    assert report.syzygies == ["b(0,1)", "b(1,1)"]


def test_dyck_statistics():
    report = dyck_statistics("[3,4,4,3,2,1]")
    assert report.semilength == 5
    assert report.height == 3
    assert report.bounce_points == [2, 5]
    assert report.bounce_count == 2


def test_run_bijection():
    result = run_bijection("sincere", "from-dyck", "[3,4,4,3,2,1]")
    assert result.series == "cyclic:[6,8,9,9,8,7]"
    back = run_bijection("sincere", "to-dyck", "cyclic:[6,8,9,9,8,7]")
    assert back.area == [3, 4, 4, 3, 2, 1]


@pytest.mark.parametrize("kind, direction, g", [
    ("bounded", "to-dyck", None),
    ("linear", "sideways", None),
    ("unknown", "to-dyck", None),
])
def test_run_bijection_usage_errors(kind, direction, g):
    with pytest.raises(ValueError):
        run_bijection(kind, direction, "[2,1]", g=g)


def test_enumerate_family():
    assert list(enumerate_family("linear", 3)) == ["[2,2,1]", "[3,2,1]"]
    assert list(enumerate_family("dyck", 2)) == ["UDUD", "UUDD"]
    assert list(enumerate_family("cyclic", 2, max_entry=3, raw=True)) == [
        "cyclic:[2,2]", "cyclic:[2,3]", "cyclic:[3,2]", "cyclic:[3,3]",
    ]
    with pytest.raises(ValueError):
        enumerate_family("tableaux", 3)


def test_family_sequence():
    assert family_sequence("cyclic-finite", 2) == {1: 0, 2: 1}
    assert family_sequence("cyclic-finite", 2, raw=True) == {1: 0, 2: 2}
    assert family_sequence("sincere", 3) == {1: 0, 2: 1, 3: 2}
    with pytest.raises(ValueError):
        family_sequence("dyck", 0)


def test_distribution():
    assert distribution("gldim", 2).counts == {1: 1}
    with pytest.raises(ValueError):
        distribution("area", 2)
