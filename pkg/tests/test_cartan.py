import pytest
import sympy as sp

from src.cartan import (
    SingularMatrix,
    cartan_determinant,
    cartan_inverse,
    cartan_matrix,
    even_pdim_simple_count,
    magnitude,
    magnitude_via_ext,
    rational_json,
)
from src.kupisch import InfiniteGlobalDimension, parse_series


def test_cartan_matrix_linear():
    matrix = cartan_matrix(parse_series("[3,4,4,3,2,1]"))
    assert matrix.rows() == [
        [1, 1, 1, 0, 0, 0],
        [0, 1, 1, 1, 1, 0],
        [0, 0, 1, 1, 1, 1],
        [0, 0, 0, 1, 1, 1],
        [0, 0, 0, 0, 1, 1],
        [0, 0, 0, 0, 0, 1],
    ]


def test_cartan_matrix_cyclic_rows_sum_to_entries():
    series = parse_series("cyclic:[3,3,3,4]")
    matrix = cartan_matrix(series)
    assert matrix.rows() == [[1, 1, 1, 0], [0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 1, 1]]
    assert [sum(row) for row in matrix.rows()] == list(series.entries)


@pytest.mark.parametrize("text, determinant, value", [
    ("[3,4,4,3,2,1]", 1, sp.Integer(2)),
    ("cyclic:[3,3,3,4]", 1, sp.Integer(1)),
    ("cyclic:[2]", 2, sp.Rational(1, 2)),
])
def test_determinant_and_magnitude(text, determinant, value):
    series = parse_series(text)
    assert cartan_determinant(series) == determinant
    assert magnitude(series) == value
    assert isinstance(magnitude(series), sp.Rational)


def test_magnitude_chain_for_finite_global_dimension():
    for text in ("[3,4,4,3,2,1]", "cyclic:[3,3,3,4]", "cyclic:[6,8,9,9,8,7]"):
        series = parse_series(text)
        assert magnitude(series) == magnitude_via_ext(series) == even_pdim_simple_count(series)


def test_singular_matrix():
    series = parse_series("cyclic:[2,2]")
    assert cartan_determinant(series) == 0
    with pytest.raises(SingularMatrix) as info:
        magnitude(series)
    assert info.value.determinant == 0
    with pytest.raises(SingularMatrix):
        cartan_inverse(series)


def test_finite_only_operations():
    series = parse_series("cyclic:[2,2]")
    with pytest.raises(InfiniteGlobalDimension):
        even_pdim_simple_count(series)
    with pytest.raises(InfiniteGlobalDimension):
        magnitude_via_ext(series)


def test_inverse_is_exact():
    inverse = cartan_inverse(parse_series("[2,1]"))
    assert inverse == sp.ImmutableMatrix([[1, -1], [0, 1]])


def test_rational_json():
    assert rational_json(sp.Rational(1, 2)) == {"num": 1, "den": 2}
    assert rational_json(sp.Rational(-2, 4)) == {"num": -1, "den": 2}
    assert rational_json(3) == {"num": 3, "den": 1}
