"""
Cartan Matrix

Exact Cartan-matrix linear algebra over the integers and rationals:
construction, determinant, inverse and magnitude, plus the two
combinatorial formulas for magnitude (Ext alternating sum and the count
of simples of even projective dimension).
"""

import logging
from typing import Dict, List, Tuple, Union

import sympy as sp
from pydantic import BaseModel, ConfigDict

from .kupisch import (
    InfiniteGlobalDimension,
    KupischSeries,
    NakayamaError,
    ext_dimension,
    global_dimension,
    simple_projective_dimensions,
    INFINITY,
)

logger = logging.getLogger(__name__)

# Magnitudes and cycle weights are sympy Rationals until serialized
Magnitude = sp.Rational


class SingularMatrix(NakayamaError):
    """Raised when an inverse of a singular Cartan matrix is requested"""
    def __init__(self, message: str, determinant: int = 0):
        super().__init__(message)
        self.determinant = determinant


class CartanMatrix(BaseModel):
    """Cartan matrix C_A with c_ij = dim e_i A e_j"""
    model_config = ConfigDict(frozen=True)

    n: int
    entries: Tuple[Tuple[int, ...], ...]

    def to_sympy(self) -> sp.ImmutableMatrix:
        return sp.ImmutableMatrix(self.n, self.n, lambda i, j: self.entries[i][j])

    def rows(self) -> List[List[int]]:
        """Row-major JSON form"""
        return [list(row) for row in self.entries]


def cartan_matrix(series: KupischSeries) -> CartanMatrix:
    """
    Build the Cartan matrix of a Nakayama algebra.

    Entry (i, j) counts the occurrences of j in the window i, i+1, ..., i+c_i-1
    (read mod n for cyclic series), so row i sums to c_i.

    Args:
        series: Kupisch series

    Returns:
        The n×n Cartan matrix
    """
    n = series.n
    rows = []
    for i, c in enumerate(series.entries):
        row = [0] * n
        for t in range(c):
            # linear windows never leave [0, n)
            row[(i + t) % n] += 1
        rows.append(tuple(row))
    return CartanMatrix(n=n, entries=tuple(rows))


def cartan_determinant(series: KupischSeries) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination"""
    matrix = cartan_matrix(series).to_sympy()
    return int(matrix.det(method="bareiss"))


def cartan_inverse(series: KupischSeries) -> sp.ImmutableMatrix:
    """
    Exact inverse of the Cartan matrix with sympy Rational entries.

    Raises:
        SingularMatrix: If the determinant is zero
    """
    matrix = cartan_matrix(series).to_sympy()
    determinant = int(matrix.det(method="bareiss"))
    if determinant == 0:
        raise SingularMatrix(f"Cartan matrix of {series} is singular", determinant)
    return sp.ImmutableMatrix(matrix.inv(method="LU"))


def magnitude(series: KupischSeries) -> Magnitude:
    """
    Sum of all entries of the inverse Cartan matrix.

    Defined whenever the Cartan matrix is invertible, including algebras of
    infinite global dimension.

    Raises:
        SingularMatrix: If the determinant is zero
    """
    inverse = cartan_inverse(series)
    return sp.Rational(sum(inverse, sp.Integer(0)))


def magnitude_via_ext(series: KupischSeries) -> int:
    """
    Alternating sum Σ_k (-1)^k Σ_{i,j} dim Ext^k(S_i, S_j) for k = 0..gldim.

    Raises:
        InfiniteGlobalDimension: If gldim is infinite
    """
    g = global_dimension(series)
    if g == INFINITY:
        raise InfiniteGlobalDimension(f"{series} has infinite global dimension", series)
    n = series.n
    total = 0
    for k in range(int(g) + 1):
        dimension = sum(ext_dimension(series, i, j, k) for i in range(n) for j in range(n))
        total += dimension if k % 2 == 0 else -dimension
    return total


def even_pdim_simple_count(series: KupischSeries) -> int:
    """
    Number of simple modules of even projective dimension.

    Raises:
        InfiniteGlobalDimension: If gldim is infinite
    """
    dimensions = simple_projective_dimensions(series)
    if INFINITY in dimensions:
        raise InfiniteGlobalDimension(f"{series} has infinite global dimension", series)
    return sum(1 for d in dimensions if d % 2 == 0)


def rational_json(value: Union[sp.Rational, int]) -> Dict[str, int]:
    """Serialize a rational as {"num": p, "den": q} in lowest terms with q > 0"""
    value = sp.Rational(value)
    return {"num": int(value.p), "den": int(value.q)}
