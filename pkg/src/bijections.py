"""
Bijections

Explicit maps between Nakayama algebras and Dyck paths:

- connected linear algebras with n simples <-> paths of semilength n-1
  (the Kupisch series is the area sequence)
- algebras with a unique projective of dimension n <-> paths of semilength n
- sincere cyclic algebras of finite global dimension <-> paths of semilength n-1
- linear products with gldim <= g <-> paths of semilength n and height <= g+1

plus rotation normalization for cyclic series.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .dyck import DyckPath, PathDecomposition, area_sequence, bounce, decompose_bounded, from_area, recompose_bounded
from .kupisch import (
    KupischSeries,
    NakayamaError,
    WrongKind,
    global_dimension,
    is_connected,
    is_sincere,
)
from .trees import (
    BoundViolated,
    TreeDecomposition,
    decompose_tree_bounded,
    dyck_to_tree,
    forget_labels,
    natural_labeling,
    recompose_tree_bounded,
    tau,
    tau_inverse,
    tree_to_dyck,
)

logger = logging.getLogger(__name__)


class NotM1(NakayamaError):
    """Raised when a series does not have exactly one entry equal to n"""
    def __init__(self, message: str, series: Optional[KupischSeries] = None):
        super().__init__(message)
        self.series = series


class NotSincereFinite(NakayamaError):
    """Raised when a series is not sincere cyclic of finite global dimension"""
    def __init__(self, message: str, series: Optional[KupischSeries] = None):
        super().__init__(message)
        self.series = series


class NotConnectedLinear(NakayamaError):
    """Raised when a connected linear series is required"""
    def __init__(self, message: str, series: Optional[KupischSeries] = None):
        super().__init__(message)
        self.series = series


@dataclass(frozen=True)
class RotationClass:
    """Lexicographically minimal rotation and the shift producing it"""
    representative: KupischSeries
    shift: int


def _rotate(series: KupischSeries, shift: int) -> KupischSeries:
    entries = series.entries
    return KupischSeries.from_entries(entries[shift:] + entries[:shift])


def canonical_rotation(series: KupischSeries) -> RotationClass:
    """
    Rotation class of a cyclic series.

    Raises:
        WrongKind: For linear series
    """
    if not series.is_cyclic:
        raise WrongKind(f"Rotations apply to cyclic series, got {series}", expected="cyclic")
    entries = series.entries
    best_shift = min(range(series.n), key=lambda s: (entries[s:] + entries[:s], s))
    return RotationClass(representative=_rotate(series, best_shift), shift=best_shift)


def rotate_to_entry(series: KupischSeries, value: int) -> KupischSeries:
    """
    Rotate so that the unique entry equal to value sits at index 0.

    Raises:
        NotM1: If value does not occur exactly once, or a linear series does
            not already start with it
    """
    positions = [i for i, c in enumerate(series.entries) if c == value]
    if len(positions) != 1:
        raise NotM1(f"{series} has {len(positions)} entries equal to {value}", series)
    index = positions[0]
    if index == 0:
        return series
    if not series.is_cyclic:
        raise NotM1(f"Linear series {series} does not start with {value}", series)
    return _rotate(series, index)


def linear_to_dyck(series: KupischSeries) -> DyckPath:
    """
    The path whose area sequence is the Kupisch series.

    Raises:
        NotConnectedLinear: For cyclic series or linear products
    """
    if not series.is_linear or not is_connected(series):
        raise NotConnectedLinear(f"{series} is not connected linear", series)
    return from_area(series.entries)


def dyck_to_linear(path: DyckPath) -> KupischSeries:
    """Connected linear series equal to the area sequence of the path"""
    return KupischSeries.from_entries(area_sequence(path))


def m1_to_dyck(series: KupischSeries) -> DyckPath:
    """
    Map an algebra with a unique projective of dimension n to a path of
    semilength n.

    After rotating so that c_0 = n, with k the largest index such that
    c_k <= n, the area sequence is c'_i = n + 2 - c_{k-i} for i <= k,
    c'_i = c_i - n + 1 for k < i < n and c'_n = 1.

    Raises:
        NotM1: If n is not an entry exactly once
    """
    n = series.n
    c = rotate_to_entry(series, n).entries
    k = max(i for i in range(n) if c[i] <= n)
    area = [n + 2 - c[k - i] for i in range(k + 1)]
    area += [c[i] - n + 1 for i in range(k + 1, n)]
    area.append(1)
    return from_area(area)


def dyck_to_m1(path: DyckPath) -> KupischSeries:
    """
    Inverse of m1_to_dyck; the result has c_0 = n.

    Raises:
        NotM1: For the empty path
    """
    n = path.semilength
    if n == 0:
        raise NotM1("The empty path has no algebra with a unique projective of dimension n")
    area = area_sequence(path)
    k = min(i for i in range(n + 1) if area[i] == 2)
    entries = [n + 2 - area[k - i] for i in range(k + 1)]
    entries += [area[i] + n - 1 for i in range(k + 1, n)]
    return KupischSeries.from_entries(entries)


def _sincere_pivot(series: KupischSeries) -> KupischSeries:
    n = series.n
    if not series.is_cyclic or n < 2 or not is_sincere(series):
        raise NotSincereFinite(f"{series} is not a sincere cyclic series with n >= 2", series)
    positions = [i for i, c in enumerate(series.entries) if c == n]
    if len(positions) != 1:
        raise NotSincereFinite(f"{series} does not have a unique projective of dimension {n}", series)
    return rotate_to_entry(series, n)


def sincere_to_dyck(series: KupischSeries) -> DyckPath:
    """
    Map a sincere algebra of finite global dimension to the path with area
    sequence [c_1 - n + 1, ..., c_{n-1} - n + 1, 1] (rotated so c_0 = n).

    Raises:
        NotSincereFinite: If the series is not sincere cyclic with a unique
            entry n, or n < 2
    """
    c = _sincere_pivot(series).entries
    n = series.n
    return from_area([c[i] - n + 1 for i in range(1, n)] + [1])


def dyck_to_sincere(path: DyckPath) -> KupischSeries:
    """
    Inverse of sincere_to_dyck: add n - 1 to every area entry, where
    n = semilength + 1, and put c_0 = n in front.

    Raises:
        NotSincereFinite: For the empty path
    """
    if path.semilength == 0:
        raise NotSincereFinite("The empty path has no sincere algebra; sincere maps start at n = 2")
    n = path.semilength + 1
    area = area_sequence(path)
    return KupischSeries.from_entries([n] + [a + n - 1 for a in area[:-1]])


def sincere_gldim(series: KupischSeries) -> int:
    """Global dimension of a sincere algebra as twice the bounce count"""
    return 2 * bounce(sincere_to_dyck(series)).count


def algebra_to_bounded_dyck(series: KupischSeries, g: int) -> DyckPath:
    """
    Map a linear product with gldim <= g to a path of semilength n and
    height <= g + 1.

    The tree τ(A) is decomposed into pieces, each piece becomes a path by
    pre-order traversal, and the paths are recomposed.

    Raises:
        WrongKind: For cyclic series
        BoundViolated: If gldim(A) > g
    """
    if not series.is_linear:
        raise WrongKind(f"Bounded bijection needs a linear series, got {series}", expected="linear")
    if global_dimension(series) > g:
        raise BoundViolated(f"{series} has global dimension above {g}", g)
    pieces = decompose_tree_bounded(forget_labels(tau(series)), g)
    paths = PathDecomposition(
        m=pieces.m,
        left=tuple(tree_to_dyck(tree) for tree in pieces.left),
        right=tuple(tree_to_dyck(tree) for tree in pieces.right),
        middle=tree_to_dyck(pieces.middle),
    )
    return recompose_bounded(paths, g)


def bounded_dyck_to_algebra(path: DyckPath, g: int) -> KupischSeries:
    """
    Inverse of algebra_to_bounded_dyck.

    Raises:
        HeightExceeded: If the path is higher than g + 1
    """
    pieces = decompose_bounded(path, g)
    trees = TreeDecomposition(
        m=pieces.m,
        left=tuple(dyck_to_tree(p) for p in pieces.left),
        right=tuple(dyck_to_tree(p) for p in pieces.right),
        middle=dyck_to_tree(pieces.middle),
    )
    return tau_inverse(natural_labeling(recompose_tree_bounded(trees, g)))


@lru_cache(maxsize=None)
def catalan(n: int) -> int:
    """C_n by the recurrence C_{n+1} = Σ C_i C_{n-i}"""
    if n <= 0:
        return 1
    return sum(catalan(i) * catalan(n - 1 - i) for i in range(n))
