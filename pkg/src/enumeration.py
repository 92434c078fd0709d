"""
Enumeration

Exhaustive generators for Kupisch series, Dyck paths and ordered trees at
desk scale, statistic distributions, and the check that global dimension
over connected linear algebras is distributed like height over Dyck paths.

Every generator yields in lexicographic order and may be abandoned early.
"""

import logging
from collections import Counter
from typing import Dict, Iterator, List, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from .dyck import DyckPath, height
from .kupisch import KupischSeries, SeriesKind, global_dimension
from .resolution_quiver import finite_gldim_via_quiver
from .trees import OrderedTree, dyck_to_tree

logger = logging.getLogger(__name__)


class Distribution(BaseModel):
    """Value -> count table of a statistic over a finite family"""
    model_config = ConfigDict(frozen=True)

    statistic: str
    n: int
    counts: Dict[int, int]
    total: int

    @model_validator(mode="after")
    def _check_total(self) -> "Distribution":
        if sum(self.counts.values()) != self.total:
            raise ValueError(f"counts sum to {sum(self.counts.values())}, not {self.total}")
        return self

    @classmethod
    def from_values(cls, statistic: str, n: int, values: Iterator[int]) -> "Distribution":
        counter = Counter(values)
        counts = {value: counter[value] for value in sorted(counter)}
        return cls(statistic=statistic, n=n, counts=counts, total=sum(counts.values()))

    def as_polynomial(self) -> str:
        """Render Σ count·q^value, e.g. `1 + 3q + 2q^2`"""
        terms = []
        for value, count in sorted(self.counts.items()):
            if value == 0:
                terms.append(str(count))
                continue
            power = "q" if value == 1 else f"q^{value}"
            terms.append(power if count == 1 else f"{count}{power}")
        return " + ".join(terms) if terms else "0"


class EquidistributionReport(BaseModel):
    n: int
    gldim: Distribution
    height: Distribution
    equal: bool
    refined_identity: bool


def _series(entries: List[int], kind: SeriesKind) -> KupischSeries:
    # generators only produce valid entries
    return KupischSeries.model_construct(entries=tuple(entries), kind=kind)


def enumerate_connected_linear(n: int) -> Iterator[KupischSeries]:
    """
    All connected linear series with n simples: c_i >= 2 for i < n-1,
    c_{n-1} = 1 and c_i <= c_{i+1} + 1. There are C_{n-1} of them.
    """
    if n < 1:
        return
    entries: List[int] = []

    def extend(i: int) -> Iterator[KupischSeries]:
        if i == n - 1:
            yield _series(entries + [1], SeriesKind.LINEAR)
            return
        low = max(2, entries[-1] - 1) if entries else 2
        for c in range(low, n - i + 1):
            entries.append(c)
            yield from extend(i + 1)
            entries.pop()

    yield from extend(0)


def enumerate_linear_products(n: int) -> Iterator[KupischSeries]:
    """
    All ordered products of connected linear series with n simples in total;
    the entries are c_i >= 1 with c_{n-1} = 1 and c_i <= c_{i+1} + 1.
    There are C_n of them.
    """
    if n < 1:
        return
    entries: List[int] = []

    def extend(i: int) -> Iterator[KupischSeries]:
        if i == n:
            yield _series(entries, SeriesKind.LINEAR)
            return
        low = max(1, entries[-1] - 1) if entries else 1
        for c in range(low, n - i + 1):
            entries.append(c)
            yield from extend(i + 1)
            entries.pop()

    yield from extend(0)


def _is_minimal_rotation(entries: Tuple[int, ...]) -> bool:
    return all(entries <= entries[s:] + entries[:s] for s in range(1, len(entries)))


def enumerate_cyclic(n: int, max_entry: int, canonical: bool = True, min_entry: int = 2) -> Iterator[KupischSeries]:
    """
    Cyclic series with n simples and entries in [min_entry, max_entry].

    Args:
        n: Number of simples
        max_entry: Largest entry allowed
        canonical: Yield only lexicographically minimal rotations (one per
            isomorphism class); False yields every series
        min_entry: Smallest entry allowed (at least 2)

    Yields:
        Series satisfying c_i <= c_{i+1 mod n} + 1, in lexicographic order
    """
    if n < 1:
        return
    low_bound = max(2, min_entry)
    entries: List[int] = []

    def extend(i: int) -> Iterator[KupischSeries]:
        if i == n:
            if entries[-1] - 1 > entries[0]:
                return
            values = tuple(entries)
            if canonical and not _is_minimal_rotation(values):
                return
            yield _series(entries, SeriesKind.CYCLIC)
            return
        low = low_bound
        if entries:
            low = max(low, entries[-1] - 1)
            if canonical:
                # a minimal rotation starts with its smallest entry
                low = max(low, entries[0])
        for c in range(low, max_entry + 1):
            entries.append(c)
            yield from extend(i + 1)
            entries.pop()

    yield from extend(0)


def enumerate_cyclic_finite_gldim(n: int, canonical: bool = True) -> Iterator[KupischSeries]:
    """Cyclic series of finite global dimension (entries are at most 2n-1)"""
    for series in enumerate_cyclic(n, 2 * n - 1, canonical=canonical):
        if finite_gldim_via_quiver(series):
            yield series


def cyclic_finite_gldim_counts(n_max: int, canonical: bool = True) -> Dict[int, int]:
    """Number of cyclic algebras of finite global dimension for n = 1..n_max"""
    counts = {}
    for n in range(1, n_max + 1):
        counts[n] = sum(1 for _ in enumerate_cyclic_finite_gldim(n, canonical=canonical))
        logger.info(f"Cyclic finite-gldim count for n={n}: {counts[n]}")
    return counts


def enumerate_dyck_paths(n: int) -> Iterator[DyckPath]:
    """All Dyck paths of semilength n in lexicographic order (D < U)"""
    steps: List[str] = []

    def extend(ups: int, downs: int) -> Iterator[DyckPath]:
        if downs == n:
            yield DyckPath.model_construct(steps="".join(steps))
            return
        if downs < ups:
            steps.append("D")
            yield from extend(ups, downs + 1)
            steps.pop()
        if ups < n:
            steps.append("U")
            yield from extend(ups + 1, downs)
            steps.pop()

    yield from extend(0, 0)


def enumerate_ordered_trees(vertices: int) -> Iterator[OrderedTree]:
    """All ordered rooted trees with the given number of vertices"""
    if vertices < 1:
        return
    for path in enumerate_dyck_paths(vertices - 1):
        yield dyck_to_tree(path)


def enumerate_m1(n: int) -> Iterator[KupischSeries]:
    """
    Algebras with n simples and a unique projective of dimension n, up to
    rotation: the linear series [n, ..., 1] followed by the cyclic rotation
    classes. There are C_n of them.
    """
    if n < 1:
        return
    yield _series(list(range(n, 0, -1)), SeriesKind.LINEAR)
    for series in enumerate_cyclic(n, 2 * n - 1):
        if series.entries.count(n) == 1:
            yield series


def enumerate_sincere_finite(n: int) -> Iterator[KupischSeries]:
    """
    Sincere cyclic algebras of finite global dimension with n >= 2 simples,
    up to rotation: every entry is at least n and n occurs exactly once.
    There are C_{n-1} of them.
    """
    if n < 2:
        return
    for series in enumerate_cyclic(n, 2 * n - 1, min_entry=n):
        if series.entries.count(n) == 1:
            yield series


def gldim_distribution(n: int) -> Distribution:
    """Global dimension over connected linear algebras with n simples"""
    distribution = Distribution.from_values(
        "gldim", n, (int(global_dimension(series)) for series in enumerate_connected_linear(n))
    )
    logger.info(f"gldim distribution for n={n} over {distribution.total} algebras")
    return distribution


def height_distribution(n: int) -> Distribution:
    """Height over Dyck paths of semilength n-1"""
    distribution = Distribution.from_values(
        "height", n, (height(path) for path in enumerate_dyck_paths(n - 1))
    )
    logger.info(f"height distribution for n={n} over {distribution.total} paths")
    return distribution


def _cumulative(distribution: Distribution, top: int) -> List[int]:
    totals = []
    running = 0
    for value in range(top + 1):
        running += distribution.counts.get(value, 0)
        totals.append(running)
    return totals


def verify_equidistribution(n: int) -> EquidistributionReport:
    """
    Compare the gldim and height distributions for n simples.

    Also checks the counting identity
    |A(n,g)| - |A(n,g-1)| = |D(n-1,g-1)| - |D(n-1,g-2)| for every g, where
    A(n,g) counts connected linear algebras with gldim <= g and D(m,g) counts
    paths of semilength m with height <= g + 1.
    """
    gldim = gldim_distribution(n)
    heights = height_distribution(n)
    top = max(list(gldim.counts) + list(heights.counts) + [0]) + 1

    algebras = _cumulative(gldim, top)
    # D(n-1, g) = paths of height <= g + 1
    paths = _cumulative(heights, top + 1)

    def algebra_count(g: int) -> int:
        return algebras[g] if g >= 0 else 0

    def path_count(g: int) -> int:
        return paths[g + 1] if g + 1 >= 0 else 0

    refined = all(
        algebra_count(g) - algebra_count(g - 1) == path_count(g - 1) - path_count(g - 2)
        for g in range(top + 1)
    )
    return EquidistributionReport(
        n=n,
        gldim=gldim,
        height=heights,
        equal=gldim.counts == heights.counts,
        refined_identity=refined,
    )


def bounded_counts(n: int, g: int) -> Tuple[int, int]:
    """
    (|A(n,g)|, |D(n,g)|): linear products with n simples and gldim <= g,
    and Dyck paths of semilength n and height <= g + 1.
    """
    algebras = sum(1 for series in enumerate_linear_products(n) if global_dimension(series) <= g)
    paths = sum(1 for path in enumerate_dyck_paths(n) if height(path) <= g + 1)
    return algebras, paths
