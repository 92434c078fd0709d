"""
Reports

Assembles the results the CLI and the tool server present: full analysis of
one algebra, resolutions, Dyck-path statistics, bijections, enumerations and
distributions. Everything here returns pydantic models or plain values;
rendering lives in utils.formatters.
"""

import logging
from typing import Any, Dict, Iterator, List, Optional, Union

from pydantic import BaseModel, Field

from . import bijections
from .cartan import (
    SingularMatrix,
    cartan_determinant,
    cartan_matrix,
    even_pdim_simple_count,
    magnitude,
    rational_json,
)
from .dyck import DyckPath, area_sequence, bounce, height, parse_path, prime_factors
from .enumeration import (
    Distribution,
    cyclic_finite_gldim_counts,
    enumerate_connected_linear,
    enumerate_cyclic,
    enumerate_cyclic_finite_gldim,
    enumerate_dyck_paths,
    enumerate_linear_products,
    enumerate_m1,
    enumerate_ordered_trees,
    enumerate_sincere_finite,
    gldim_distribution,
    height_distribution,
)
from .kupisch import (
    INFINITY,
    HomDimension,
    KupischSeries,
    UniserialModule,
    classify_series,
    cokupisch,
    format_series,
    is_connected,
    is_sincere,
    loewy_length,
    parse_series,
    projective_dimension,
    projective_resolution,
    simple_projective_dimensions,
    syzygy_orbit,
)
from .resolution_quiver import build, cycle_report, to_json

logger = logging.getLogger(__name__)

FAMILIES = ("linear", "products", "cyclic", "cyclic-finite", "dyck", "trees", "m1", "sincere")
BIJECTIONS = ("linear", "m1", "sincere", "bounded")
STATISTICS = ("gldim", "height")

DimensionValue = Union[int, str]


def dimension_value(value: HomDimension) -> DimensionValue:
    """JSON form of a homological dimension: an int or "infinite" """
    return "infinite" if value == INFINITY else int(value)


class DyckSummary(BaseModel):
    """A Dyck path attached to an algebra by one of the bijections"""
    bijection: str
    steps: str
    area: List[int]
    height: int
    bounce_points: List[int]
    bounce_count: int


class QuiverSummary(BaseModel):
    successors: List[int]
    cycles: List[Dict[str, Any]]
    components: int
    finite_gldim: bool


class AnalysisReport(BaseModel):
    """Everything computable about a single Nakayama algebra"""
    input: str
    series: str
    classification: str
    n: int
    loewy_length: int
    global_dimension: DimensionValue
    projective_dimensions: List[DimensionValue]
    cokupisch: List[int]
    cartan_matrix: List[List[int]]
    cartan_determinant: int
    magnitude: Optional[Dict[str, int]] = None
    even_pdim_simples: Optional[int] = None
    sincere: bool
    resolution_quiver: Optional[QuiverSummary] = None
    dyck_paths: List[DyckSummary] = Field(default_factory=list)


class DyckReport(BaseModel):
    steps: str
    semilength: int
    area: List[int]
    height: int
    bounce_points: List[int]
    bounce_count: int
    prime_factors: List[str]


class ResolutionReport(BaseModel):
    module: str
    projective_dimension: DimensionValue
    syzygies: List[str]
    terms: List[int]
    truncated: bool


class BijectionResult(BaseModel):
    kind: str
    direction: str
    input: str
    series: str
    path: str
    area: List[int]


def parse_algebra(text: str) -> KupischSeries:
    """
    Read an algebra from a series (`[3,4,4,3,2,1]`, `cyclic:[3,3,3,4]`) or
    from a Dyck path word, which stands for its connected linear algebra.

    Raises:
        SeriesParseError: On a malformed series
        PathParseError: On a malformed path
    """
    raw = text.strip()
    if raw == "" or raw[0] in "UDud":
        return bijections.dyck_to_linear(parse_path(raw))
    return parse_series(raw)


def _dyck_summary(kind: str, path: DyckPath) -> DyckSummary:
    bounce_path = bounce(path)
    return DyckSummary(
        bijection=kind,
        steps=path.steps,
        area=list(area_sequence(path)),
        height=height(path),
        bounce_points=list(bounce_path.points),
        bounce_count=bounce_path.count,
    )


def _attached_paths(series: KupischSeries) -> List[DyckSummary]:
    paths = []
    n = series.n
    if series.is_linear and is_connected(series):
        paths.append(_dyck_summary("linear", bijections.linear_to_dyck(series)))
    if series.entries.count(n) == 1 and (series.is_cyclic or series.entries[0] == n):
        paths.append(_dyck_summary("m1", bijections.m1_to_dyck(series)))
    if series.is_cyclic and n >= 2 and series.entries.count(n) == 1 and is_sincere(series):
        paths.append(_dyck_summary("sincere", bijections.sincere_to_dyck(series)))
    return paths


def analyze(text: str) -> AnalysisReport:
    """
    Analyze one algebra given as a series or a Dyck path.

    Magnitude is left empty when the Cartan matrix is singular, and the
    resolution quiver only exists for cyclic series.
    """
    series = parse_algebra(text)
    logger.debug(f"Analyzing {series}")
    dimensions = simple_projective_dimensions(series)
    gldim = max(dimensions)

    try:
        magnitude_value = rational_json(magnitude(series))
    except SingularMatrix:
        magnitude_value = None

    quiver_summary = None
    if series.is_cyclic:
        quiver = build(series)
        report = cycle_report(quiver, series)
        data = to_json(quiver, report)
        quiver_summary = QuiverSummary(
            successors=data["successors"],
            cycles=data["cycles"],
            components=data["components"],
            finite_gldim=report.component_count == 1 and report.cycles[0].weight == 1,
        )

    return AnalysisReport(
        input=text.strip(),
        series=format_series(series),
        classification=classify_series(series.entries).value,
        n=series.n,
        loewy_length=loewy_length(series),
        global_dimension=dimension_value(gldim),
        projective_dimensions=[dimension_value(d) for d in dimensions],
        cokupisch=list(cokupisch(series)),
        cartan_matrix=cartan_matrix(series).rows(),
        cartan_determinant=cartan_determinant(series),
        magnitude=magnitude_value,
        even_pdim_simples=even_pdim_simple_count(series) if gldim != INFINITY else None,
        sincere=is_sincere(series),
        resolution_quiver=quiver_summary,
        dyck_paths=_attached_paths(series),
    )


def resolve(text: str, vertex: int, length: int = 1, max_terms: Optional[int] = None) -> ResolutionReport:
    """
    Minimal projective resolution of b(vertex, length).

    Modules of infinite projective dimension are cut after max_terms terms
    (default 2n).
    """
    series = parse_algebra(text)
    module = UniserialModule(series, vertex, length)
    pdim = projective_dimension(module)
    if pdim == INFINITY and max_terms is None:
        max_terms = 2 * series.n
    terms = projective_resolution(module, max_terms=max_terms)
    return ResolutionReport(
        module=str(module),
        projective_dimension=dimension_value(pdim),
        syzygies=[str(m) for m in syzygy_orbit(module)],
        terms=terms,
        truncated=len(terms) < pdim + 1,
    )


def dyck_statistics(text: str) -> DyckReport:
    """Area, height, bounce and prime factors of a path"""
    path = parse_path(text)
    bounce_path = bounce(path)
    return DyckReport(
        steps=path.steps,
        semilength=path.semilength,
        area=list(area_sequence(path)),
        height=height(path),
        bounce_points=list(bounce_path.points),
        bounce_count=bounce_path.count,
        prime_factors=[factor.steps for factor in prime_factors(path)],
    )


def run_bijection(kind: str, direction: str, value: str, g: Optional[int] = None) -> BijectionResult:
    """
    Apply one of the algebra <-> Dyck path bijections.

    Args:
        kind: linear, m1, sincere or bounded
        direction: to-dyck (value is a series) or from-dyck (value is a path)
        value: Input text
        g: Global dimension bound, required for the bounded bijection

    Raises:
        ValueError: On an unknown kind or direction, or a missing g
    """
    if kind not in BIJECTIONS:
        raise ValueError(f"Unknown bijection {kind!r}; expected one of {', '.join(BIJECTIONS)}")
    if kind == "bounded" and g is None:
        raise ValueError("The bounded bijection needs a bound g")

    if direction == "to-dyck":
        series = parse_series(value)
        if kind == "linear":
            path = bijections.linear_to_dyck(series)
        elif kind == "m1":
            path = bijections.m1_to_dyck(series)
        elif kind == "sincere":
            path = bijections.sincere_to_dyck(series)
        else:
            path = bijections.algebra_to_bounded_dyck(series, g)
    elif direction == "from-dyck":
        path = parse_path(value)
        if kind == "linear":
            series = bijections.dyck_to_linear(path)
        elif kind == "m1":
            series = bijections.dyck_to_m1(path)
        elif kind == "sincere":
            series = bijections.dyck_to_sincere(path)
        else:
            series = bijections.bounded_dyck_to_algebra(path, g)
    else:
        raise ValueError(f"Unknown direction {direction!r}; expected to-dyck or from-dyck")

    return BijectionResult(
        kind=kind,
        direction=direction,
        input=value.strip(),
        series=format_series(series),
        path=path.steps,
        area=list(area_sequence(path)),
    )


def enumerate_family(family: str, n: int, max_entry: Optional[int] = None, raw: bool = False) -> Iterator[str]:
    """
    Textual items of an enumeration family.

    Args:
        family: One of FAMILIES
        n: Number of simples (semilength for dyck, vertices for trees)
        max_entry: Entry bound for cyclic (default 2n - 1)
        raw: For cyclic families, list every series instead of one per rotation class

    Raises:
        ValueError: On an unknown family
    """
    if family == "linear":
        items = enumerate_connected_linear(n)
    elif family == "products":
        items = enumerate_linear_products(n)
    elif family == "cyclic":
        bound = max_entry if max_entry is not None else 2 * n - 1
        items = enumerate_cyclic(n, bound, canonical=not raw)
    elif family == "cyclic-finite":
        items = enumerate_cyclic_finite_gldim(n, canonical=not raw)
    elif family == "m1":
        items = enumerate_m1(n)
    elif family == "sincere":
        items = enumerate_sincere_finite(n)
    elif family == "dyck":
        return (path.steps for path in enumerate_dyck_paths(n))
    elif family == "trees":
        return (tree.to_parentheses() for tree in enumerate_ordered_trees(n))
    else:
        raise ValueError(f"Unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    return (format_series(series) for series in items)


def family_sequence(family: str, n_max: int, max_entry: Optional[int] = None, raw: bool = False) -> Dict[int, int]:
    """
    Per-size counts of a family for n = 1..n_max, for comparison against
    integer sequence tables.

    Raises:
        ValueError: On an unknown family or n_max < 1
    """
    if n_max < 1:
        raise ValueError(f"n_max must be at least 1, got {n_max}")
    if family == "cyclic-finite":
        return cyclic_finite_gldim_counts(n_max, canonical=not raw)
    return {
        n: sum(1 for _ in enumerate_family(family, n, max_entry=max_entry, raw=raw))
        for n in range(1, n_max + 1)
    }


def distribution(statistic: str, n: int) -> Distribution:
    """
    Raises:
        ValueError: On an unknown statistic
    """
    if statistic == "gldim":
        return gldim_distribution(n)
    if statistic == "height":
        return height_distribution(n)
    raise ValueError(f"Unknown statistic {statistic!r}; expected gldim or height")
