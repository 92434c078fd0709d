"""
Verification Suites

Exhaustive property checks over every algebra, path or tree up to a size
bound. Each suite stops at its first counterexample; since the generators
run in increasing size and lexicographic order, that counterexample is a
smallest one.
"""

import logging
import time
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, Optional, Sequence

import anyio
import anyio.to_process
from pydantic import BaseModel

from .bijections import (
    algebra_to_bounded_dyck,
    bounded_dyck_to_algebra,
    canonical_rotation,
    catalan,
    dyck_to_linear,
    dyck_to_m1,
    dyck_to_sincere,
    linear_to_dyck,
    m1_to_dyck,
    rotate_to_entry,
    sincere_gldim,
    sincere_to_dyck,
)
from .cartan import cartan_determinant, cartan_matrix, even_pdim_simple_count, magnitude, magnitude_via_ext
from .dyck import (
    area_sequence,
    bounce,
    bounce_path_heights,
    concat,
    decompose_bounded,
    from_area,
    height,
    is_area_sequence,
    is_prime,
    parse_path,
    prime_factors,
    recompose_bounded,
    strip,
    wrap,
)
from .enumeration import (
    bounded_counts,
    enumerate_connected_linear,
    enumerate_cyclic,
    enumerate_dyck_paths,
    enumerate_linear_products,
    enumerate_m1,
    enumerate_sincere_finite,
    verify_equidistribution,
)
from .kupisch import (
    INFINITY,
    KupischSeries,
    cokupisch,
    composition_factors,
    format_series,
    global_dimension,
    has_finite_global_dimension,
    indecomposable_injective,
    indecomposable_modules,
    is_sincere,
    loewy_length,
    opposite,
    parse_series,
    projective_dimension,
    projective_resolution,
    simple,
    simple_projective_dimensions,
    syzygy,
)
from .resolution_quiver import build, cycle_report, cycle_vertex_count, finite_gldim_via_quiver
from .trees import (
    decompose_tree_bounded,
    dist,
    dyck_to_tree,
    forget_labels,
    gldim_via_tree,
    glue,
    is_naturally_labeled,
    level_sets,
    natural_labeling,
    pdim_via_tree,
    recompose_tree_bounded,
    sibling_bound_check,
    tau,
    tree_to_dyck,
)

logger = logging.getLogger(__name__)


class PropertyViolation(Exception):
    """Raised inside a suite when a property fails"""
    def __init__(self, counterexample: str):
        super().__init__(counterexample)
        self.counterexample = counterexample


class SuiteResult(BaseModel):
    name: str
    n: int
    passed: bool
    checked: int
    counterexample: Optional[str] = None
    seconds: float


def check(condition: bool, counterexample: str) -> None:
    if not condition:
        raise PropertyViolation(counterexample)


# Worked examples

def _series(text: str) -> KupischSeries:
    return parse_series(text)


def _worked_examples(n: int, max_entry: Optional[int]) -> Iterator[int]:
    staircase = _series("[3,4,4,3,2,1]")
    loop4 = _series("cyclic:[3,3,3,4]")
    sincere12 = _series("cyclic:[12,14,16,16,16,15,14,15,14,14,14,13]")
    sincere6 = _series("cyclic:[6,8,9,9,8,7]")
    left12 = _series("[5,6,5,4,4,3,3,3,2,3,2,1]")
    right12 = _series("[2,1,5,5,5,6,5,4,3,2,2,1]")
    tall_path = from_area([3, 5, 5, 5, 4, 3, 4, 3, 3, 3, 2, 1])
    first_path = parse_path("UDUUDUUUUDDDUUUDUDUDDDDD")
    second_path = parse_path("UUUUDDDDUUDDUUUUDUDDDDUD")

    def decomposition_words(path, g):
        pieces = decompose_bounded(path, g)
        return (pieces.m, [p.steps for p in pieces.left], [p.steps for p in pieces.right], pieces.middle.steps)

    def tree_words(series, g):
        pieces = decompose_tree_bounded(forget_labels(tau(series)), g)
        return (
            pieces.m,
            [t.to_parentheses() for t in pieces.left],
            [t.to_parentheses() for t in pieces.right],
            pieces.middle.to_parentheses(),
        )

    checks: List[tuple] = [
        ("loewy_length([3,4,4,3,2,1]) = 4", lambda: loewy_length(staircase) == 4),
        ("gldim([3,4,4,3,2,1]) = 3", lambda: global_dimension(staircase) == 3),
        ("magnitude([3,4,4,3,2,1]) = 2", lambda: magnitude(staircase) == 2),
        ("cartan_det([3,4,4,3,2,1]) = 1", lambda: cartan_determinant(staircase) == 1),
        ("gldim(cyclic:[3,3,3,4]) = 5", lambda: global_dimension(loop4) == 5),
        ("magnitude(cyclic:[3,3,3,4]) = 1", lambda: magnitude(loop4) == 1),
        ("quiver of cyclic:[3,3,3,4] is 0→3, 1→0, 2→1, 3→3", lambda: build(loop4).successors == (3, 0, 1, 3)),
        ("cycle of cyclic:[3,3,3,4] is {3} with weight 1", lambda: [
            (c.vertices, c.weight) for c in cycle_report(build(loop4), loop4).cycles
        ] == [((3,), 1)]),
        ("cartan matrix of cyclic:[3,3,3,4]", lambda: cartan_matrix(loop4).rows() == [
            [1, 1, 1, 0], [0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 1, 1],
        ]),
        ("area sequence of the height-4 example", lambda: height(tall_path) == 4),
        ("bounce points [2,6,9,11]", lambda: bounce(tall_path).points == (2, 6, 9, 11)),
        ("bounce points of [3,4,4,3,2,1] are [2,5]", lambda: bounce(from_area([3, 4, 4, 3, 2, 1])).points == (2, 5)),
        ("τ([3,4,4,3,2,1]) parents", lambda: tau(staircase).parent == (3, 5, 6, 6, 6, 6)),
        ("dist(0,1) = 4 in τ([3,4,4,3,2,1])", lambda: dist(tau(staircase), 0, 1) == 4),
        ("pdim S_0 = 3 via τ([3,4,4,3,2,1])", lambda: pdim_via_tree(tau(staircase), 0) == 3),
        ("dist(0,1) = 5 in τ([5,6,5,4,4,3,3,3,2,3,2,1])", lambda: dist(tau(left12), 0, 1) == 5),
        ("gldim 4 for [5,6,5,4,4,3,3,3,2,3,2,1]", lambda: gldim_via_tree(tau(left12)) == 4),
        ("dist(2,3) = 4 in τ([2,1,5,5,5,6,5,4,3,2,2,1])", lambda: dist(tau(right12), 2, 3) == 4),
        ("tree decomposition, first tree, g=4", lambda: tree_words(left12, 4) == (
            2, ["(())", "(()()())"], ["()", ""], "()(())",
        )),
        ("tree decomposition, second tree, g=3", lambda: tree_words(right12, 3) == (
            2, ["()", "()()"], ["", "(())(())"], "(()())",
        )),
        ("path decomposition, first path, g=4", lambda: decomposition_words(first_path, 4) == (
            2, ["UUDD", "UUDUDUDD"], ["UD", ""], "UDUUDD",
        )),
        ("path decomposition, second path, g=3", lambda: decomposition_words(second_path, 3) == (
            2, ["UD", "UDUD"], ["", "UUDDUUDD"], "UUDUDD",
        )),
        ("m1 map of [4,3,3,3]", lambda: area_sequence(m1_to_dyck(_series("cyclic:[4,3,3,3]"))) == (3, 3, 3, 2, 1)),
        ("sincere map of cyclic:[6,8,9,9,8,7]", lambda: area_sequence(sincere_to_dyck(sincere6)) == (3, 4, 4, 3, 2, 1)),
        ("sincere inverse of [3,4,4,3,2,1]", lambda: dyck_to_sincere(from_area([3, 4, 4, 3, 2, 1])) == sincere6),
        ("gldim = 2·4 for the twelve-simple sincere algebra", lambda: sincere_gldim(sincere12) == 8 == global_dimension(sincere12)),
        ("gldim = 2·2 for cyclic:[6,8,9,9,8,7]", lambda: sincere_gldim(sincere6) == 4 == global_dimension(sincere6)),
        ("resolution of S_0 over cyclic:[6,8,9,9,8,7]", lambda: projective_resolution(simple(sincere6, 0)) == [0, 1, 0, 3, 0]),
    ]
    for label, predicate in checks:
        check(predicate(), label)
        yield 1


# Dyck path codec

def _codec(n: int, max_entry: Optional[int]) -> Iterator[int]:
    for size in range(n + 1):
        count = 0
        for path in enumerate_dyck_paths(size):
            count += 1
            area = area_sequence(path)
            label = path.steps or "(empty)"
            check(is_area_sequence(area), f"{label}: area {list(area)} is not an area sequence")
            check(from_area(area) == path, f"{label}: from_area(area_sequence) differs")
            check(height(path) == max(area) - 1, f"{label}: height differs from max(area) - 1")
            below = bounce_path_heights(path)
            check(all(b <= h for b, h in zip(below, path.heights)), f"{label}: bounce path above the path")
            factors = prime_factors(path)
            check(concat(factors) == path and all(is_prime(f) for f in factors), f"{label}: prime factorization")
            check(all(wrap(strip(f)) == f for f in factors), f"{label}: strip/wrap")
            check(dyck_to_linear(path).entries == area, f"{label}: dyck_to_linear")
            yield 1
        check(count == catalan(size), f"semilength {size}: {count} paths, expected C_{size} = {catalan(size)}")
        linear = list(enumerate_connected_linear(size + 1))
        check(len(linear) == catalan(size), f"n={size + 1}: {len(linear)} connected linear series")
        for series in linear:
            check(area_sequence(linear_to_dyck(series)) == series.entries, f"{series}: linear_to_dyck")


# Homological properties

def _check_homological(series: KupischSeries) -> None:
    label = format_series(series)
    modules = indecomposable_modules(series)
    for module in modules:
        omega = syzygy(module)
        if omega is not None:
            check(module.k + omega.k == series.entries[module.i], f"{label}: dim of Ω{module}")

    dimensions = simple_projective_dimensions(series)
    gldim = max(dimensions)
    finite = gldim != INFINITY

    d = cokupisch(series)
    check(sum(d) == sum(series.entries), f"{label}: Σd != Σc")
    check(opposite(opposite(series)).entries == series.entries, f"{label}: opposite is not an involution")

    if series.is_cyclic:
        even = any(p != INFINITY and p % 2 == 0 for p in dimensions)
        check(finite == even, f"{label}: finite gldim does not match an even-pdim simple")
        if finite:
            check(loewy_length(series) <= 2 * series.n - 1, f"{label}: Loewy length above 2n-1")
    if not finite:
        return

    pdims = [(module, projective_dimension(module)) for module in modules]
    check(max(pdim for _, pdim in pdims) == gldim, f"{label}: gldim differs from max pdim over indecomposables")
    for module, pdim in pdims:
        odd_factors = all(dimensions[j] % 2 == 1 for j in composition_factors(module))
        check((pdim % 2 == 1) == odd_factors, f"{label}: parity of pdim {module}")
    injective_max = max(projective_dimension(indecomposable_injective(series, i)) for i in range(series.n))
    check(injective_max == gldim, f"{label}: max pdim of injectives is {injective_max}, gldim {gldim}")

    check(cartan_determinant(series) == 1, f"{label}: finite gldim with Cartan determinant != 1")
    value = magnitude(series)
    count = even_pdim_simple_count(series)
    check(value == magnitude_via_ext(series) == count, f"{label}: magnitude {value} vs Ext sum vs {count}")
    if series.is_cyclic:
        check(cycle_vertex_count(series) == count, f"{label}: cycle vertices differ from even-pdim simples")


def _homological(n: int, max_entry: Optional[int]) -> Iterator[int]:
    for size in range(1, n + 1):
        bound = max_entry if max_entry is not None else 2 * size + 1
        for series in enumerate_linear_products(size):
            _check_homological(series)
            yield 1
        for series in enumerate_cyclic(size, bound):
            _check_homological(series)
            yield 1


# Resolution quiver oracle

def _quiver_oracle(n: int, max_entry: Optional[int]) -> Iterator[int]:
    for size in range(1, n + 1):
        bound = max_entry if max_entry is not None else 2 * size + 2
        for series in enumerate_cyclic(size, bound):
            label = format_series(series)
            direct = has_finite_global_dimension(series)
            check(finite_gldim_via_quiver(series) == direct, f"{label}: quiver criterion disagrees")
            report = cycle_report(build(series), series)
            shapes = {(len(c.vertices), c.weight) for c in report.cycles}
            check(len(shapes) == 1, f"{label}: cycles differ in size or weight")
            determinant = cartan_determinant(series)
            check((determinant != 0) == (report.component_count == 1), f"{label}: invertibility vs connectedness")
            if report.component_count == 1:
                check(determinant == report.cycles[0].weight, f"{label}: determinant {determinant} != cycle weight")
            if direct:
                check(
                    cycle_vertex_count(series) == even_pdim_simple_count(series),
                    f"{label}: cycle vertices differ from even-pdim simples",
                )
            yield 1


# Trees

def _tree_distance(n: int, max_entry: Optional[int]) -> Iterator[int]:
    for size in range(1, n + 1):
        products = list(enumerate_linear_products(size))
        check(len(products) == catalan(size), f"n={size}: {len(products)} linear products")
        for series in products:
            label = format_series(series)
            tree = tau(series)
            check(is_naturally_labeled(tree), f"{label}: τ not naturally labeled")
            dimensions = simple_projective_dimensions(series)
            check(
                all(pdim_via_tree(tree, i) == dimensions[i] for i in range(size)),
                f"{label}: tree distance disagrees with pdim",
            )
            gldim = max(dimensions)
            check(gldim_via_tree(tree) == gldim, f"{label}: gldim via tree")
            for level in level_sets(tree):
                check(level == list(range(level[0], level[-1] + 1)), f"{label}: level {level} not an interval")
            ordered = forget_labels(tree)
            check(natural_labeling(ordered) == tree, f"{label}: natural labeling round trip")
            check(dyck_to_tree(tree_to_dyck(ordered)) == ordered, f"{label}: tree/path round trip")
            check(height(tree_to_dyck(ordered)) == ordered.depth, f"{label}: depth != height")
            for g in range(size + 1):
                check(sibling_bound_check(ordered, g) == (gldim <= g), f"{label}: sibling criterion at g={g}")
            yield 1
        for first_size in range(1, size):
            for first in enumerate_linear_products(first_size):
                for second in enumerate_linear_products(size - first_size):
                    joined = KupischSeries.from_entries(first.entries + second.entries)
                    check(
                        glue(tau(first), tau(second)) == tau(joined),
                        f"{first} × {second}: glued tree differs from τ of the product",
                    )


# Decompositions and the bounded bijection

def _decomposition(n: int, max_entry: Optional[int]) -> Iterator[int]:
    for size in range(n + 1):
        for path in enumerate_dyck_paths(size):
            label = path.steps or "(empty)"
            tree = dyck_to_tree(path)
            for g in range(0, 7):
                if height(path) <= g + 1:
                    pieces = decompose_bounded(path, g)
                    check(recompose_bounded(pieces, g) == path, f"{label}: path decomposition at g={g}")
                    check(pieces.semilength == size - pieces.m, f"{label}: semilength bookkeeping at g={g}")
                if sibling_bound_check(tree, g):
                    parts = decompose_tree_bounded(tree, g)
                    check(recompose_tree_bounded(parts, g) == tree, f"{label}: tree decomposition at g={g}")
                    check(parts.vertex_count == size + 1 + parts.m, f"{label}: vertex bookkeeping at g={g}")
            yield 1
        if size == 0:
            continue
        for g in range(size + 1):
            images = set()
            for series in enumerate_linear_products(size):
                if global_dimension(series) > g:
                    continue
                image = algebra_to_bounded_dyck(series, g)
                check(
                    image.semilength == size and height(image) <= g + 1,
                    f"{series}: bounded image {image.steps} at g={g}",
                )
                check(bounded_dyck_to_algebra(image, g) == series, f"{series}: bounded round trip at g={g}")
                images.add(image.steps)
            algebras, paths = bounded_counts(size, g)
            check(algebras == paths == len(images), f"n={size}, g={g}: {algebras} algebras, {paths} paths")


# Equidistribution

def _equidistribution(n: int, max_entry: Optional[int]) -> Iterator[int]:
    for size in range(1, n + 1):
        report = verify_equidistribution(size)
        check(report.equal, f"n={size}: gldim {report.gldim.counts} vs height {report.height.counts}")
        check(report.refined_identity, f"n={size}: refined counting identity fails")
        yield report.gldim.total


# M1 algebras

def _m1(n: int, max_entry: Optional[int]) -> Iterator[int]:
    for size in range(1, n + 1):
        algebras = list(enumerate_m1(size))
        check(len(algebras) == catalan(size), f"n={size}: {len(algebras)} M1 algebras, C_n = {catalan(size)}")
        for series in algebras:
            path = m1_to_dyck(series)
            check(path.semilength == size, f"{series}: semilength {path.semilength}")
            check(dyck_to_m1(path) == rotate_to_entry(series, size), f"{series}: m1 round trip")
        for path in enumerate_dyck_paths(size):
            series = dyck_to_m1(path)
            check(series.entries.count(size) == 1, f"{path.steps}: image {series} lacks a unique entry n")
            check(m1_to_dyck(series) == path, f"{path.steps}: m1 inverse round trip")
            if series.is_cyclic:
                check(canonical_rotation(series).representative in algebras, f"{series}: missing from enumeration")
            yield 1
        for series in enumerate_cyclic(size, 2 * size - 1):
            label = format_series(series)
            finite = has_finite_global_dimension(series)
            unique = series.entries.count(size) == 1
            magnitude_one = finite and magnitude(series) == 1
            loewy = finite and loewy_length(series) >= size
            check(magnitude_one == unique == loewy, f"{label}: M1 conditions disagree")


# Sincere algebras

def _sincere_bounce(n: int, max_entry: Optional[int]) -> Iterator[int]:
    for size in range(2, n + 1):
        for path in enumerate_dyck_paths(size - 1):
            series = dyck_to_sincere(path)
            label = format_series(series)
            bounce_path = bounce(path)
            check(is_sincere(series), f"{label}: not sincere")
            gldim = global_dimension(series)
            check(gldim == 2 * bounce_path.count, f"{label}: gldim {gldim} vs bounce count {bounce_path.count}")
            check(sincere_gldim(series) == gldim, f"{label}: sincere_gldim")
            check(sincere_to_dyck(series) == path, f"{label}: sincere round trip")

            points = (0,) + bounce_path.points
            expected = []
            for t in range(bounce_path.count):
                expected += [0, points[t] + 1]
            expected.append(0)
            check(projective_resolution(simple(series, 0)) == expected, f"{label}: resolution of S_0")
            for t in range(bounce_path.count):
                check(
                    series.entries[points[t] + 1] - size + points[t] + 1 == points[t + 1] + 1,
                    f"{label}: bounce step {t}",
                )
            yield 1
        if size <= 6:
            count = sum(1 for _ in enumerate_sincere_finite(size))
            check(count == catalan(size - 1), f"n={size}: {count} sincere algebras, C_(n-1) = {catalan(size - 1)}")


@dataclass(frozen=True)
class Suite:
    """A named property check; `run` yields the number of objects passed as it goes"""
    name: str
    run: Callable[[int, Optional[int]], Iterator[int]]
    default_n: int
    description: str


SUITES: Dict[str, Suite] = {
    suite.name: suite
    for suite in (
        Suite("worked-examples", _worked_examples, 0, "Pinned worked examples"),
        Suite("codec", _codec, 10, "Area codec, bounce path, prime factors, Catalan counts"),
        Suite("homological", _homological, 5, "Syzygies, Auslander, parity, injectives, magnitude chain"),
        Suite("quiver-oracle", _quiver_oracle, 5, "Resolution quiver criterion against direct syzygies"),
        Suite("tree-distance", _tree_distance, 8, "Tree distance formula, sibling criterion, gluing"),
        Suite("decomposition", _decomposition, 7, "Bounded decompositions and the bounded bijection"),
        Suite("equidistribution", _equidistribution, 10, "gldim vs height distributions"),
        Suite("m1", _m1, 6, "Unique-dimension-n algebras and the Catalan count"),
        Suite("sincere-bounce", _sincere_bounce, 8, "Sincere algebras: gldim = 2·bounce count"),
    )
}


def run_suite(name: str, n: Optional[int] = None, max_entry: Optional[int] = None) -> SuiteResult:
    """
    Run one suite.

    Args:
        name: Registered suite name
        n: Size bound (suite default when None)
        max_entry: Entry bound for cyclic enumerations (suite default when None)

    Returns:
        The suite result; a failing property is reported, not raised

    Raises:
        KeyError: On an unknown suite name
    """
    suite = SUITES[name]
    size = suite.default_n if n is None else n
    start = time.perf_counter()
    checked = 0
    try:
        for count in suite.run(size, max_entry):
            checked += count
        passed, counterexample = True, None
    except PropertyViolation as e:
        passed, counterexample = False, e.counterexample
    seconds = time.perf_counter() - start
    logger.info(f"Suite {name} (n={size}) {'passed' if passed else 'failed'} in {seconds:.2f}s")
    return SuiteResult(
        name=name, n=size, passed=passed, checked=checked, counterexample=counterexample, seconds=seconds
    )


async def run_suites_async(
    names: Sequence[str],
    n: Optional[int] = None,
    max_entry: Optional[int] = None,
    workers: int = 1,
) -> List[SuiteResult]:
    """Run suites in up to `workers` worker processes; results keep the order of names"""
    limiter = anyio.CapacityLimiter(workers)
    results: Dict[str, SuiteResult] = {}

    async def run_one(name: str) -> None:
        results[name] = await anyio.to_process.run_sync(run_suite, name, n, max_entry, limiter=limiter)

    async with anyio.create_task_group() as tg:
        for name in names:
            tg.start_soon(run_one, name)
    return [results[name] for name in names]


def run_suites(
    names: Sequence[str],
    n: Optional[int] = None,
    max_entry: Optional[int] = None,
    workers: int = 1,
) -> List[SuiteResult]:
    """Run suites sequentially, or fanned out to worker processes when workers > 1"""
    if workers > 1 and len(names) > 1:
        return anyio.run(run_suites_async, names, n, max_entry, workers)
    return [run_suite(name, n, max_entry) for name in names]
