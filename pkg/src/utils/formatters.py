"""
Response formatting utilities for the CLI and the MCP tools
"""

import csv
import io
from typing import Any, Dict, Iterable, List, Sequence


def format_dimension(value: Any) -> str:
    """Render a homological dimension, with ∞ for infinite values"""
    if value == "infinite" or value == float("inf"):
        return "∞"
    return str(value)


def format_rational(value: Dict[str, int]) -> str:
    if value["den"] == 1:
        return str(value["num"])
    return f"{value['num']}/{value['den']}"


def format_matrix(rows: Sequence[Sequence[int]], indent: str = "    ") -> List[str]:
    """Right-aligned matrix rows"""
    width = max((len(str(x)) for row in rows for x in row), default=1)
    return [indent + " ".join(str(x).rjust(width) for x in row) for row in rows]


def format_report(report) -> str:
    """
    Format an AnalysisReport for display.

    Args:
        report: AnalysisReport from reports.analyze

    Returns:
        Formatted report string
    """
    lines = []

    # Header
    lines.append(f"**{report.series}** ({report.classification.replace('_', ' ')}, n={report.n})")
    lines.append(f"  Loewy length: {report.loewy_length}")
    lines.append(f"  Global dimension: {format_dimension(report.global_dimension)}")
    pdims = ", ".join(format_dimension(d) for d in report.projective_dimensions)
    lines.append(f"  pdim of simples: [{pdims}]")
    lines.append(f"  coKupisch series: [{','.join(str(d) for d in report.cokupisch)}]")
    lines.append(f"  Sincere: {'yes' if report.sincere else 'no'}")

    # Cartan data
    lines.append(f"  Cartan determinant: {report.cartan_determinant}")
    if report.magnitude is not None:
        lines.append(f"  Magnitude: {format_rational(report.magnitude)}")
    else:
        lines.append("  Magnitude: undefined (singular Cartan matrix)")
    if report.even_pdim_simples is not None:
        lines.append(f"  Simples of even pdim: {report.even_pdim_simples}")
    lines.append("  Cartan matrix:")
    lines.extend(format_matrix(report.cartan_matrix))

    # Resolution quiver
    quiver = report.resolution_quiver
    if quiver is not None:
        arrows = ", ".join(f"{i}→{j}" for i, j in enumerate(quiver.successors))
        lines.append(f"  Resolution quiver: {arrows}")
        for cycle in quiver.cycles:
            vertices = ",".join(str(v) for v in cycle["vertices"])
            lines.append(f"    cycle {{{vertices}}} weight {format_rational(cycle['weight'])}")
        lines.append(f"    components: {quiver.components}")

    # Dyck paths
    for path in report.dyck_paths:
        points = ",".join(str(b) for b in path.bounce_points)
        lines.append(
            f"  Dyck path ({path.bijection}): {path.steps or '(empty)'}"
            f"  height {path.height}, bounce [{points}] (count {path.bounce_count})"
        )

    return "\n".join(lines)


def format_resolution(report) -> str:
    """Format a ResolutionReport"""
    lines = [f"**{report.module}**  pdim {format_dimension(report.projective_dimension)}"]
    lines.append(f"  Syzygies: {' → '.join(report.syzygies)}")
    terms = " ← ".join(f"e_{j}A" for j in report.terms)
    lines.append(f"  Projective resolution: {terms}{' ← …' if report.truncated else ''}")
    return "\n".join(lines)


def format_dyck_report(report) -> str:
    """Format a DyckReport"""
    lines = [f"**{report.steps or '(empty)'}** (semilength {report.semilength})"]
    lines.append(f"  Area sequence: [{','.join(str(c) for c in report.area)}]")
    lines.append(f"  Height: {report.height}")
    points = ",".join(str(b) for b in report.bounce_points)
    lines.append(f"  Bounce points: [{points}] (count {report.bounce_count})")
    lines.append(f"  Prime factors: {' · '.join(report.prime_factors) or '(none)'}")
    return "\n".join(lines)


def format_bijection(result) -> str:
    """Format a BijectionResult: the image in the requested direction"""
    if result.direction == "to-dyck":
        return result.path
    return result.series


def format_items(family: str, n: int, items: Sequence[str]) -> str:
    """
    Format an enumeration.

    Args:
        family: Enumeration family name
        n: Size parameter
        items: Textual items

    Returns:
        One item per line after a count header
    """
    if not items:
        return f"No {family} objects for n={n}."

    lines = [f"Found {len(items)} {family} object(s) for n={n}:"]
    lines.extend(item if item else "(empty)" for item in items)
    return "\n".join(lines)


def format_sequence(family: str, counts: Dict[int, int]) -> str:
    """Format per-size counts, one size per line"""
    lines = [f"{family} counts for n=1..{max(counts)}:"]
    lines.extend(f"  n={n}: {count}" for n, count in sorted(counts.items()))
    return "\n".join(lines)


def format_distribution(dist) -> str:
    """Format a Distribution as a value/count table with its polynomial"""
    lines = [f"{dist.statistic} distribution, n={dist.n} ({dist.total} objects)"]
    lines.append(f"  {'value':>5}  {'count':>8}")
    for value, count in sorted(dist.counts.items()):
        lines.append(f"  {value:>5}  {count:>8}")
    lines.append(f"  polynomial: {dist.as_polynomial()}")
    return "\n".join(lines)


def format_suite_results(results) -> str:
    """Format verification suite results, one line per suite"""
    lines = []
    for result in results:
        status = "✓ PASS" if result.passed else "✗ FAIL"
        lines.append(f"{status}  {result.name} (n={result.n}, {result.checked} checked, {result.seconds:.2f}s)")
        if not result.passed:
            lines.append(f"    counterexample: {result.counterexample}")
    failed = sum(1 for result in results if not result.passed)
    lines.append("")
    lines.append(f"{len(results) - failed}/{len(results)} suite(s) passed")
    return "\n".join(lines)


def to_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """Render rows as CSV text with a header line"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue().rstrip("\n")


def format_error(error: Exception, context: str = "") -> str:
    """
    Format an error for user-friendly display.

    Args:
        error: The exception
        context: Additional context about what was being attempted

    Returns:
        Formatted error message
    """
    from ..bijections import NotConnectedLinear, NotM1, NotSincereFinite
    from ..cartan import SingularMatrix
    from ..dyck import HeightExceeded, PathParseError
    from ..kupisch import InfiniteGlobalDimension, InvalidSeries, VertexOutOfRange, WrongKind
    from ..trees import BoundViolated

    if isinstance(error, InvalidSeries):
        message = f"Invalid Kupisch series - {error}"
    elif isinstance(error, PathParseError):
        message = f"Invalid Dyck path - {error}"
    elif isinstance(error, VertexOutOfRange):
        message = f"Out of range - {error}"
    elif isinstance(error, SingularMatrix):
        message = f"Singular Cartan matrix (det {error.determinant}) - {error}"
    elif isinstance(error, InfiniteGlobalDimension):
        message = f"Needs finite global dimension - {error}"
    elif isinstance(error, WrongKind):
        message = f"Needs a {error.expected} series - {error}"
    elif isinstance(error, (HeightExceeded, BoundViolated)):
        message = f"Bound violated - {error}"
    elif isinstance(error, (NotM1, NotSincereFinite, NotConnectedLinear)):
        message = f"Outside the bijection's domain - {error}"
    else:
        message = str(error)

    if context:
        return f"❌ Error {context}: {message}"
    return f"❌ Error: {message}"
