"""
Resolution Quiver

The resolution quiver of a cyclic Nakayama algebra has vertex set Z/nZ and
one arrow i -> i + c_i (mod n). It is a functional graph: every component
carries exactly one cycle, and finiteness of the global dimension can be
read off the cycles and their weights.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Tuple

import sympy as sp
from pydantic import BaseModel, ConfigDict

from .cartan import rational_json
from .kupisch import KupischSeries, WrongKind

logger = logging.getLogger(__name__)


class ResolutionQuiver(BaseModel):
    """Functional graph i -> successors[i]"""
    model_config = ConfigDict(frozen=True)

    n: int
    successors: Tuple[int, ...]


@dataclass(frozen=True)
class QuiverCycle:
    """A cycle listed from its minimal vertex along the arrows"""
    vertices: Tuple[int, ...]
    weight: sp.Rational


@dataclass(frozen=True)
class CycleReport:
    cycles: Tuple[QuiverCycle, ...]
    component_count: int


def _require_cyclic(series: KupischSeries) -> None:
    if not series.is_cyclic:
        raise WrongKind(f"Resolution quiver needs a cyclic series, got {series}", expected="cyclic")


def build(series: KupischSeries) -> ResolutionQuiver:
    """
    Build the resolution quiver of a cyclic series.

    Raises:
        WrongKind: For linear series
    """
    _require_cyclic(series)
    n = series.n
    successors = tuple((i + c) % n for i, c in enumerate(series.entries))
    return ResolutionQuiver(n=n, successors=successors)


def _find_cycles(successors: Tuple[int, ...]) -> List[List[int]]:
    # 0 = unvisited, 1 = on the current walk, 2 = finished
    state = [0] * len(successors)
    cycles = []
    for start in range(len(successors)):
        if state[start]:
            continue
        walk = []
        vertex = start
        while state[vertex] == 0:
            state[vertex] = 1
            walk.append(vertex)
            vertex = successors[vertex]
        if state[vertex] == 1:
            cycles.append(walk[walk.index(vertex):])
        for v in walk:
            state[v] = 2
    return cycles


def cycle_report(quiver: ResolutionQuiver, series: KupischSeries) -> CycleReport:
    """
    Find every cycle of the quiver with its weight (1/n)·Σ c_v.

    Cycles are rotated to start at their minimal vertex and sorted by it;
    the component count equals the number of cycles.
    """
    cycles = []
    for cycle in _find_cycles(quiver.successors):
        pivot = cycle.index(min(cycle))
        vertices = tuple(cycle[pivot:] + cycle[:pivot])
        weight = sp.Rational(sum(series.entries[v] for v in vertices), quiver.n)
        cycles.append(QuiverCycle(vertices=vertices, weight=weight))
    cycles.sort(key=lambda cycle: cycle.vertices[0])
    logger.debug(f"Resolution quiver of {series}: {len(cycles)} cycle(s)")
    return CycleReport(cycles=tuple(cycles), component_count=len(cycles))


def finite_gldim_via_quiver(series: KupischSeries) -> bool:
    """
    True iff the quiver is connected and its unique cycle has weight 1.

    Raises:
        WrongKind: For linear series
    """
    report = cycle_report(build(series), series)
    return report.component_count == 1 and report.cycles[0].weight == 1


def cycle_vertex_count(series: KupischSeries) -> int:
    """Number of vertices lying on a cycle of the resolution quiver"""
    report = cycle_report(build(series), series)
    return sum(len(cycle.vertices) for cycle in report.cycles)


def to_json(quiver: ResolutionQuiver, report: CycleReport) -> Dict[str, Any]:
    """JSON form: successors, cycles with rational weights, component count"""
    return {
        "successors": list(quiver.successors),
        "cycles": [
            {"vertices": list(cycle.vertices), "weight": rational_json(cycle.weight)}
            for cycle in report.cycles
        ],
        "components": report.component_count,
    }
