"""
Kupisch Series

Representation of Nakayama algebras by their Kupisch series and the direct
homological computations on uniserial modules: syzygies, projective and
global dimension, injectives, Ext dimensions and sincerity.
"""

import logging
import math
import re
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, model_validator

logger = logging.getLogger(__name__)

# Projective/global dimensions are ints, or math.inf for cyclic algebras
HomDimension = Union[int, float]
INFINITY = math.inf

_SERIES_PATTERN = re.compile(r"^\[\s*\d+(\s*,\s*\d+)*\s*\]$")
_CYCLIC_PREFIX = "cyclic:"


class NakayamaError(Exception):
    """Base class for all domain errors"""
    pass


class InvalidSeries(NakayamaError, ValueError):
    """Raised when an integer sequence is not a Kupisch series"""
    def __init__(self, message: str, entries: Sequence[int] = ()):
        super().__init__(message)
        self.entries = tuple(entries)


class SeriesParseError(InvalidSeries):
    """Raised when the textual form of a series cannot be parsed"""
    def __init__(self, message: str, text: str = ""):
        super().__init__(message)
        self.text = text


class ZeroModuleError(NakayamaError):
    """Raised when an operation needs a non-zero module"""
    pass


class VertexOutOfRange(NakayamaError, IndexError):
    """Raised when a vertex index or module length is out of range"""
    def __init__(self, message: str, index: int, bound: int):
        super().__init__(message)
        self.index = index
        self.bound = bound


class WrongKind(NakayamaError):
    """Raised when an operation is applied to the wrong kind of series"""
    def __init__(self, message: str, expected: str):
        super().__init__(message)
        self.expected = expected


class InfiniteGlobalDimension(NakayamaError):
    """Raised by operations that are only defined for finite global dimension"""
    def __init__(self, message: str, series: Optional["KupischSeries"] = None):
        super().__init__(message)
        self.series = series


class InfiniteProjectiveDimension(NakayamaError):
    """Raised when a resolution is requested for a module of infinite pdim"""
    def __init__(self, message: str, module: Optional["UniserialModule"] = None):
        super().__init__(message)
        self.module = module


class SeriesKind(str, Enum):
    """Kind of Nakayama algebra a series describes"""
    LINEAR = "linear"    # product of connected linear algebras
    CYCLIC = "cyclic"


class SeriesClass(str, Enum):
    """Result of classify_series"""
    CONNECTED_LINEAR = "connected_linear"
    LINEAR_PRODUCT = "linear_product"
    CYCLIC = "cyclic"
    INVALID = "invalid"


def classify_series(entries: Sequence[int]) -> SeriesClass:
    """
    Classify an integer sequence as a Kupisch series.

    A series containing an entry 1 can only be linear: it must end in 1 and
    satisfy c_i <= c_{i+1} + 1 throughout (block boundaries are the 1-entries).
    A series without 1-entries can only be cyclic and must satisfy
    c_i <= c_{i+1 mod n} + 1 for every i.

    Args:
        entries: Candidate series [c_0, ..., c_{n-1}]

    Returns:
        The classification; INVALID is a value, not an error
    """
    values = list(entries)
    n = len(values)
    if n == 0 or any(c < 1 for c in values):
        return SeriesClass.INVALID

    if 1 in values:
        if values[-1] != 1:
            return SeriesClass.INVALID
        if any(values[i] > values[i + 1] + 1 for i in range(n - 1)):
            return SeriesClass.INVALID
        if values.count(1) == 1:
            return SeriesClass.CONNECTED_LINEAR
        return SeriesClass.LINEAR_PRODUCT

    if any(values[i] > values[(i + 1) % n] + 1 for i in range(n)):
        return SeriesClass.INVALID
    return SeriesClass.CYCLIC


class KupischSeries(BaseModel):
    """
    Kupisch series of a Nakayama algebra.

    Linear series may be products of connected blocks (each ending in 1);
    cyclic series are connected. Vertex arithmetic is mod n for cyclic
    series and unwrapped for linear ones.
    """
    model_config = ConfigDict(frozen=True)

    entries: Tuple[int, ...]
    kind: SeriesKind

    @model_validator(mode="after")
    def _check_series(self) -> "KupischSeries":
        classification = classify_series(self.entries)
        if classification is SeriesClass.INVALID:
            raise ValueError(f"not a Kupisch series: {list(self.entries)}")
        cyclic = classification is SeriesClass.CYCLIC
        if cyclic != (self.kind is SeriesKind.CYCLIC):
            raise ValueError(
                f"series {list(self.entries)} is {classification.value}, not {self.kind.value}"
            )
        return self

    @classmethod
    def from_entries(cls, entries: Sequence[int]) -> "KupischSeries":
        """
        Build a series, inferring its kind from the entries.

        Raises:
            InvalidSeries: If the entries are neither linear blocks nor a cyclic series
        """
        values = tuple(int(c) for c in entries)
        classification = classify_series(values)
        if classification is SeriesClass.INVALID:
            raise InvalidSeries(f"Not a Kupisch series: {list(values)}", values)
        kind = SeriesKind.CYCLIC if classification is SeriesClass.CYCLIC else SeriesKind.LINEAR
        # already classified above
        return cls.model_construct(entries=values, kind=kind)

    @property
    def n(self) -> int:
        """Number of simple modules"""
        return len(self.entries)

    @property
    def is_cyclic(self) -> bool:
        return self.kind is SeriesKind.CYCLIC

    @property
    def is_linear(self) -> bool:
        return self.kind is SeriesKind.LINEAR

    def c(self, i: int) -> int:
        """c_i, with indices read mod n for cyclic series"""
        if self.is_cyclic:
            return self.entries[i % self.n]
        return self.entries[i]

    def __str__(self) -> str:
        return format_series(self)


def parse_series(text: str) -> KupischSeries:
    """
    Parse the textual form of a series.

    Grammar: `[c_0,...,c_{n-1}]`, optionally prefixed by `cyclic:`. The
    prefix may be omitted when the entries already determine the kind.

    Raises:
        SeriesParseError: On malformed text, invalid entries, or a `cyclic:`
            prefix on a linear series
    """
    raw = text.strip()
    wants_cyclic = raw.lower().startswith(_CYCLIC_PREFIX)
    body = raw[len(_CYCLIC_PREFIX):].strip() if wants_cyclic else raw

    if not _SERIES_PATTERN.match(body):
        raise SeriesParseError(f"Cannot parse Kupisch series: {text!r}", text=text)

    entries = [int(part) for part in body[1:-1].split(",")]
    classification = classify_series(entries)
    if classification is SeriesClass.INVALID:
        raise SeriesParseError(f"Not a Kupisch series: {body}", text=text)
    if wants_cyclic and classification is not SeriesClass.CYCLIC:
        raise SeriesParseError(f"Series {body} contains 1 and cannot be cyclic", text=text)

    return KupischSeries.from_entries(entries)


def format_series(series: KupischSeries) -> str:
    """Textual form, e.g. `[3,4,4,3,2,1]` or `cyclic:[3,3,3,4]`"""
    body = "[" + ",".join(str(c) for c in series.entries) + "]"
    return _CYCLIC_PREFIX + body if series.is_cyclic else body


def is_connected(series: KupischSeries) -> bool:
    """Cyclic series are connected; linear ones iff they have a single block"""
    return series.is_cyclic or series.entries.count(1) == 1


def blocks(series: KupischSeries) -> List[KupischSeries]:
    """Connected linear factors of a linear product, in order"""
    if series.is_cyclic:
        return [series]
    result = []
    start = 0
    for i, c in enumerate(series.entries):
        if c == 1:
            result.append(KupischSeries.from_entries(series.entries[start:i + 1]))
            start = i + 1
    return result


def loewy_length(series: KupischSeries) -> int:
    """Maximum of the entries"""
    return max(series.entries)


@dataclass(frozen=True)
class UniserialModule:
    """
    The uniserial module b(i, k) = e_i A / e_i J^k.

    The zero module is represented by None wherever a module may vanish.
    """
    algebra: KupischSeries
    i: int
    k: int

    def __post_init__(self):
        n = self.algebra.n
        if not 0 <= self.i < n:
            raise VertexOutOfRange(f"Vertex {self.i} out of range [0, {n})", self.i, n)
        c = self.algebra.entries[self.i]
        if not 1 <= self.k <= c:
            raise VertexOutOfRange(f"Length {self.k} out of range [1, {c}] at vertex {self.i}", self.k, c)

    @property
    def is_projective(self) -> bool:
        return self.k == self.algebra.entries[self.i]

    def __str__(self) -> str:
        return f"b({self.i},{self.k})"


def simple(series: KupischSeries, i: int) -> UniserialModule:
    """The simple module S_i = b(i, 1)"""
    return UniserialModule(series, i, 1)


def projective(series: KupischSeries, i: int) -> UniserialModule:
    """The indecomposable projective e_i A = b(i, c_i)"""
    if not 0 <= i < series.n:
        raise VertexOutOfRange(f"Vertex {i} out of range [0, {series.n})", i, series.n)
    return UniserialModule(series, i, series.entries[i])


def indecomposable_modules(series: KupischSeries) -> List[UniserialModule]:
    """All b(i, k) with 0 <= i < n and 1 <= k <= c_i"""
    return [
        UniserialModule(series, i, k)
        for i in range(series.n)
        for k in range(1, series.entries[i] + 1)
    ]


def syzygy(module: Optional[UniserialModule]) -> Optional[UniserialModule]:
    """
    First syzygy: Ω(b(i,k)) = b(i+k, c_i - k), or None when b(i,k) is projective.

    Raises:
        ZeroModuleError: If called on the zero module
    """
    if module is None:
        raise ZeroModuleError("The zero module has no syzygy")
    series = module.algebra
    c = series.entries[module.i]
    if module.k == c:
        return None
    j = module.i + module.k
    if series.is_cyclic:
        j %= series.n
    return UniserialModule(series, j, c - module.k)


def _pdim(entries: Tuple[int, ...], cyclic: bool, i: int, k: int) -> HomDimension:
    # Iterates Ω on (i, k) states; a repeated state means the orbit never
    # reaches a projective. n * LoewyLength + 1 steps exhaust the state space.
    n = len(entries)
    limit = n * max(entries) + 1
    seen = set()
    for steps in range(limit + 1):
        c = entries[i]
        if k == c:
            return steps
        if cyclic:
            if (i, k) in seen:
                return INFINITY
            seen.add((i, k))
            i, k = (i + k) % n, c - k
        else:
            i, k = i + k, c - k
    return INFINITY


def projective_dimension(module: UniserialModule) -> HomDimension:
    """
    Smallest ℓ such that Ω^ℓ(M) is projective, or INFINITY.

    Raises:
        ZeroModuleError: If called on the zero module
    """
    if module is None:
        raise ZeroModuleError("The zero module has no projective dimension")
    series = module.algebra
    return _pdim(series.entries, series.is_cyclic, module.i, module.k)


def simple_projective_dimensions(series: KupischSeries) -> List[HomDimension]:
    """pdim(S_i) for every vertex i"""
    entries = series.entries
    cyclic = series.is_cyclic
    return [_pdim(entries, cyclic, i, 1) for i in range(series.n)]


def global_dimension(series: KupischSeries) -> HomDimension:
    """Maximum projective dimension of a simple module (Auslander)"""
    return max(simple_projective_dimensions(series))


def has_finite_global_dimension(series: KupischSeries) -> bool:
    """Whether every simple module has a finite projective resolution"""
    return global_dimension(series) != INFINITY


def syzygy_orbit(module: UniserialModule) -> List[UniserialModule]:
    """
    The modules M, Ω¹M, Ω²M, ... up to the first projective term, or up to
    (excluding) the first repeated module when the orbit cycles.
    """
    orbit = []
    seen = set()
    current = module
    while current is not None and (current.i, current.k) not in seen:
        orbit.append(current)
        seen.add((current.i, current.k))
        current = syzygy(current)
    return orbit


def projective_resolution(module: UniserialModule, max_terms: Optional[int] = None) -> List[int]:
    """
    Minimal projective resolution P_0, P_1, ... of M.

    Every term of the resolution of an indecomposable is zero or indecomposable,
    so term P_m = e_j A is reported by its vertex j (the top of Ω^m M).

    Args:
        module: Non-zero uniserial module
        max_terms: Stop after this many terms (required for infinite pdim)

    Returns:
        Vertices of the non-zero terms, in degree order

    Raises:
        InfiniteProjectiveDimension: If pdim is infinite and max_terms is None
    """
    if max_terms is None and projective_dimension(module) == INFINITY:
        raise InfiniteProjectiveDimension(f"{module} has infinite projective dimension", module)
    terms: List[int] = []
    current = module
    while current is not None:
        if max_terms is not None and len(terms) >= max_terms:
            break
        terms.append(current.i)
        current = syzygy(current)
    return terms


def cokupisch(series: KupischSeries) -> Tuple[int, ...]:
    """
    coKupisch series d_i = min { k | k >= c_{i-k} }.

    For linear series c_j with j < 0 reads as 0, so the minimum is reached
    inside the block of i.
    """
    entries = series.entries
    n = series.n
    cyclic = series.is_cyclic
    result = []
    for i in range(n):
        k = 1
        while True:
            j = i - k
            if cyclic:
                c = entries[j % n]
            else:
                c = entries[j] if j >= 0 else 0
            if k >= c:
                break
            k += 1
        result.append(k)
    return tuple(result)


def opposite(series: KupischSeries) -> KupischSeries:
    """
    Kupisch series of the opposite algebra.

    Reversing the arrows and relabelling vertex j as n-1-j gives
    [d_{n-1}, ..., d_1, d_0]; for cyclic series this fixes one rotation of the
    opposite algebra, and opposite(opposite(A)) == A holds exactly.
    """
    return KupischSeries.from_entries(tuple(reversed(cokupisch(series))))


def indecomposable_injective(series: KupischSeries, i: int) -> UniserialModule:
    """
    The injective envelope of S_i, D(A e_i) = b(i + 1 - d_i, d_i).

    Raises:
        VertexOutOfRange: If i is not a vertex
    """
    if not 0 <= i < series.n:
        raise VertexOutOfRange(f"Vertex {i} out of range [0, {series.n})", i, series.n)
    d = cokupisch(series)[i]
    start = i + 1 - d
    if series.is_cyclic:
        start %= series.n
    return UniserialModule(series, start, d)


def ext_dimension(series: KupischSeries, i: int, j: int, k: int) -> int:
    """
    dim Ext^k(S_i, S_j): 1 if the k-th term of the minimal resolution of S_i
    is e_j A, else 0.
    """
    for vertex in (i, j):
        if not 0 <= vertex < series.n:
            raise VertexOutOfRange(f"Vertex {vertex} out of range [0, {series.n})", vertex, series.n)
    if k < 0:
        return 0
    current: Optional[UniserialModule] = simple(series, i)
    for _ in range(k):
        current = syzygy(current)
        if current is None:
            return 0
    return 1 if current.i == j else 0


def composition_factors(module: UniserialModule) -> Tuple[int, ...]:
    """Simple tops i, i+1, ..., i+k-1 (mod n for cyclic) from top to socle"""
    if module is None:
        raise ZeroModuleError("The zero module has no composition factors")
    series = module.algebra
    if series.is_cyclic:
        return tuple((module.i + t) % series.n for t in range(module.k))
    return tuple(module.i + t for t in range(module.k))


def is_sincere(series: KupischSeries) -> bool:
    """True iff every indecomposable projective has every simple as a factor"""
    n = series.n
    return all(
        len(set(composition_factors(projective(series, i)))) == n
        for i in range(n)
    )
