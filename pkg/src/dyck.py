"""
Dyck Paths

Dyck paths stored as U/D step words, the area-sequence codec, height and
bounce statistics, prime factorization and the decomposition of paths of
bounded height into pieces of roughly half that height.
"""

import logging
import re
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, field_validator

from .kupisch import NakayamaError

logger = logging.getLogger(__name__)

AreaSequence = Tuple[int, ...]

_AREA_PATTERN = re.compile(r"^\[\s*\d+(\s*,\s*\d+)*\s*\]$")


class PathParseError(NakayamaError, ValueError):
    """Raised when text is not a Dyck path"""
    def __init__(self, message: str, text: str = ""):
        super().__init__(message)
        self.text = text


class InvalidAreaSequence(PathParseError):
    """Raised when a sequence is not the area sequence of a Dyck path"""
    def __init__(self, message: str, values: Sequence[int] = ()):
        super().__init__(message, text=str(list(values)))
        self.values = tuple(values)


class HeightExceeded(NakayamaError):
    """Raised when a path is higher than a decomposition allows"""
    def __init__(self, message: str, height: int, bound: int):
        super().__init__(message)
        self.height = height
        self.bound = bound


def _word_error(word: str) -> Optional[str]:
    level = 0
    for position, step in enumerate(word):
        if step == "U":
            level += 1
        elif step == "D":
            level -= 1
            if level < 0:
                return f"path goes below the axis at step {position}"
        else:
            return f"invalid step {step!r} at position {position}"
    if level != 0:
        return f"path ends at height {level}"
    return None


class DyckPath(BaseModel):
    """A Dyck path as a word over U (up) and D (down)"""
    model_config = ConfigDict(frozen=True)

    steps: str = ""

    @field_validator("steps")
    @classmethod
    def _check_steps(cls, value: str) -> str:
        error = _word_error(value)
        if error:
            raise ValueError(error)
        return value

    @classmethod
    def from_steps(cls, word: str) -> "DyckPath":
        """
        Build a path from a step word.

        Raises:
            PathParseError: If the word is not a Dyck path
        """
        error = _word_error(word)
        if error:
            raise PathParseError(f"Not a Dyck path: {word!r} ({error})", text=word)
        return cls.model_construct(steps=word)

    @property
    def semilength(self) -> int:
        return len(self.steps) // 2

    @property
    def heights(self) -> Tuple[int, ...]:
        """Heights h(0), h(1), ..., h(2n) after each prefix"""
        level = 0
        result = [0]
        for step in self.steps:
            level += 1 if step == "U" else -1
            result.append(level)
        return tuple(result)

    def __str__(self) -> str:
        return self.steps


def parse_path(text: str) -> DyckPath:
    """
    Parse a path given as a U/D word (`UUDUDD`) or an area sequence (`[3,2,1]`).

    Raises:
        PathParseError: On malformed input
    """
    raw = text.strip()
    if raw.startswith("["):
        if not _AREA_PATTERN.match(raw):
            raise PathParseError(f"Cannot parse area sequence: {text!r}", text=text)
        return from_area([int(part) for part in raw[1:-1].split(",")])
    return DyckPath.from_steps(raw.upper())


def area_sequence(path: DyckPath) -> AreaSequence:
    """
    Area sequence [c_0, ..., c_n] of a path of semilength n.

    c_k is the number of lattice points of the path on the diagonal starting
    at (2k, 0), i.e. c_k - 1 is the largest j with (2k + j, j) on the path.
    """
    heights = path.heights
    n = path.semilength
    last = 2 * n
    result = []
    for k in range(n + 1):
        j = 0
        while 2 * k + j + 1 <= last and heights[2 * k + j + 1] >= j + 1:
            j += 1
        result.append(j + 1)
    return tuple(result)


def is_area_sequence(values: Sequence[int]) -> bool:
    """c_{i+1} + 1 >= c_i >= 2 for i < n and c_n = 1"""
    if not values or values[-1] != 1:
        return False
    return all(2 <= values[i] <= values[i + 1] + 1 for i in range(len(values) - 1))


def from_area(values: Sequence[int]) -> DyckPath:
    """
    Inverse of area_sequence.

    The height at x is the largest j of the parity of x whose diagonal
    k = (x - j)/2 reaches height j, i.e. j <= c_k - 1.

    Raises:
        InvalidAreaSequence: If the values are not an area sequence
    """
    values = tuple(values)
    if not is_area_sequence(values):
        raise InvalidAreaSequence(f"Not an area sequence: {list(values)}", values)
    n = len(values) - 1

    heights = []
    for x in range(2 * n + 1):
        best = 0
        for j in range(x % 2, x + 1, 2):
            k = (x - j) // 2
            if k <= n and j <= values[k] - 1:
                best = j
        heights.append(best)

    steps = "".join("U" if heights[x + 1] > heights[x] else "D" for x in range(2 * n))
    return DyckPath.from_steps(steps)


def height(path: DyckPath) -> int:
    """Maximum height reached; equals max(area) - 1"""
    return max(path.heights)


@dataclass(frozen=True)
class BouncePath:
    """Bounce points b_1 < ... < b_d = n (b_0 = 0 is implicit)"""
    points: Tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.points)


def bounce(path: DyckPath) -> BouncePath:
    """
    Bounce path: from (2 b_t, 0) take c_{b_t} - 1 up steps then as many down
    steps, so b_{t+1} = b_t + c_{b_t} - 1, until reaching n.
    """
    area = area_sequence(path)
    n = path.semilength
    points = []
    b = 0
    while b < n:
        b += area[b] - 1
        points.append(b)
    return BouncePath(points=tuple(points))


def bounce_path_heights(path: DyckPath) -> Tuple[int, ...]:
    """Height profile of the bounce path, aligned with path.heights"""
    word = []
    previous = 0
    for point in bounce(path).points:
        span = point - previous
        word.append("U" * span + "D" * span)
        previous = point
    return DyckPath.from_steps("".join(word)).heights


def is_prime(path: DyckPath) -> bool:
    """Non-empty and returns to the axis only with its final step"""
    heights = path.heights
    return path.semilength > 0 and 0 not in heights[1:-1]


def prime_factors(path: DyckPath) -> List[DyckPath]:
    """Split at every return to the axis"""
    factors = []
    start = 0
    level = 0
    for position, step in enumerate(path.steps):
        level += 1 if step == "U" else -1
        if level == 0:
            factors.append(DyckPath.from_steps(path.steps[start:position + 1]))
            start = position + 1
    return factors


def concat(paths: Sequence[DyckPath]) -> DyckPath:
    return DyckPath.from_steps("".join(p.steps for p in paths))


def strip(prime: DyckPath) -> DyckPath:
    """Drop the first and last step of a prime path"""
    if not is_prime(prime):
        raise PathParseError(f"{prime.steps!r} is not a prime Dyck path", text=prime.steps)
    return DyckPath.from_steps(prime.steps[1:-1])


def wrap(path: DyckPath) -> DyckPath:
    """U + path + D, a prime path of semilength n + 1"""
    return DyckPath.from_steps("U" + path.steps + "D")


def reverse_steps(word: str) -> str:
    """
    Reverse the order of the steps without exchanging U and D.

    Used for the R pieces of the bounded decomposition, which are read from
    right to left; the result is a word, not necessarily a Dyck path.
    """
    return word[::-1]


@dataclass(frozen=True)
class PathDecomposition:
    """Pieces of a path of height <= g + 1"""
    m: int
    left: Tuple[DyckPath, ...]
    right: Tuple[DyckPath, ...]
    middle: DyckPath

    @property
    def semilength(self) -> int:
        """Sum of the semilengths of all pieces (n - m)"""
        pieces = self.left + self.right + (self.middle,)
        return sum(p.semilength for p in pieces)


def _half(g: int) -> int:
    return (g + 1) // 2


def decompose_bounded(path: DyckPath, g: int) -> PathDecomposition:
    """
    Decompose a path of height at most g + 1.

    With h = ceil(g/2), remove every step between heights h and h + 1. The
    remaining word splits into A, L_1, R'_2, L_2, ..., R'_m, L_m, B. The
    prefix P of A up to its first visit of height h and the reversed rest of
    A give M-prefix and R_1; R_k is R'_k reversed and M = P + reverse(B).

    Args:
        path: Dyck path of height <= g + 1
        g: Bound, g >= 1

    Returns:
        The decomposition; m = 0 when the path never rises above h

    Raises:
        HeightExceeded: If the path is higher than g + 1
    """
    top = height(path)
    if top > g + 1:
        raise HeightExceeded(f"Path of height {top} exceeds bound {g + 1}", top, g + 1)
    h = _half(g)
    if top <= h:
        return PathDecomposition(m=0, left=(), right=(), middle=path)

    heights = path.heights
    segments = []
    current: List[str] = []
    for position, step in enumerate(path.steps):
        if {heights[position], heights[position + 1]} == {h, h + 1}:
            segments.append("".join(current))
            current = []
        else:
            current.append(step)
    segments.append("".join(current))

    m = (len(segments) - 1) // 2
    head, tail = segments[0], segments[-1]
    left = segments[1::2]
    inner_right = segments[2:-1:2]

    split = heights.index(h)
    prefix = head[:split]
    right = [reverse_steps(head[split:])] + [reverse_steps(word) for word in inner_right]
    middle = prefix + reverse_steps(tail)

    return PathDecomposition(
        m=m,
        left=tuple(DyckPath.from_steps(word) for word in left),
        right=tuple(DyckPath.from_steps(word) for word in right),
        middle=DyckPath.from_steps(middle),
    )


def recompose_bounded(decomposition: PathDecomposition, g: int) -> DyckPath:
    """
    Inverse of decompose_bounded.

    Raises:
        HeightExceeded: If a piece violates its height bound
        ValueError: If the piece counts do not match m
    """
    m = decomposition.m
    h = _half(g)
    middle = decomposition.middle
    left = decomposition.left
    right = decomposition.right
    if len(left) != m or len(right) != m:
        raise ValueError(f"Expected {m} left and right pieces, got {len(left)} and {len(right)}")

    middle_height = height(middle)
    if m == 0:
        if middle_height > h:
            raise HeightExceeded(f"Middle piece of height {middle_height} exceeds {h}", middle_height, h)
        return middle
    if middle_height != h:
        raise HeightExceeded(f"Middle piece must have height exactly {h}", middle_height, h)
    for piece in left:
        if height(piece) > g // 2:
            raise HeightExceeded(f"Left piece {piece} exceeds {g // 2}", height(piece), g // 2)
    for piece in right:
        if height(piece) > h:
            raise HeightExceeded(f"Right piece {piece} exceeds {h}", height(piece), h)

    split = middle.heights.index(h)
    prefix = middle.steps[:split]
    tail = reverse_steps(middle.steps[split:])

    parts = [prefix]
    for k in range(m):
        parts.append(reverse_steps(right[k].steps))
        parts.append("U" + left[k].steps + "D")
    parts.append(tail)
    return DyckPath.from_steps("".join(parts))
