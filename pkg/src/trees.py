"""
Trees

The tree τ(A) of a linear Nakayama algebra (edges i + c_i -> i), naturally
labeled and ordered rooted trees, the distance formula for projective
dimension, the bounded-depth tree decomposition and the pre-order bijection
between ordered trees and Dyck paths.
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from .dyck import DyckPath
from .kupisch import KupischSeries, NakayamaError, VertexOutOfRange, WrongKind

logger = logging.getLogger(__name__)


class InvalidTree(NakayamaError, ValueError):
    """Raised when a parent map does not describe a tree rooted at n"""
    def __init__(self, message: str, parents: Sequence[int] = ()):
        super().__init__(message)
        self.parents = tuple(parents)


class NotNaturallyLabeled(NakayamaError):
    """Raised when a labeled tree is not naturally labeled"""
    pass


class BoundViolated(NakayamaError):
    """Raised when a tree does not satisfy the depth bound for g"""
    def __init__(self, message: str, g: int):
        super().__init__(message)
        self.g = g


def _parent_error(parents: Sequence[int]) -> str:
    n = len(parents)
    for i, p in enumerate(parents):
        if not i < p <= n:
            return f"parent({i}) = {p} is not in ({i}, {n}]"
    return ""


class LabeledTree(BaseModel):
    """
    Rooted tree on vertices 0..n with root n.

    Labels grow towards the root: parent(i) > i for every i < n.
    """
    model_config = ConfigDict(frozen=True)

    parent: Tuple[int, ...]

    @model_validator(mode="after")
    def _check_parents(self) -> "LabeledTree":
        error = _parent_error(self.parent)
        if error:
            raise ValueError(error)
        return self

    @classmethod
    def from_parents(cls, parents: Sequence[int]) -> "LabeledTree":
        """
        Raises:
            InvalidTree: If some parent(i) is not in (i, n]
        """
        values = tuple(parents)
        error = _parent_error(values)
        if error:
            raise InvalidTree(f"Invalid parent map {list(values)}: {error}", values)
        return cls.model_construct(parent=values)

    @property
    def n(self) -> int:
        """Label of the root; the tree has n + 1 vertices"""
        return len(self.parent)

    def children(self) -> List[List[int]]:
        """Children of every vertex in increasing label order"""
        result: List[List[int]] = [[] for _ in range(self.n + 1)]
        for child, p in enumerate(self.parent):
            result[p].append(child)
        return result


@dataclass(frozen=True)
class OrderedTree:
    """Rooted tree with a linear order on the children of every vertex"""
    children: Tuple["OrderedTree", ...] = ()

    @property
    def size(self) -> int:
        """Number of vertices"""
        return 1 + sum(child.size for child in self.children)

    @property
    def depth(self) -> int:
        """Number of edges on a longest root-to-leaf path"""
        if not self.children:
            return 0
        return 1 + max(child.depth for child in self.children)

    def to_parentheses(self) -> str:
        """Pre-order word: '(' on descend, ')' on ascend, root edge omitted"""
        return "".join("(" + child.to_parentheses() + ")" for child in self.children)

    @classmethod
    def from_parentheses(cls, text: str) -> "OrderedTree":
        word = text.replace("(", "U").replace(")", "D")
        return dyck_to_tree(DyckPath.from_steps(word))


def _check_vertex(tree: LabeledTree, i: int) -> None:
    if not 0 <= i <= tree.n:
        raise VertexOutOfRange(f"Vertex {i} out of range [0, {tree.n}]", i, tree.n + 1)


def tau(series: KupischSeries) -> LabeledTree:
    """
    Tree τ(A) with an edge i + c_i -> i for every 0 <= i < n.

    Raises:
        WrongKind: For cyclic series
    """
    if not series.is_linear:
        raise WrongKind(f"τ is defined for linear series, got {series}", expected="linear")
    return LabeledTree.from_parents(i + c for i, c in enumerate(series.entries))


def is_naturally_labeled(tree: LabeledTree) -> bool:
    """
    True iff the children of i are all smaller than the children of j for
    every i < j, i.e. the parent map is non-decreasing.
    """
    parent = tree.parent
    return all(parent[i] <= parent[i + 1] for i in range(len(parent) - 1))


def tau_inverse(tree: LabeledTree) -> KupischSeries:
    """
    Recover c_i = parent(i) - i.

    Raises:
        NotNaturallyLabeled: If the tree is not naturally labeled
    """
    if not is_naturally_labeled(tree):
        raise NotNaturallyLabeled(f"Tree with parents {list(tree.parent)} is not naturally labeled")
    return KupischSeries.from_entries(p - i for i, p in enumerate(tree.parent))


def depth(tree: LabeledTree, i: int) -> int:
    """Distance from i to the root"""
    _check_vertex(tree, i)
    steps = 0
    while i != tree.n:
        i = tree.parent[i]
        steps += 1
    return steps


def dist(tree: LabeledTree, i: int, j: int) -> int:
    """Number of edges on the path between i and j"""
    _check_vertex(tree, i)
    _check_vertex(tree, j)
    steps = 0
    # the smaller label is never an ancestor of the larger one
    while i != j:
        if i < j:
            i = tree.parent[i]
        else:
            j = tree.parent[j]
        steps += 1
    return steps


def pdim_via_tree(tree: LabeledTree, i: int) -> int:
    """Projective dimension of S_i as dist(i, i + 1) - 1"""
    if not 0 <= i < tree.n:
        raise VertexOutOfRange(f"Vertex {i} out of range [0, {tree.n})", i, tree.n)
    return dist(tree, i, i + 1) - 1


def gldim_via_tree(tree: LabeledTree) -> int:
    """Maximum of pdim_via_tree; 0 for the single-vertex tree"""
    return max((pdim_via_tree(tree, i) for i in range(tree.n)), default=0)


def level_sets(tree: LabeledTree) -> List[List[int]]:
    """Labels at depth 0, 1, 2, ... in increasing order"""
    depths = [0] * (tree.n + 1)
    # parents have larger labels, so they are resolved first
    for i in range(tree.n - 1, -1, -1):
        depths[i] = depths[tree.parent[i]] + 1
    levels: Dict[int, List[int]] = {}
    for vertex, d in enumerate(depths):
        levels.setdefault(d, []).append(vertex)
    return [levels[d] for d in sorted(levels)]


def forget_labels(tree: LabeledTree) -> OrderedTree:
    """
    Order the children of every vertex by label and drop the labels.

    Raises:
        NotNaturallyLabeled: If the tree is not naturally labeled
    """
    if not is_naturally_labeled(tree):
        raise NotNaturallyLabeled(f"Tree with parents {list(tree.parent)} is not naturally labeled")
    children = tree.children()
    built: Dict[int, OrderedTree] = {}
    # children have smaller labels than their parent
    for vertex in range(tree.n + 1):
        built[vertex] = OrderedTree(tuple(built[child] for child in children[vertex]))
    return built[tree.n]


def natural_labeling(tree: OrderedTree) -> LabeledTree:
    """
    The unique natural labeling of an ordered tree.

    Vertices are labeled level by level starting from the deepest one, each
    level from left to right in breadth-first order, so the root gets n.
    """
    # (node, parent index, depth) in breadth-first order
    nodes: List[Tuple[OrderedTree, int, int]] = [(tree, -1, 0)]
    queue = deque([0])
    while queue:
        index = queue.popleft()
        node, _, level = nodes[index]
        for child in node.children:
            nodes.append((child, index, level + 1))
            queue.append(len(nodes) - 1)

    order = sorted(range(len(nodes)), key=lambda index: (-nodes[index][2], index))
    label = [0] * len(nodes)
    for new_label, index in enumerate(order):
        label[index] = new_label

    parents = [0] * (len(nodes) - 1)
    for index, (_, parent_index, _) in enumerate(nodes):
        if parent_index >= 0:
            parents[label[index]] = label[parent_index]
    return LabeledTree.from_parents(parents)


def glue(first: LabeledTree, second: LabeledTree) -> LabeledTree:
    """
    Concatenate two naturally labeled trees: shift the labels of the second
    by n_1 and identify its vertex 0 with the root n_1 of the first.
    """
    shift = first.n
    return LabeledTree.from_parents(first.parent + tuple(p + shift for p in second.parent))


def sibling_bound_check(tree: OrderedTree, g: int) -> bool:
    """
    True iff no vertex has children a left of b whose subtrees have depth
    >= floor(g/2) (at a) and >= ceil(g/2) (at b).
    """
    low, high = g // 2, (g + 1) // 2
    stack = [tree]
    while stack:
        node = stack.pop()
        seen_low = False
        for child in node.children:
            child_depth = child.depth
            if seen_low and child_depth >= high:
                return False
            if child_depth >= low:
                seen_low = True
            stack.append(child)
    return True


@dataclass(frozen=True)
class TreeDecomposition:
    """Pieces of an ordered tree satisfying the bound for g"""
    m: int
    left: Tuple[OrderedTree, ...]
    right: Tuple[OrderedTree, ...]
    middle: OrderedTree

    @property
    def vertex_count(self) -> int:
        """Total vertices over all pieces (n + 1 + m)"""
        pieces = self.left + self.right + (self.middle,)
        return sum(piece.size for piece in pieces)


def decompose_tree_bounded(tree: OrderedTree, g: int) -> TreeDecomposition:
    """
    Peel the tree down to depth ceil(g/2).

    While the current tree is deeper than ceil(g/2), its root has exactly one
    child a whose subtree has depth >= ceil(g/2). The root with the siblings
    left of a becomes L_k, the root with the siblings right of a becomes
    R_k, and the procedure continues in the subtree at a.

    Raises:
        BoundViolated: If the tree does not satisfy the bound for g
    """
    if not sibling_bound_check(tree, g):
        raise BoundViolated(f"Tree {tree.to_parentheses()!r} violates the bound for g={g}", g)
    h = (g + 1) // 2
    left: List[OrderedTree] = []
    right: List[OrderedTree] = []
    current = tree
    while current.depth > h:
        deep = [index for index, child in enumerate(current.children) if child.depth >= h]
        if len(deep) != 1:
            raise BoundViolated(f"Expected one child of depth >= {h}, found {len(deep)}", g)
        a = deep[0]
        left.append(OrderedTree(current.children[:a]))
        right.append(OrderedTree(current.children[a + 1:]))
        current = current.children[a]
    return TreeDecomposition(m=len(left), left=tuple(left), right=tuple(right), middle=current)


def recompose_tree_bounded(decomposition: TreeDecomposition, g: int) -> OrderedTree:
    """
    Inverse of decompose_tree_bounded.

    Raises:
        BoundViolated: If the pieces cannot come from a decomposition for g
    """
    m = decomposition.m
    h = (g + 1) // 2
    if len(decomposition.left) != m or len(decomposition.right) != m:
        raise BoundViolated(f"Expected {m} left and right pieces", g)
    middle = decomposition.middle
    if (m == 0 and middle.depth > h) or (m > 0 and middle.depth != h):
        raise BoundViolated(f"Middle piece of depth {middle.depth} does not fit g={g}", g)
    current = middle
    for k in range(m - 1, -1, -1):
        current = OrderedTree(
            decomposition.left[k].children + (current,) + decomposition.right[k].children
        )
    return current


def _tree_word(tree: OrderedTree) -> str:
    return "".join("U" + _tree_word(child) + "D" for child in tree.children)


def tree_to_dyck(tree: OrderedTree) -> DyckPath:
    """Pre-order traversal: U when entering a child, D when leaving it"""
    return DyckPath.from_steps(_tree_word(tree))


def dyck_to_tree(path: DyckPath) -> OrderedTree:
    """Inverse of tree_to_dyck"""
    stack: List[List[OrderedTree]] = [[]]
    for step in path.steps:
        if step == "U":
            stack.append([])
        else:
            finished = OrderedTree(tuple(stack.pop()))
            stack[-1].append(finished)
    return OrderedTree(tuple(stack[0]))
