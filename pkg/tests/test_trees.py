import pytest

from src.dyck import DyckPath
from src.kupisch import VertexOutOfRange, WrongKind, global_dimension, parse_series
from src.trees import (
    BoundViolated,
    InvalidTree,
    LabeledTree,
    NotNaturallyLabeled,
    OrderedTree,
    TreeDecomposition,
    decompose_tree_bounded,
    depth,
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
    tau_inverse,
    tree_to_dyck,
)

STAIRCASE = "[3,4,4,3,2,1]"
LEFT12 = "[5,6,5,4,4,3,3,3,2,3,2,1]"
RIGHT12 = "[2,1,5,5,5,6,5,4,3,2,2,1]"


def test_tau_parents():
    tree = tau(parse_series(STAIRCASE))
    assert tree.parent == (3, 5, 6, 6, 6, 6)
    assert tree.n == 6
    assert is_naturally_labeled(tree)
    assert tau_inverse(tree) == parse_series(STAIRCASE)


def test_tau_rejects_cyclic():
    with pytest.raises(WrongKind):
        tau(parse_series("cyclic:[3,3,3,4]"))


@pytest.mark.parametrize("parents", [[0], [2, 1], [3, 4, 3]])
def test_invalid_parent_maps(parents):
    with pytest.raises(InvalidTree) as info:
        LabeledTree.from_parents(parents)
    assert info.value.parents == tuple(parents)


def test_not_naturally_labeled():
    tree = LabeledTree.from_parents([3, 2, 3])
    assert not is_naturally_labeled(tree)
    with pytest.raises(NotNaturallyLabeled):
        tau_inverse(tree)
    with pytest.raises(NotNaturallyLabeled):
        forget_labels(tree)


def test_distance_formula_on_examples():
    tree = tau(parse_series(STAIRCASE))
    assert depth(tree, 0) == 2
    assert dist(tree, 0, 1) == 4
    assert pdim_via_tree(tree, 0) == 3
    assert gldim_via_tree(tree) == 3

    left = tau(parse_series(LEFT12))
    assert dist(left, 0, 1) == 5
    assert gldim_via_tree(left) == global_dimension(parse_series(LEFT12)) == 4

    right = tau(parse_series(RIGHT12))
    assert dist(right, 2, 3) == 4


def test_single_vertex_tree():
    tree = tau(parse_series("[1]"))
    assert gldim_via_tree(tree) == 0
    with pytest.raises(VertexOutOfRange):
        pdim_via_tree(tree, 1)


def test_level_sets_are_intervals():
    assert level_sets(tau(parse_series(STAIRCASE))) == [[6], [2, 3, 4, 5], [0, 1]]


def test_forget_labels_and_natural_labeling():
    tree = tau(parse_series(STAIRCASE))
    ordered = forget_labels(tree)
    assert ordered.to_parentheses() == "()(())()(())"
    assert ordered.size == 7
    assert ordered.depth == 2
    assert natural_labeling(ordered) == tree


def test_natural_labeling_deepest_level_first():
    tree = natural_labeling(OrderedTree.from_parentheses("(())()"))
    assert tree.parent == (1, 3, 3)
    assert tau_inverse(tree).entries == (1, 2, 1)


def test_glue_matches_product():
    glued = glue(tau(parse_series("[1]")), tau(parse_series("[2,1]")))
    assert glued.parent == (1, 3, 3)
    assert glued == tau(parse_series("[1,2,1]"))


def test_sibling_bound_check():
    cherry = OrderedTree.from_parentheses("()()")
    assert not sibling_bound_check(cherry, 0)
    assert sibling_bound_check(cherry, 1)
    with pytest.raises(BoundViolated) as info:
        decompose_tree_bounded(cherry, 0)
    assert info.value.g == 0


def test_sibling_bound_matches_global_dimension():
    for text in ("[2,2,1]", STAIRCASE, LEFT12, RIGHT12):
        series = parse_series(text)
        ordered = forget_labels(tau(series))
        gldim = global_dimension(series)
        for g in range(6):
            assert sibling_bound_check(ordered, g) == (gldim <= g)


@pytest.mark.parametrize("text, g, expected", [
    (LEFT12, 4, (2, ["(())", "(()()())"], ["()", ""], "()(())")),
    (RIGHT12, 3, (2, ["()", "()()"], ["", "(())(())"], "(()())")),
])
def test_tree_decomposition_examples(text, g, expected):
    tree = forget_labels(tau(parse_series(text)))
    pieces = decompose_tree_bounded(tree, g)
    assert (
        pieces.m,
        [t.to_parentheses() for t in pieces.left],
        [t.to_parentheses() for t in pieces.right],
        pieces.middle.to_parentheses(),
    ) == expected
    assert pieces.vertex_count == tree.size + pieces.m
    assert recompose_tree_bounded(pieces, g) == tree


def test_recompose_rejects_shallow_middle():
    pieces = TreeDecomposition(
        m=1,
        left=(OrderedTree(),),
        right=(OrderedTree(),),
        middle=OrderedTree(),
    )
    with pytest.raises(BoundViolated):
        recompose_tree_bounded(pieces, 2)


def test_tree_path_correspondence():
    tree = OrderedTree.from_parentheses("(()())")
    assert tree.size == 4
    assert tree.depth == 2
    path = tree_to_dyck(tree)
    assert path.steps == "UUDUDD"
    assert dyck_to_tree(path) == tree
    assert dyck_to_tree(DyckPath.from_steps("")) == OrderedTree()
