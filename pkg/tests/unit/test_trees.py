"""Tests for the explicit trees and the brute-force quartet distance."""

from __future__ import annotations

import itertools

import pytest

from quartx.core import closed_forms as cf
from quartx.core.bitlabel import LeafOrder, parse_label
from quartx.core.config import EnumerationConfig
from quartx.core.errors import EnumerationRangeError, TreeError
from quartx.core.topology import Pairing, Quartet, prefix_topology, suffix_topology
from quartx.core.trees import (
    PhyloTree,
    TreeNode,
    build_tree,
    induced_quartet,
    parse_newick,
    quartet_distance,
    to_newick,
)


def test_build_tree_leaf_orders():
    assert build_tree(3, LeafOrder.PREFIX).leaf_labels() == (
        "000", "001", "010", "011", "100", "101", "110", "111",
    )
    assert build_tree(3, LeafOrder.SUFFIX).leaf_labels() == (
        "000", "100", "010", "110", "001", "101", "011", "111",
    )
    assert build_tree(2, LeafOrder.PREFIX).leaf_labels() == ("00", "01", "10", "11")


@pytest.mark.parametrize("n", [1, 21])
def test_build_tree_rejects_out_of_range(n):
    with pytest.raises(EnumerationRangeError):
        build_tree(n, LeafOrder.PREFIX)


def test_to_newick_small_trees():
    assert to_newick(build_tree(2, LeafOrder.PREFIX)) == "((00,01),(10,11));"
    assert to_newick(build_tree(2, LeafOrder.SUFFIX)) == "((00,10),(01,11));"


def test_newick_round_trip_preserves_structure():
    tree = build_tree(4, LeafOrder.SUFFIX)
    assert parse_newick(to_newick(tree)) == tree


def test_phylo_tree_validates_shape():
    with pytest.raises(TreeError):
        PhyloTree(TreeNode(children=(TreeNode.leaf("a"),)))
    with pytest.raises(TreeError):
        PhyloTree(TreeNode.join(TreeNode.leaf("a"), TreeNode.leaf("a")))


def test_lca_depths_match_common_prefix_lengths():
    table = build_tree(3, LeafOrder.PREFIX).lca_depths()
    assert table.depth[table.index["000"]][table.index["001"]] == 2
    assert table.depth[table.index["000"]][table.index["100"]] == 0
    assert table.depth[table.index["010"]][table.index["011"]] == 2


def test_induced_quartet_examples():
    labels = ("0111", "0110", "1000", "1001")
    assert induced_quartet(build_tree(4, LeafOrder.PREFIX), *labels) is Pairing.P01_23
    assert induced_quartet(build_tree(4, LeafOrder.SUFFIX), *labels) is Pairing.P03_12


def test_induced_quartet_is_covariant():
    tree = build_tree(4, LeafOrder.SUFFIX)
    labels = ("0111", "0110", "1000", "1001")
    base = induced_quartet(tree, *labels)
    for perm in itertools.permutations(range(4)):
        reordered = [labels[index] for index in perm]
        assert induced_quartet(tree, *reordered) is base.permuted(perm)


def test_induced_quartet_rejects_bad_labels():
    tree = build_tree(3, LeafOrder.PREFIX)
    with pytest.raises(TreeError):
        induced_quartet(tree, "000", "001", "010", "999")
    with pytest.raises(TreeError):
        induced_quartet(tree, "000", "001", "010", "000")


@pytest.mark.parametrize("n", [2, 3, 4, 5, pytest.param(6, marks=pytest.mark.slow)])
def test_tree_oracle_matches_label_oracle(n):
    prefix_tree = build_tree(n, LeafOrder.PREFIX)
    suffix_tree = build_tree(n, LeafOrder.SUFFIX)
    prefix_table = prefix_tree.lca_depths()
    suffix_table = suffix_tree.lca_depths()
    labels = prefix_tree.leaf_labels()
    for combo in itertools.combinations(labels, 4):
        quartet = Quartet(tuple(parse_label(text, n) for text in combo))
        assert induced_quartet(prefix_tree, *combo, table=prefix_table) is prefix_topology(quartet)
        assert induced_quartet(suffix_tree, *combo, table=suffix_table) is suffix_topology(quartet)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_quartet_distance_matches_closed_form(n):
    distance = quartet_distance(build_tree(n, LeafOrder.PREFIX), build_tree(n, LeafOrder.SUFFIX))
    assert distance == cf.distance_cf(n)


def test_quartet_distance_is_symmetric_and_zero_on_itself():
    prefix_tree = build_tree(3, LeafOrder.PREFIX)
    suffix_tree = build_tree(3, LeafOrder.SUFFIX)
    assert quartet_distance(prefix_tree, suffix_tree) == 60
    assert quartet_distance(suffix_tree, prefix_tree) == 60
    assert quartet_distance(prefix_tree, prefix_tree) == 0


def test_quartet_distance_ignores_rooting():
    prefix_tree = build_tree(3, LeafOrder.PREFIX)
    suffix_tree = build_tree(3, LeafOrder.SUFFIX)
    for target in ("000", "101", 1, 2, 5, 9):
        rerooted = prefix_tree.rerooted(target)
        assert sorted(rerooted.leaf_labels()) == sorted(prefix_tree.leaf_labels())
        assert quartet_distance(rerooted, prefix_tree) == 0
        assert quartet_distance(rerooted, suffix_tree) == 60
        assert quartet_distance(prefix_tree, suffix_tree.rerooted(target)) == 60


def test_rerooted_moves_root_above_leaf():
    tree = parse_newick("(((a,b),c),(d,e));")
    assert to_newick(tree.rerooted("a")) == "(a,(((d,e),c),b));"
    with pytest.raises(TreeError):
        tree.rerooted(0)
    with pytest.raises(TreeError):
        tree.rerooted("z")


def test_quartet_distance_rejects_mismatched_or_small_trees():
    with pytest.raises(TreeError):
        quartet_distance(parse_newick("((a,b),(c,d));"), parse_newick("((a,b),(c,e));"))
    with pytest.raises(TreeError):
        quartet_distance(parse_newick("((a,b),c);"), parse_newick("((a,c),b);"))


def test_quartet_distance_respects_leaf_cap():
    config = EnumerationConfig(tree_distance_cap=4)
    tree = build_tree(3, LeafOrder.PREFIX)
    with pytest.raises(EnumerationRangeError):
        quartet_distance(tree, tree, config=config)


def test_quartet_distance_on_parsed_trees():
    first = parse_newick("((a,b),(c,d));")
    second = parse_newick("((a,c),(b,d));")
    assert quartet_distance(first, second) == 1
    assert quartet_distance(first, parse_newick("(b,(a,(d,c)));")) == 0


def test_quartet_distance_with_workers():
    config = EnumerationConfig(workers=2)
    distance = quartet_distance(
        build_tree(4, LeafOrder.PREFIX), build_tree(4, LeafOrder.SUFFIX), config=config
    )
    assert distance == 1452


@pytest.mark.slow
def test_quartet_distance_at_n6():
    distance = quartet_distance(build_tree(6, LeafOrder.PREFIX), build_tree(6, LeafOrder.SUFFIX))
    assert distance == 454224


def _caterpillar(size: int) -> str:
    text = "a0"
    for i in range(1, size):
        text = f"({text},a{i})"
    return text + ";"


def test_deep_caterpillar_tree_is_walked_without_recursion():
    tree = parse_newick(_caterpillar(1500))
    assert len(tree.leaf_labels()) == 1500

    table = tree.lca_depths()
    a0, a1, last = table.index["a0"], table.index["a1"], table.index["a1499"]
    assert table.depth[a0][a0] == 1499
    assert table.depth[a0][a1] == 1498
    assert table.depth[a0][last] == 0
    assert induced_quartet(tree, "a0", "a1", "a2", "a3", table=table) is Pairing.P01_23

    rerooted = tree.rerooted("a0")
    assert len(rerooted.leaf_labels()) == 1500
    text = to_newick(rerooted)
    assert text.startswith("(a0,(")
    assert text.endswith(",a1));")


def test_deep_caterpillar_hits_leaf_cap_before_tables():
    tree = parse_newick(_caterpillar(1500))
    with pytest.raises(EnumerationRangeError):
        quartet_distance(tree, tree)
