"""Explicit prefix/suffix trees, Newick I/O and a brute-force quartet distance.

Trees are stored rooted, but everything quartet-related only depends on the
unrooted shape: the induced split of four leaves is read off the depths of
their pairwise lowest common ancestors, which is the same scoring the label
oracle in :mod:`quartx.core.topology` uses.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence, Union

from quartx.app.logging import get_logger
from quartx.parser.newick import TreeNode, parse_tree, render_tree

from .bitlabel import MIN_WIDTH, LeafOrder, label_from_index
from .config import DEFAULT_CONFIG, EnumerationConfig
from .errors import EnumerationRangeError, TreeError
from .parallel import run_chunks
from .topology import PAIR_ORDER, Pairing, pairing_from_scores

LOGGER = get_logger(__name__)

DepthMatrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class LcaTable:
    """Depth of the lowest common ancestor for every pair of leaves."""

    labels: tuple[str, ...]
    depth: DepthMatrix
    index: dict[str, int] = field(compare=False, repr=False)


@dataclass(frozen=True)
class PhyloTree:
    """A rooted full binary tree with distinct leaf labels."""

    root: TreeNode

    def __post_init__(self) -> None:
        seen: set[str] = set()
        for node in self.nodes():
            if node.is_leaf:
                if not node.label:
                    raise TreeError("Every leaf needs a non-empty label.")
                if node.label in seen:
                    raise TreeError(f"Duplicate leaf label {node.label!r}.")
                seen.add(node.label)
            else:
                if len(node.children) != 2:
                    raise TreeError(
                        f"Internal nodes need exactly 2 children, found {len(node.children)}."
                    )
                if node.label is not None:
                    raise TreeError("Internal nodes carry no label.")

    def nodes(self) -> Iterator[TreeNode]:
        """Yield every node in preorder, root first."""
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def leaf_labels(self) -> tuple[str, ...]:
        return tuple(node.label for node in self.nodes() if node.is_leaf)  # type: ignore[misc]

    def lca_depths(self) -> LcaTable:
        labels = self.leaf_labels()
        index = {label: position for position, label in enumerate(labels)}
        size = len(labels)
        depth = [[0] * size for _ in range(size)]

        # Postorder walk; ``below`` holds the leaf positions under each finished subtree.
        below: list[list[int]] = []
        stack: list[tuple[TreeNode, int, bool]] = [(self.root, 0, False)]
        while stack:
            node, level, expanded = stack.pop()
            if node.is_leaf:
                position = index[node.label]  # type: ignore[index]
                depth[position][position] = level
                below.append([position])
                continue
            if not expanded:
                stack.append((node, level, True))
                stack.extend((child, level + 1, False) for child in reversed(node.children))
                continue
            right = below.pop()
            left = below.pop()
            for i in left:
                for j in right:
                    depth[i][j] = depth[j][i] = level
            below.append(left + right)
        return LcaTable(labels, tuple(tuple(row) for row in depth), index)

    def rerooted(self, target: Union[str, int]) -> "PhyloTree":
        """Move the root onto the edge above ``target``.

        ``target`` is a leaf label or a preorder index into :meth:`nodes`.
        The unrooted shape, and therefore every induced quartet, is unchanged.
        """
        nodes = list(self.nodes())
        if isinstance(target, str):
            matches = [i for i, node in enumerate(nodes) if node.label == target]
            if not matches:
                raise TreeError(f"Unknown leaf label {target!r}.")
            target_id = matches[0]
        else:
            target_id = target
        if not (0 < target_id < len(nodes)):
            raise TreeError(f"Cannot re-root above node {target!r}.")

        adjacency, parent = _unrooted_adjacency(nodes)
        above = parent[target_id]
        if above == 0:
            # The root is suppressed, so the edge above a root child ends at its sibling.
            above = next(i for i, owner in parent.items() if owner == 0 and i != target_id)
        return PhyloTree(
            TreeNode.join(
                _orient(nodes, adjacency, target_id, above),
                _orient(nodes, adjacency, above, target_id),
            )
        )


def _unrooted_adjacency(nodes: Sequence[TreeNode]) -> tuple[dict[int, list[int]], dict[int, int]]:
    """Adjacency of the tree with the degree-2 root suppressed (preorder ids)."""
    adjacency: dict[int, list[int]] = {i: [] for i in range(len(nodes))}
    parent: dict[int, int] = {}
    ids = {id(node): i for i, node in enumerate(nodes)}
    for node_id, node in enumerate(nodes):
        for child in node.children:
            child_id = ids[id(child)]
            parent[child_id] = node_id
            adjacency[node_id].append(child_id)
            adjacency[child_id].append(node_id)

    left, right = adjacency.pop(0)
    adjacency[left] = [right if m == 0 else m for m in adjacency[left]]
    adjacency[right] = [left if m == 0 else m for m in adjacency[right]]
    return adjacency, parent


def _orient(
    nodes: Sequence[TreeNode],
    adjacency: dict[int, list[int]],
    node_id: int,
    came_from: int,
) -> TreeNode:
    """Rebuild the subtree hanging off ``node_id`` when entered from ``came_from``."""
    built: list[TreeNode] = []
    stack: list[tuple[int, int, bool]] = [(node_id, came_from, False)]
    while stack:
        current, parent, expanded = stack.pop()
        onward = [m for m in adjacency[current] if m != parent]
        if not onward:
            built.append(TreeNode.leaf(nodes[current].label or ""))
            continue
        if not expanded:
            stack.append((current, parent, True))
            stack.extend((m, current, False) for m in reversed(onward))
            continue
        children = tuple(built[-len(onward):])
        del built[-len(onward):]
        built.append(TreeNode(children=children))
    return built[0]


######################################################################
# Construction & Newick
######################################################################


def build_tree(n: int, order: LeafOrder, *, config: EnumerationConfig = DEFAULT_CONFIG) -> PhyloTree:
    """Complete balanced binary tree of depth ``n`` with leaves in ``order``."""
    if not (MIN_WIDTH <= n <= config.build_tree_cap):
        raise EnumerationRangeError(
            f"build_tree supports {MIN_WIDTH} <= n <= {config.build_tree_cap}, got n={n}."
        )
    level = [
        TreeNode.leaf(label_from_index(position, n, order).render())
        for position in range(1 << n)
    ]
    while len(level) > 1:
        level = [TreeNode.join(level[i], level[i + 1]) for i in range(0, len(level), 2)]
    return PhyloTree(level[0])


def to_newick(tree: PhyloTree) -> str:
    return render_tree(tree.root)


def parse_newick(text: str) -> PhyloTree:
    return PhyloTree(parse_tree(text))


######################################################################
# Quartets
######################################################################


def _pairing_at(depth: DepthMatrix, positions: Sequence[int]) -> Pairing:
    return pairing_from_scores(
        [depth[positions[i]][positions[j]] for i, j in PAIR_ORDER]
    )


def induced_quartet(
    tree: PhyloTree,
    a: str,
    b: str,
    c: str,
    d: str,
    *,
    table: Optional[LcaTable] = None,
) -> Pairing:
    """Split that ``tree`` induces on the leaves ``a, b, c, d`` (in that order)."""
    labels = (a, b, c, d)
    if len(set(labels)) != 4:
        raise TreeError(f"Quartet labels must be distinct, got {labels}.")
    table = table or tree.lca_depths()
    missing = [label for label in labels if label not in table.index]
    if missing:
        raise TreeError(f"Unknown leaf label(s): {', '.join(missing)}.")
    return _pairing_at(table.depth, [table.index[label] for label in labels])


def _distance_chunk(first: DepthMatrix, second: DepthMatrix, smallest: int) -> Counter:
    counts: Counter = Counter()
    for rest in itertools.combinations(range(smallest + 1, len(first)), 3):
        positions = (smallest, *rest)
        if _pairing_at(first, positions) is not _pairing_at(second, positions):
            counts[None] += 1
    return counts


def quartet_distance(
    first: PhyloTree,
    second: PhyloTree,
    *,
    config: EnumerationConfig = DEFAULT_CONFIG,
) -> int:
    """Number of 4-leaf subsets on which the two trees induce different splits."""
    labels_1 = set(first.leaf_labels())
    labels_2 = set(second.leaf_labels())
    if labels_1 != labels_2:
        only_first = sorted(labels_1 - labels_2)
        only_second = sorted(labels_2 - labels_1)
        raise TreeError(
            "Trees have different leaf sets "
            f"(only in first: {only_first[:5]}, only in second: {only_second[:5]})."
        )
    size = len(labels_1)
    if size < 4:
        raise TreeError(f"Quartet distance needs at least 4 leaves, got {size}.")
    if size > config.tree_distance_cap:
        raise EnumerationRangeError(
            f"Quartet distance supports at most {config.tree_distance_cap} leaves, got {size}."
        )

    table_1 = first.lca_depths()
    table_2 = second.lca_depths()

    # Re-index the second table into the first tree's leaf order.
    order = [table_2.index[label] for label in table_1.labels]
    second_depth = tuple(tuple(table_2.depth[i][j] for j in order) for i in order)

    arguments = [(table_1.depth, second_depth, smallest) for smallest in range(size - 3)]
    LOGGER.debug("Comparing %d-leaf trees over %d chunks", size, len(arguments))
    return sum(run_chunks(_distance_chunk, arguments, config.workers).values())


__all__ = [
    "LcaTable",
    "PhyloTree",
    "TreeNode",
    "build_tree",
    "induced_quartet",
    "parse_newick",
    "quartet_distance",
    "to_newick",
]
