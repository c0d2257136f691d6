"""Text formats read and written by quartx."""

from __future__ import annotations

from . import expressions, newick
from .expressions import ExpressionParseError, parse_expression
from .newick import NewickError, TreeNode, parse_tree, render_tree

__all__ = (
    "ExpressionParseError",
    "NewickError",
    "TreeNode",
    "expressions",
    "newick",
    "parse_expression",
    "parse_tree",
    "render_tree",
)
