"""Reading and writing the Newick dialect used for quartx tree files.

The dialect is deliberately small::

    tree    := subtree ";"
    subtree := leaf | "(" subtree "," subtree ")"
    leaf    := one or more characters other than whitespace and "(),;:"

Internal nodes carry no names, there are no branch lengths, and whitespace
between tokens is ignored. Every internal node has exactly two children.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Optional

_TOKEN_RE = re.compile(r"\s*(?:(?P<punct>[(),;:])|(?P<label>[^\s(),;:]+))")


class NewickError(ValueError):
    """Raised when Newick text does not follow the supported dialect."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class TreeNode:
    """A leaf (``label`` set, no children) or an internal node (children only)."""

    label: Optional[str] = None
    children: tuple["TreeNode", ...] = ()

    @property
    def is_leaf(self) -> bool:
        return not self.children

    @classmethod
    def leaf(cls, label: str) -> "TreeNode":
        return cls(label=label)

    @classmethod
    def join(cls, left: "TreeNode", right: "TreeNode") -> "TreeNode":
        return cls(children=(left, right))


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    position: int


def _tokenize(text: str) -> Iterator[_Token]:
    position = 0
    while position < len(text):
        match = _TOKEN_RE.match(text, position)
        if match is None:
            # Only trailing whitespace is left.
            return
        if match.group("punct") is not None:
            yield _Token("punct", match.group("punct"), match.start("punct"))
        else:
            yield _Token("label", match.group("label"), match.start("label"))
        position = match.end()


class _Reader:
    def __init__(self, text: str) -> None:
        self._tokens = list(_tokenize(text))
        self._index = 0
        self._end = len(text)
        self._seen: dict[str, int] = {}

    def _peek(self) -> Optional[_Token]:
        return self._tokens[self._index] if self._index < len(self._tokens) else None

    def _next(self, expected: str) -> _Token:
        token = self._peek()
        if token is None:
            raise NewickError(f"Unexpected end of input, expected {expected}", self._end)
        self._index += 1
        return token

    def _expect(self, punct: str) -> _Token:
        token = self._next(repr(punct))
        if token.kind != "punct" or token.text != punct:
            raise NewickError(f"Expected {punct!r}, found {token.text!r}", token.position)
        return token

    def tree(self) -> TreeNode:
        root = self.subtree()
        self._expect(";")
        trailing = self._peek()
        if trailing is not None:
            raise NewickError("Unexpected text after ';'", trailing.position)
        return root

    def _leaf(self, token: _Token) -> TreeNode:
        if token.kind == "label":
            if token.text in self._seen:
                raise NewickError(f"Duplicate leaf label {token.text!r}", token.position)
            self._seen[token.text] = token.position
            return TreeNode.leaf(token.text)
        if token.text == ":":
            raise NewickError("Branch lengths are not supported", token.position)
        raise NewickError(f"Expected a leaf label or '(', found {token.text!r}", token.position)

    def subtree(self) -> TreeNode:
        # Each open frame is an unclosed "(" and the children read so far.
        frames: list[tuple[_Token, list[TreeNode]]] = []
        while True:
            token = self._next("a leaf label or '('")
            if token.kind == "punct" and token.text == "(":
                frames.append((token, []))
                continue

            node = self._leaf(token)
            while True:
                if not frames:
                    return node
                opener, children = frames[-1]
                children.append(node)
                separator = self._next("',' or ')'")
                if separator.kind == "punct" and separator.text == ",":
                    break
                if separator.kind != "punct" or separator.text != ")":
                    raise NewickError(
                        f"Expected ',' or ')', found {separator.text!r}", separator.position
                    )
                frames.pop()
                if len(children) != 2:
                    raise NewickError(
                        f"Internal node has {len(children)} children; only binary trees are supported",
                        opener.position,
                    )
                after = self._peek()
                if after is not None and after.kind == "label":
                    raise NewickError("Internal node names are not supported", after.position)
                node = TreeNode.join(*children)


def parse_tree(text: str) -> TreeNode:
    """Parse one Newick tree terminated by ``;``.

    Raises
    ------
    NewickError
        On syntax errors, non-binary nodes and duplicate leaf labels.
    """
    return _Reader(text).tree()


def render_tree(root: TreeNode) -> str:
    """Render ``root`` in the dialect above, children left to right."""
    parts: list[str] = []
    stack: list[TreeNode | str] = [root]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            parts.append(item)
        elif item.is_leaf:
            parts.append(item.label or "")
        else:
            left, right = item.children
            stack.extend((")", right, ",", left))
            parts.append("(")
    return "".join(parts) + ";"


__all__ = ["NewickError", "TreeNode", "parse_tree", "render_tree"]
