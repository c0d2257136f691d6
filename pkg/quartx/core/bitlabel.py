"""Fixed-width bit labels and the prefix/suffix primitives built on them.

A label is an ``n`` character string over ``{0,1}``. The first written
character is the most significant of the ``n`` bits, so the prefix-order rank
of a label is simply its integer value and the suffix-order rank is the value
of the reversed string.

The integer kernels :func:`lcp_bits` and :func:`lcs_bits` work on raw ints and
are what the enumeration loops call; the :class:`Label` level functions
validate widths and delegate to them.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import LabelError

MIN_WIDTH = 2
MAX_WIDTH = 64


class LeafOrder(str, Enum):
    """Left-to-right ordering of the leaves of a complete binary tree."""

    PREFIX = "prefix"
    SUFFIX = "suffix"


def _check_width(width: int) -> None:
    if not (MIN_WIDTH <= width <= MAX_WIDTH):
        raise LabelError(
            f"Label width must be between {MIN_WIDTH} and {MAX_WIDTH}, got {width}."
        )


@dataclass(frozen=True, order=True)
class Label:
    """An ``width``-bit label; ``bits`` holds the integer encoding."""

    width: int
    bits: int

    def __post_init__(self) -> None:
        _check_width(self.width)
        if not (0 <= self.bits < (1 << self.width)):
            raise LabelError(
                f"Value {self.bits} does not fit in {self.width} bits."
            )

    def render(self) -> str:
        return format(self.bits, f"0{self.width}b")

    def __str__(self) -> str:
        return self.render()


def parse_label(text: str, n: int) -> Label:
    """Parse ``text`` as an ``n``-bit label.

    Raises
    ------
    LabelError
        If ``n`` is outside the supported range, ``text`` has the wrong length
        or contains characters other than ``0`` and ``1``.
    """
    _check_width(n)
    if len(text) != n:
        raise LabelError(f"Label {text!r} has length {len(text)}, expected {n}.")
    bad = next((char for char in text if char not in "01"), None)
    if bad is not None:
        raise LabelError(f"Label {text!r} contains illegal character {bad!r}.")
    return Label(width=n, bits=int(text, 2))


######################################################################
# Integer kernels
######################################################################


def lcp_bits(x: int, y: int, n: int) -> int:
    """Longest common prefix length of two ``n``-bit integers."""
    return n - (x ^ y).bit_length()


def lcs_bits(x: int, y: int, n: int) -> int:
    """Longest common suffix length of two ``n``-bit integers."""
    diff = x ^ y
    if not diff:
        return n
    return (diff & -diff).bit_length() - 1


def reverse_bits(x: int, n: int) -> int:
    return int(format(x, f"0{n}b")[::-1], 2)


######################################################################
# Label operations
######################################################################


def _same_width(x: Label, y: Label) -> int:
    if x.width != y.width:
        raise LabelError(f"Width mismatch: {x.width} vs {y.width}.")
    return x.width


def lcp(x: Label, y: Label) -> int:
    """Length of the longest common prefix of ``x`` and ``y``."""
    return lcp_bits(x.bits, y.bits, _same_width(x, y))


def lcs(x: Label, y: Label) -> int:
    """Length of the longest common suffix of ``x`` and ``y``."""
    return lcs_bits(x.bits, y.bits, _same_width(x, y))


def xor(x: Label, y: Label) -> Label:
    return Label(width=_same_width(x, y), bits=x.bits ^ y.bits)


def reverse(x: Label) -> Label:
    return Label(width=x.width, bits=reverse_bits(x.bits, x.width))


def leaf_index(x: Label, order: LeafOrder) -> int:
    """0-based left-to-right leaf position of ``x`` in the ``order`` tree."""
    if LeafOrder(order) is LeafOrder.PREFIX:
        return x.bits
    return reverse_bits(x.bits, x.width)


def label_from_index(position: int, n: int, order: LeafOrder) -> Label:
    """Inverse of :func:`leaf_index`: the label sitting at ``position``."""
    _check_width(n)
    if not (0 <= position < (1 << n)):
        raise LabelError(f"Leaf position {position} out of range for n={n}.")
    if LeafOrder(order) is LeafOrder.PREFIX:
        return Label(width=n, bits=position)
    return Label(width=n, bits=reverse_bits(position, n))


__all__ = [
    "Label",
    "LeafOrder",
    "MAX_WIDTH",
    "MIN_WIDTH",
    "label_from_index",
    "lcp",
    "lcp_bits",
    "lcs",
    "lcs_bits",
    "leaf_index",
    "parse_label",
    "reverse",
    "reverse_bits",
    "xor",
]
