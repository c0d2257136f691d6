"""Label-based quartet topologies in the prefix and suffix trees.

In the prefix tree the depth of the lowest common ancestor of two leaves is
the length of their longest common prefix, so the induced quartet pairs the
two labels sharing the longest prefix. The suffix tree is the mirror image.
Both are decided here straight from the labels in O(n) per quartet.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .bitlabel import Label, lcp_bits, lcs_bits, parse_label
from .errors import TopologyError, TopologyTieError

# Fixed order of the six index pairs; every score vector follows it.
PAIR_ORDER: tuple[tuple[int, int], ...] = (
    (0, 1),
    (0, 2),
    (0, 3),
    (1, 2),
    (1, 3),
    (2, 3),
)


class Pairing(str, Enum):
    """The three splits of an ordered 4-tuple into two pairs."""

    P01_23 = "01|23"
    P02_13 = "02|13"
    P03_12 = "03|12"

    @property
    def pairs(self) -> tuple[tuple[int, int], tuple[int, int]]:
        left, right = self.value.split("|")
        return (int(left[0]), int(left[1])), (int(right[0]), int(right[1]))

    @property
    def score_slots(self) -> tuple[int, int]:
        """Positions of the two pairs inside :data:`PAIR_ORDER`."""
        first, second = self.pairs
        return PAIR_ORDER.index(first), PAIR_ORDER.index(second)

    @classmethod
    def of_pair(cls, i: int, j: int) -> "Pairing":
        """Return the pairing in which ``i`` and ``j`` sit together."""
        if i == j or not ({i, j} <= {0, 1, 2, 3}):
            raise TopologyError(f"Invalid index pair ({i}, {j}).")
        pair = {i, j}
        if 0 not in pair:
            pair = {0, 1, 2, 3} - pair
        partner = max(pair)
        return {1: cls.P01_23, 2: cls.P02_13, 3: cls.P03_12}[partner]

    def permuted(self, perm: Sequence[int]) -> "Pairing":
        """Pairing of the reordered tuple whose position ``p`` holds old index ``perm[p]``."""
        inverse = [0] * 4
        for position, old_index in enumerate(perm):
            inverse[old_index] = position
        (a, b), _ = self.pairs
        return Pairing.of_pair(inverse[a], inverse[b])


def pairing_from_scores(scores: Sequence[int]) -> Pairing:
    """Pick the pairing whose best pair score is strictly maximal.

    ``scores`` holds one value per entry of :data:`PAIR_ORDER`.
    """
    totals = {
        pairing: max(scores[pairing.score_slots[0]], scores[pairing.score_slots[1]])
        for pairing in Pairing
    }
    best = max(totals.values())
    winners = [pairing for pairing, total in totals.items() if total == best]
    if len(winners) > 1:
        raise TopologyTieError(
            f"Pairings {', '.join(w.value for w in winners)} tie at score {best}."
        )
    return winners[0]


@dataclass(frozen=True)
class Quartet:
    """An ordered 4-tuple of distinct labels of equal width."""

    labels: tuple[Label, Label, Label, Label]

    def __post_init__(self) -> None:
        if len(self.labels) != 4:
            raise TopologyError(f"A quartet needs 4 labels, got {len(self.labels)}.")
        widths = {label.width for label in self.labels}
        if len(widths) != 1:
            raise TopologyError(f"Quartet labels have mixed widths {sorted(widths)}.")
        if len(set(self.labels)) != 4:
            raise TopologyError("Quartet labels must be pairwise distinct.")

    @classmethod
    def of(cls, *labels: Label) -> "Quartet":
        return cls(tuple(labels))  # type: ignore[arg-type]

    @classmethod
    def parse(cls, text: str) -> "Quartet":
        """Parse a comma separated list of four bit strings."""
        parts = [part.strip() for part in text.split(",")]
        if len(parts) != 4:
            raise TopologyError(f"Expected 4 comma separated labels, got {len(parts)}.")
        width = len(parts[0])
        return cls(tuple(parse_label(part, width) for part in parts))  # type: ignore[arg-type]

    @property
    def width(self) -> int:
        return self.labels[0].width

    @property
    def bits(self) -> tuple[int, int, int, int]:
        return tuple(label.bits for label in self.labels)  # type: ignore[return-value]

    def permuted(self, perm: Sequence[int]) -> "Quartet":
        return Quartet(tuple(self.labels[index] for index in perm))  # type: ignore[arg-type]


def prefix_scores(values: Sequence[int], n: int) -> list[int]:
    return [lcp_bits(values[i], values[j], n) for i, j in PAIR_ORDER]


def suffix_scores(values: Sequence[int], n: int) -> list[int]:
    return [lcs_bits(values[i], values[j], n) for i, j in PAIR_ORDER]


def prefix_topology(q: Quartet) -> Pairing:
    return pairing_from_scores(prefix_scores(q.bits, q.width))


def suffix_topology(q: Quartet) -> Pairing:
    return pairing_from_scores(suffix_scores(q.bits, q.width))


def agree(q: Quartet) -> bool:
    """True when the prefix and suffix trees induce the same split on ``q``."""
    return prefix_topology(q) is suffix_topology(q)


def agree_bits(values: Sequence[int], n: int) -> bool:
    """:func:`agree` on raw integers, skipping validation."""
    return pairing_from_scores(prefix_scores(values, n)) is pairing_from_scores(
        suffix_scores(values, n)
    )


def format_split(q: Quartet, pairing: Pairing) -> str:
    """Render ``pairing`` as ``{a,b}|{c,d}`` using the quartet's labels."""
    (a, b), (c, d) = pairing.pairs
    labels = [label.render() for label in q.labels]
    return f"{{{labels[a]},{labels[b]}}}|{{{labels[c]},{labels[d]}}}"


__all__ = [
    "PAIR_ORDER",
    "Pairing",
    "Quartet",
    "agree",
    "agree_bits",
    "format_split",
    "pairing_from_scores",
    "prefix_scores",
    "prefix_topology",
    "suffix_scores",
    "suffix_topology",
]
