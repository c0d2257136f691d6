"""Tests for label-based quartet topologies."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quartx.core.bitlabel import Label
from quartx.core.errors import TopologyError, TopologyTieError
from quartx.core.topology import (
    Pairing,
    Quartet,
    agree,
    format_split,
    pairing_from_scores,
    prefix_topology,
    suffix_topology,
)

FIGURE_QUARTET = "0111,0110,1000,1001"


@st.composite
def quartets(draw, max_width: int = 12):
    width = draw(st.integers(min_value=2, max_value=max_width))
    values = draw(
        st.lists(
            st.integers(min_value=0, max_value=(1 << width) - 1),
            min_size=4,
            max_size=4,
            unique=True,
        )
    )
    return Quartet.of(*(Label(width, value) for value in values))


@pytest.mark.parametrize(
    ("labels", "expected"),
    [
        (FIGURE_QUARTET, Pairing.P01_23),
        ("00,01,10,11", Pairing.P01_23),
        ("000,001,010,100", Pairing.P01_23),
    ],
)
def test_prefix_topology_examples(labels, expected):
    assert prefix_topology(Quartet.parse(labels)) is expected


@pytest.mark.parametrize(
    ("labels", "expected"),
    [
        (FIGURE_QUARTET, Pairing.P03_12),
        ("00,10,01,11", Pairing.P01_23),
        ("000,100,010,001", Pairing.P01_23),
    ],
)
def test_suffix_topology_examples(labels, expected):
    assert suffix_topology(Quartet.parse(labels)) is expected


def test_agree_examples():
    assert agree(Quartet.parse(FIGURE_QUARTET)) is False
    assert agree(Quartet.parse("00,01,10,11")) is False
    assert agree(Quartet.parse("0000,0001,0010,0110")) is True


def test_mirrored_quartet_disagrees():
    # lcs(0011,1101) = lcs(0010,1100) = 1 while every other suffix is 0.
    quartet = Quartet.parse("0011,0010,1100,1101")
    assert prefix_topology(quartet) is Pairing.P01_23
    assert suffix_topology(quartet) is Pairing.P03_12
    assert agree(quartet) is False


def test_format_split_uses_tuple_order():
    quartet = Quartet.parse(FIGURE_QUARTET)
    assert format_split(quartet, prefix_topology(quartet)) == "{0111,0110}|{1000,1001}"
    assert format_split(quartet, suffix_topology(quartet)) == "{0111,1001}|{0110,1000}"


@pytest.mark.parametrize(
    "text",
    ["00,01,10", "00,01,10,10", "00,01,10,111", "00,01,10,1x"],
)
def test_invalid_quartets_are_rejected(text):
    with pytest.raises(ValueError):
        Quartet.parse(text)


def test_quartet_rejects_duplicates_with_topology_error():
    with pytest.raises(TopologyError):
        Quartet.parse("00,01,01,11")


def test_of_pair_covers_every_pair():
    assert Pairing.of_pair(0, 1) is Pairing.P01_23
    assert Pairing.of_pair(2, 3) is Pairing.P01_23
    assert Pairing.of_pair(1, 3) is Pairing.P02_13
    assert Pairing.of_pair(2, 1) is Pairing.P03_12
    with pytest.raises(TopologyError):
        Pairing.of_pair(1, 1)


def test_pairing_from_scores_raises_on_tie():
    with pytest.raises(TopologyTieError):
        pairing_from_scores([1, 1, 0, 0, 0, 0])


@given(quartets(), st.permutations(range(4)))
def test_topologies_are_permutation_covariant(quartet, perm):
    reordered = quartet.permuted(perm)
    assert prefix_topology(reordered) is prefix_topology(quartet).permuted(perm)
    assert suffix_topology(reordered) is suffix_topology(quartet).permuted(perm)
    assert agree(reordered) == agree(quartet)


def test_topologies_are_well_defined_for_every_quartet_at_n4():
    labels = [Label(4, value) for value in range(16)]
    for combo in itertools.combinations(labels, 4):
        quartet = Quartet(combo)
        assert isinstance(prefix_topology(quartet), Pairing)
        assert isinstance(suffix_topology(quartet), Pairing)
