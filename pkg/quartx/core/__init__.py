"""Labels, quartet topologies, event counting, closed forms and trees."""

from __future__ import annotations

from . import bitlabel, closed_forms, config, errors, events, topology, trees
from .bitlabel import Label, LeafOrder, parse_label
from .config import DEFAULT_CONFIG, EnumerationConfig
from .errors import QuartxError
from .topology import Pairing, Quartet, agree, prefix_topology, suffix_topology
from .trees import PhyloTree, build_tree, quartet_distance

__all__ = [
    "DEFAULT_CONFIG",
    "EnumerationConfig",
    "Label",
    "LeafOrder",
    "Pairing",
    "PhyloTree",
    "Quartet",
    "QuartxError",
    "agree",
    "bitlabel",
    "build_tree",
    "closed_forms",
    "config",
    "errors",
    "events",
    "parse_label",
    "prefix_topology",
    "quartet_distance",
    "suffix_topology",
    "topology",
    "trees",
]
