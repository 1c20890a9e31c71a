"""Cubic graphs without power-of-two cycles: constructions and certificates."""

from .cycles import (
    CycleSpectrum,
    Pow2Result,
    count_cycles_by_length,
    find_cycle_of_length,
    girth,
    has_cycle_of_length,
    is_pow2_cycle_free,
    iter_cycles,
)
from .formats import encode_graph6, parse_graph6, to_dot
from .graph import Graph, RotationSystem, bfs_distances, genus, graph_from_edge_list, trace_faces
from .replacement import Gadget, InflationPlan, h7, h15, identity_gadget, inflate, k3_gadget, project_cycle
from .structure import are_isomorphic, canonical_form, is_bipartite, is_connected, vertex_connectivity_at_least

__all__ = [
    "CycleSpectrum",
    "Gadget",
    "Graph",
    "InflationPlan",
    "Pow2Result",
    "RotationSystem",
    "are_isomorphic",
    "bfs_distances",
    "canonical_form",
    "count_cycles_by_length",
    "encode_graph6",
    "find_cycle_of_length",
    "genus",
    "girth",
    "graph_from_edge_list",
    "h15",
    "h7",
    "has_cycle_of_length",
    "identity_gadget",
    "inflate",
    "is_bipartite",
    "is_connected",
    "is_pow2_cycle_free",
    "iter_cycles",
    "k3_gadget",
    "parse_graph6",
    "project_cycle",
    "to_dot",
    "trace_faces",
    "vertex_connectivity_at_least",
]
