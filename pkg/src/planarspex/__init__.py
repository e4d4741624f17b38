"""Spectral extremal problems for planar and outerplanar graphs with a fixed edge count."""

__version__ = "0.1.0"

from .graph import Graph, VertexSetPair, disjoint_union, edge_counts, from_edge_list, is_connected, join, remove_isolated
from .canon import canonical_form
from .io import decode_graph6, encode_graph6
from .spectral import SpectralResult, hot_set, rayleigh_bounds, spectral_radius
from .planarity import GraphClass, is_outerplanar, is_planar
from .families import FamilySpec, build, closed_form_rho
from .patterns import PatternSpec, contains, is_f_free
from .search import SearchInstance, conjecture_scan, enumerate_graphs, extremal, star_crossover_scan

__all__ = [
    "Graph",
    "VertexSetPair",
    "from_edge_list",
    "join",
    "disjoint_union",
    "edge_counts",
    "is_connected",
    "remove_isolated",
    "canonical_form",
    "encode_graph6",
    "decode_graph6",
    "SpectralResult",
    "spectral_radius",
    "rayleigh_bounds",
    "hot_set",
    "GraphClass",
    "is_planar",
    "is_outerplanar",
    "FamilySpec",
    "build",
    "closed_form_rho",
    "PatternSpec",
    "contains",
    "is_f_free",
    "SearchInstance",
    "enumerate_graphs",
    "extremal",
    "conjecture_scan",
    "star_crossover_scan",
]
