"""Isomorph-free generation of connected regular graphs with spectral pruning."""

from .canon import canonical_graph, canonical_graph6, is_isomorphic
from .engine import (
    HOOKS,
    SearchResult,
    SearchSpec,
    default_jobs,
    effective_girth,
    enumerate_graphs,
    find_extremal,
)

enumerate = enumerate_graphs
