"""Neighbour-sum-distinguishing edge-weightings with local constraints.

The main entry point is ``auto_weight``, which picks a construction per
connected component and returns a weighting with a certificate of the
guarantees it meets.  ``verify`` checks any weighting independently and the
``oracle`` module solves small cases exactly.
"""
from __future__ import annotations

from .bipartite import bip_four, bip_six, bip_three_weighting, bip_two_local
from .bounded import weight_max_deg4, weight_max_deg5, weight_subcubic
from .dispatch import DispatchCertificate, auto_weight
from .errors import GraphError, InvariantViolation, ParseError, SearchExhausted
from .general7 import run_general7
from .graph import EdgeWeighting, Graph, parse_edge_list, sigma
from .oracle import ConstraintProfile, exact_min_k, exists_weighting
from .ordering import VertexOrdering, check_ordering, good_ordering
from .verify import check_distinguishing, check_relaxed, check_threshold, report

__all__ = [
    "ConstraintProfile", "DispatchCertificate", "EdgeWeighting", "Graph", "GraphError",
    "InvariantViolation", "ParseError", "SearchExhausted", "VertexOrdering",
    "auto_weight", "bip_four", "bip_six", "bip_three_weighting", "bip_two_local",
    "check_distinguishing", "check_ordering", "check_relaxed", "check_threshold",
    "exact_min_k", "exists_weighting", "good_ordering", "parse_edge_list", "report",
    "run_general7", "sigma", "weight_max_deg4", "weight_max_deg5", "weight_subcubic",
]
__version__ = "0.1.0"
