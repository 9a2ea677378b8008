"""Summary quality metrics: node reduction, top-t% app-utility, losslessness."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .centrality import NodeCentrality
from .graph import Graph
from .summary import DEFAULT_RECONSTRUCT_CAP, Summary, reconstruct


def reduction_in_nodes(s: Summary) -> float:
    """(n - number of supernodes) / n; 0 for the identity summary."""
    if s.n == 0:
        raise ValueError("reduction undefined for an empty summary")
    return (s.n - s.num_supernodes) / s.n


@dataclass(frozen=True)
class AppUtilityReport:
    centrality_kind: str
    t_percent: float
    v_t_size: int
    app_utility: float


def top_nodes(c: NodeCentrality, t_percent: float) -> list[int]:
    """Top ceil(t% * n) nodes by score, ties broken by ascending id."""
    if not 0.0 < t_percent <= 100.0:
        raise ValueError("t_percent must lie in (0, 100]")
    n = len(c)
    k = math.ceil(t_percent / 100.0 * n)
    order = sorted(range(n), key=lambda u: (-c.scores[u], u))
    return order[:k]


def app_utility(s: Summary, c: NodeCentrality, t_percent: float) -> AppUtilityReport:
    """Mean of 1/|S(v)| over the top-t% central nodes.

    1.0 means every top node sits alone in its supernode; crowding any of
    them lowers the value.
    """
    if len(c) != s.n:
        raise ValueError("centrality length does not match summary")
    top = top_nodes(c, t_percent)
    total = math.fsum(1.0 / s.size(s.supernode_of(v)) for v in top)
    return AppUtilityReport(c.kind, t_percent, len(top), total / len(top))


@dataclass(frozen=True)
class LosslessnessReport:
    lossless: bool
    missing_edges: list[tuple[int, int]]  # in the graph, absent after reconstruction
    spurious_edges: list[tuple[int, int]]  # reconstructed but not in the graph

    MAX_LISTED = 10


def verify_lossless(
    g: Graph, s: Summary, max_edges: int = DEFAULT_RECONSTRUCT_CAP
) -> LosslessnessReport:
    """Reconstruct the summary and compare edge sets with the original."""
    if s.n != g.n:
        raise ValueError("summary and graph disagree on node count")
    rebuilt = reconstruct(s, max_edges=max_edges)
    original = set(g.edges())
    restored = set(rebuilt.edges())
    if original == restored:
        return LosslessnessReport(True, [], [])
    missing = sorted(original - restored)[: LosslessnessReport.MAX_LISTED]
    spurious = sorted(restored - original)[: LosslessnessReport.MAX_LISTED]
    return LosslessnessReport(False, missing, spurious)
