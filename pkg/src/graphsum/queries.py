"""Triangle, Pagerank and shortest-path queries answered on a lossless
summary directly, without reconstructing the original graph.

Triangles come in three shapes: all three corners inside one clique
supernode (a), an edge inside a clique plus one outside corner (b), and
one corner in each of three mutually adjacent supernodes (c). Pagerank
runs on supernode totals (every member of a supernode provably holds the
same score). Shortest paths reduce to BFS over the summary plus a
constant-time same-supernode case split.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterator

import numpy as np

from .centrality import DEFAULT_DAMPING, DEFAULT_MAX_ITER, DEFAULT_TOL
from .errors import UnsupportedSummaryError
from .summary import KIND_CLIQUE, Summary


def _require_lossless(s: Summary) -> None:
    if s.kinds is None:
        raise UnsupportedSummaryError(
            "query needs a lossless summary with clique/IS kind tags"
        )


@dataclass(frozen=True)
class TriangleReport:
    count_a: int
    count_b: int
    count_c: int

    @property
    def total(self) -> int:
        return self.count_a + self.count_b + self.count_c


def _super_triangles(s: Summary) -> Iterator[tuple[int, int, int]]:
    """Triangles of the summary graph itself, self-superedges excluded.

    Degree-ordered neighbor intersection; each super-triangle appears once,
    ordered by ascending rank.
    """
    adj = s.super_adjacency()
    adj_sets = [set(row) for row in adj]
    rank = sorted(range(s.num_supernodes), key=lambda x: (len(adj[x]), x))
    pos = [0] * s.num_supernodes
    for i, x in enumerate(rank):
        pos[x] = i
    for x in range(s.num_supernodes):
        for y in adj[x]:
            if pos[y] <= pos[x]:
                continue
            small, large = (
                (adj_sets[x], adj_sets[y])
                if len(adj_sets[x]) <= len(adj_sets[y])
                else (adj_sets[y], adj_sets[x])
            )
            for z in small:
                if pos[z] > pos[y] and z in large:
                    yield x, y, z


def count_triangles(s: Summary) -> TriangleReport:
    """Triangle totals per type; the grand total equals the original graph's."""
    _require_lossless(s)
    kinds = s.kinds
    adj = s.super_adjacency()
    count_a = 0
    count_b = 0
    for x in range(s.num_supernodes):
        if kinds[x] != KIND_CLIQUE:
            continue
        k = s.size(x)
        count_a += k * (k - 1) * (k - 2) // 6
        pairs_in_x = k * (k - 1) // 2
        for y in adj[x]:
            count_b += pairs_in_x * s.size(y)
    count_c = 0
    for x, y, z in _super_triangles(s):
        count_c += s.size(x) * s.size(y) * s.size(z)
    return TriangleReport(count_a, count_b, count_c)


def enumerate_triangles(
    s: Summary, sink: Callable[[tuple[int, int, int]], None]
) -> None:
    """Stream every triangle of the original graph exactly once.

    Triples are sorted ascending; emission order is type a, then b, then c,
    each generator in ascending canonical order, so output is reproducible.
    """
    _require_lossless(s)
    kinds = s.kinds
    adj = s.super_adjacency()
    for x in range(s.num_supernodes):
        if kinds[x] == KIND_CLIQUE:
            for triple in combinations(s.members(x), 3):
                sink(triple)
    for x in range(s.num_supernodes):
        if kinds[x] != KIND_CLIQUE:
            continue
        for pair in combinations(s.members(x), 2):
            for y in adj[x]:
                for w in s.members(y):
                    sink(tuple(sorted((pair[0], pair[1], w))))
    for x, y, z in sorted(_super_triangles(s)):
        for u in s.members(x):
            for v in s.members(y):
                for w in s.members(z):
                    sink(tuple(sorted((u, v, w))))


@dataclass(frozen=True)
class SummaryPagerank:
    """Pagerank totals per supernode and the implied per-node scores."""

    supernode_scores: np.ndarray = field(repr=False)
    node_scores: np.ndarray = field(repr=False)
    iterations: int = 0
    converged: bool = True


def pagerank_on_summary(
    s: Summary,
    damping: float = DEFAULT_DAMPING,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> SummaryPagerank:
    """Power iteration over supernode totals.

    Every node inside supernode X has W(X) neighbors in the original graph:
    the members of X's neighbor supernodes, plus |X|-1 clique siblings.
    With start P0(X) = |X| and the update

        P(X) <- (1-damping)*|X| + damping * (|X| * sum_Y P(Y)/W(Y) [+ clique term])

    node scores P(X)/|X| match the per-node recurrence on the original
    graph exactly, iteration by iteration.
    """
    _require_lossless(s)
    if s.n == 0:
        raise ValueError("pagerank of an empty summary is undefined")
    if tol <= 0:
        raise ValueError("tol must be positive")
    k = s.num_supernodes
    sizes = np.array([s.size(x) for x in range(k)], dtype=np.float64)
    clique = np.array([kind == KIND_CLIQUE for kind in s.kinds], dtype=bool)
    adj = s.super_adjacency()
    flat = np.array(
        [y for row in adj for y in row], dtype=np.int64
    )
    src = np.repeat(
        np.arange(k, dtype=np.int64), np.array([len(row) for row in adj], dtype=np.int64)
    )

    w = np.zeros(k)
    if len(flat):
        w = np.bincount(src, weights=sizes[flat], minlength=k)
    w[clique] += sizes[clique] - 1.0

    inv_w = np.zeros(k)
    np.divide(1.0, w, out=inv_w, where=w > 0)

    scores = sizes.copy()
    converged = False
    iterations = 0
    for iterations in range(1, max_iter + 1):
        contrib = scores * inv_w
        pulled = (
            np.bincount(src, weights=contrib[flat], minlength=k)
            if len(flat)
            else np.zeros(k)
        )
        new = sizes * pulled
        new[clique] += (sizes[clique] - 1.0) * contrib[clique]
        new = (1.0 - damping) * sizes + damping * new
        delta = float(np.abs(new - scores).sum())
        scores = new
        if delta < tol:
            converged = True
            break
    node_scores = (scores / sizes)[s.membership]
    return SummaryPagerank(scores, node_scores, iterations, converged)


def shortest_path_length(s: Summary, u: int, v: int) -> float:
    """Unweighted shortest-path length between original nodes u and v.

    Same supernode: 1 inside a clique; 2 inside an independent set that has
    at least one neighbor (any neighbor is shared), else unreachable.
    Different supernodes: BFS distance between them in the summary, since a
    shortest path never revisits a supernode. Returns math.inf when
    unreachable.
    """
    _require_lossless(s)
    if not (0 <= u < s.n and 0 <= v < s.n):
        raise IndexError(f"node pair ({u},{v}) out of range for n={s.n}")
    if u == v:
        return 0
    su, sv = s.supernode_of(u), s.supernode_of(v)
    adj = s.super_adjacency()
    if su == sv:
        if s.kinds[su] == KIND_CLIQUE:
            return 1
        return 2 if adj[su] else math.inf
    dist = {su: 0}
    queue = deque([su])
    while queue:
        x = queue.popleft()
        if x == sv:
            return dist[x]
        for y in adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return math.inf
