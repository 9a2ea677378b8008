"""Summary graphs: supernode partitions plus superedges, and their disk format.

A summary directory holds:

    membership.txt   "node_id supernode_id" per node
    superedges.txt   "sid sid" canonical pairs, self-pairs allowed
    kinds.txt        "sid kind" (lossless summaries only)
    meta.txt         "key value" records (algorithm, parameters, stats)

Reconstruction expands each cross superedge to a complete bipartite graph
and each self superedge to a clique.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from . import graph as graphmod
from .errors import CapExceededError, GraphSumError
from .graph import Graph

KIND_SINGLETON = "singleton"
KIND_CLIQUE = "clique"
KIND_INDEPENDENT_SET = "independent_set"
VALID_KINDS = (KIND_SINGLETON, KIND_CLIQUE, KIND_INDEPENDENT_SET)

DEFAULT_RECONSTRUCT_CAP = 50_000_000


@dataclass(eq=False)
class Summary:
    """Partition of the nodes into supernodes plus a superedge set.

    membership[u] is the supernode id of node u; ids are dense, numbered
    by first appearance over nodes 0..n-1. kinds is present only for
    lossless summaries (one tag per supernode). Treat instances as
    immutable once built: queries never mutate them and share them freely.
    """

    membership: np.ndarray = field(repr=False)
    supernodes: list[list[int]] = field(repr=False)
    superedges: set[tuple[int, int]] = field(repr=False)
    kinds: list[str] | None = None

    def __post_init__(self):
        self.membership = np.asarray(self.membership, dtype=np.int64)
        k = len(self.supernodes)
        if self.membership.size and (
            self.membership.min() < 0 or self.membership.max() >= k
        ):
            raise ValueError("membership refers to an unknown supernode")
        if sum(len(s) for s in self.supernodes) != len(self.membership):
            raise ValueError("supernodes do not partition the node set")
        for a, b in self.superedges:
            if not (0 <= a <= b < k):
                raise ValueError(f"superedge ({a},{b}) is not canonical")
        if self.kinds is not None:
            if len(self.kinds) != k:
                raise ValueError("one kind tag per supernode required")
            for kind in self.kinds:
                if kind not in VALID_KINDS:
                    raise ValueError(f"unknown supernode kind {kind!r}")

    @property
    def n(self) -> int:
        return len(self.membership)

    @property
    def num_supernodes(self) -> int:
        return len(self.supernodes)

    @property
    def num_superedges(self) -> int:
        return len(self.superedges)

    @property
    def is_lossless(self) -> bool:
        return self.kinds is not None

    def size(self, sid: int) -> int:
        return len(self.supernodes[sid])

    def members(self, sid: int) -> list[int]:
        return self.supernodes[sid]

    def supernode_of(self, u: int) -> int:
        return int(self.membership[u])

    def has_self_loop(self, sid: int) -> bool:
        return (sid, sid) in self.superedges

    def super_adjacency(self) -> list[list[int]]:
        """Sorted cross-neighbor lists over supernodes; self-loops excluded."""
        adj: list[list[int]] = [[] for _ in range(self.num_supernodes)]
        for a, b in self.superedges:
            if a != b:
                adj[a].append(b)
                adj[b].append(a)
        for row in adj:
            row.sort()
        return adj

    def implied_edge_count(self) -> int:
        """Number of edges a reconstruction would materialize."""
        total = 0
        for a, b in self.superedges:
            if a == b:
                k = self.size(a)
                total += k * (k - 1) // 2
            else:
                total += self.size(a) * self.size(b)
        return total


def partition_summary(
    labels: Sequence[int],
    superedges: set[tuple[int, int]],
    kinds_by_group: dict[int, str] | None = None,
) -> Summary:
    """Build a Summary from raw per-node labels, renumbering supernodes densely.

    Labels are renumbered by first appearance over nodes 0..n-1; superedges
    and kind tags must already refer to the dense numbering produced by
    `dense_labels` (use that helper first when starting from a UnionFind).
    """
    membership = np.asarray(labels, dtype=np.int64)
    k = int(membership.max()) + 1 if membership.size else 0
    supernodes: list[list[int]] = [[] for _ in range(k)]
    for u, sid in enumerate(membership.tolist()):
        supernodes[sid].append(u)
    kinds = None
    if kinds_by_group is not None:
        kinds = [kinds_by_group[sid] for sid in range(k)]
    return Summary(membership, supernodes, superedges, kinds)


def dense_labels(groups: Iterable[Sequence[int]], n: int) -> list[int]:
    """Per-node dense labels from disjoint groups, numbered by first appearance."""
    raw = [-1] * n
    for gid, members in enumerate(groups):
        for u in members:
            if raw[u] != -1:
                raise ValueError(f"node {u} assigned to two supernodes")
            raw[u] = gid
    if any(x == -1 for x in raw):
        raise ValueError("groups do not cover every node")
    relabel: dict[int, int] = {}
    out = []
    for u in range(n):
        r = raw[u]
        if r not in relabel:
            relabel[r] = len(relabel)
        out.append(relabel[r])
    return out


def reconstruct(s: Summary, max_edges: int = DEFAULT_RECONSTRUCT_CAP) -> Graph:
    """Expand a summary back into a concrete Graph.

    Refuses when the implied edge count exceeds max_edges.
    """
    implied = s.implied_edge_count()
    if implied > max_edges:
        raise CapExceededError(
            f"reconstruction would materialize {implied} edges (cap {max_edges})"
        )
    edges: list[tuple[int, int]] = []
    for a, b in s.superedges:
        if a == b:
            members = s.members(a)
            for i in range(len(members)):
                for j in range(i + 1, len(members)):
                    edges.append((members[i], members[j]))
        else:
            for u in s.members(a):
                for v in s.members(b):
                    edges.append((u, v))
    return graphmod.from_edges(s.n, edges)


# -- directory round trip ---------------------------------------------------


def save_summary(s: Summary, outdir: str | Path, meta: dict[str, object] | None = None) -> None:
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    with open(out / "membership.txt", "w", encoding="ascii") as fh:
        for u, sid in enumerate(s.membership.tolist()):
            fh.write(f"{u} {sid}\n")
    with open(out / "superedges.txt", "w", encoding="ascii") as fh:
        for a, b in sorted(s.superedges):
            fh.write(f"{a} {b}\n")
    if s.kinds is not None:
        with open(out / "kinds.txt", "w", encoding="ascii") as fh:
            for sid, kind in enumerate(s.kinds):
                fh.write(f"{sid} {kind}\n")
    if meta is not None:
        write_meta(meta, out / "meta.txt")


def load_summary(indir: str | Path) -> Summary:
    src = Path(indir)
    membership_pairs = _read_pairs(src / "membership.txt")
    n = len(membership_pairs)
    membership = np.zeros(n, dtype=np.int64)
    for node, sid in membership_pairs:
        if not 0 <= node < n:
            raise GraphSumError(f"membership.txt: node id {node} out of range")
        membership[node] = sid
    superedges = {
        (min(a, b), max(a, b)) for a, b in _read_pairs(src / "superedges.txt")
    }
    kinds = None
    kinds_path = src / "kinds.txt"
    if kinds_path.exists():
        k = int(membership.max()) + 1 if n else 0
        kinds = [""] * k
        with open(kinds_path, "r", encoding="ascii") as fh:
            for line in fh:
                sid_str, kind = line.split()
                kinds[int(sid_str)] = kind
        if "" in kinds:
            raise GraphSumError("kinds.txt does not tag every supernode")
    k = int(membership.max()) + 1 if n else 0
    supernodes: list[list[int]] = [[] for _ in range(k)]
    for u, sid in enumerate(membership.tolist()):
        supernodes[sid].append(u)
    return Summary(membership, supernodes, superedges, kinds)


def write_meta(meta: dict[str, object], path: str | Path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for key, value in meta.items():
            if isinstance(value, float):
                value = repr(value)
            fh.write(f"{key} {value}\n")


def read_meta(path: str | Path) -> dict[str, str]:
    out: dict[str, str] = {}
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            key, _, value = line.rstrip("\n").partition(" ")
            out[key] = value
    return out


def _read_pairs(path: Path) -> list[tuple[int, int]]:
    pairs = []
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            a, b = line.split()
            pairs.append((int(a), int(b)))
    return pairs
