"""Monitoring predicates, MEG-set checking, and mandatory vertices.

A vertex pair (a, b) monitors an edge e when every shortest a-b path goes
through e; equivalently, deleting e strictly increases d(a, b). A set S is
a monitoring edge-geodetic (MEG) set when every edge is monitored by some
pair inside S. All predicates here require a connected graph on at least
two vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotConnectedError
from .graph_core import (DistanceMatrix, Graph, all_pairs_distances,
                         bfs_distances, is_connected, iter_bits, vertex_set)

# Path counts saturate at this cap (64-bit signed max). A saturated count
# means "this many or more", so any predicate touching one is indeterminate.
SATURATION_CAP = 2**63 - 1


@dataclass(frozen=True)
class MegSetCheck:
    """Outcome of an MEG-set test; carries one uncovered edge on failure."""

    ok: bool
    uncovered: tuple[int, int] | None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class Bounds:
    """Sandwich bounds on the MEG number of a connected graph."""

    lower: int
    upper: int
    mandatory: tuple[int, ...]
    non_cut: tuple[int, ...]


def require_meg_input(G: Graph) -> None:
    """Reject graphs the monitoring semantics is not defined for."""
    if G.n < 2:
        raise NotConnectedError("need at least two vertices")
    if not is_connected(G):
        raise NotConnectedError("graph must be connected")


def _check_query(G: Graph, a: int, b: int, edge: tuple[int, int]) -> None:
    if not (0 <= a < G.n and 0 <= b < G.n):
        raise ValueError("vertex id out of range")
    if a == b:
        raise ValueError("monitoring pair must be two distinct vertices")
    if not G.has_edge(*edge):
        raise ValueError(f"edge {edge} not in graph")


def monitors(G: Graph, a: int, b: int, edge: tuple[int, int]) -> bool:
    """Ground-truth predicate: does deleting ``edge`` increase d(a, b)?"""
    require_meg_input(G)
    _check_query(G, a, b, edge)
    base = bfs_distances(G, a)[b]
    return bfs_distances(G, a, skip_edge=edge)[b] > base


def shortest_path_counts(
        G: Graph, cap: int = SATURATION_CAP
) -> tuple[DistanceMatrix, tuple[tuple[int, ...], ...]]:
    """Per-source shortest-path counts with saturating addition.

    Returns the distance matrix and a matrix ``counts`` where
    ``counts[s][t]`` is the number of shortest s-t paths, clipped at
    ``cap``. A clipped entry means "cap or more".
    """
    require_meg_input(G)
    dist_rows = []
    count_rows = []
    for s in range(G.n):
        dist = bfs_distances(G, s)
        sigma = [0] * G.n
        sigma[s] = 1
        # Counts accumulate in BFS-distance order; predecessors on shortest
        # paths are exactly the neighbors one hop closer to the source.
        for v in sorted((x for x in range(G.n) if x != s), key=lambda x: dist[x]):
            total = 0
            for w in G.adj[v]:
                if dist[w] + 1 == dist[v]:
                    total += sigma[w]
                    if total >= cap:
                        total = cap
                        break
            sigma[v] = total
        dist_rows.append(tuple(dist))
        count_rows.append(tuple(sigma))
    return DistanceMatrix(tuple(dist_rows)), tuple(count_rows)


def monitors_by_counting(G: Graph, dist: DistanceMatrix,
                         counts: tuple[tuple[int, ...], ...],
                         a: int, b: int, edge: tuple[int, int],
                         cap: int = SATURATION_CAP) -> bool | None:
    """Path-count route for the monitoring predicate.

    The edge (u, v) lies on every shortest a-b path iff exactly one
    orientation is distance-tight and the product of path counts through
    it equals the total a-b count. ``cap`` must match the cap the counts
    were computed with; any involved count at the cap means the true
    value may exceed it, so the verdict is None (indeterminate) and
    callers fall back to ``monitors``.
    """
    _check_query(G, a, b, edge)
    u, v = edge
    total = counts[a][b]
    d_ab = dist[a][b]
    if dist[a][u] + 1 + dist[v][b] == d_ab:
        through_a, through_b = u, v
    elif dist[a][v] + 1 + dist[u][b] == d_ab:
        through_a, through_b = v, u
    else:
        return False  # edge lies on no shortest a-b path
    c1 = counts[a][through_a]
    c2 = counts[through_b][b]
    if total >= cap or c1 >= cap or c2 >= cap:
        return None
    return c1 * c2 == total


def is_meg_set(G: Graph, members, dist: DistanceMatrix | None = None) -> MegSetCheck:
    """Check whether ``members`` monitors every edge of G.

    Iterates edges in sorted order; for each edge, deletion distances are
    computed from each member once, with early exit on the first
    monitoring pair. On failure the first uncovered edge is reported.
    """
    require_meg_input(G)
    S = vertex_set(members)
    if S and (S[0] < 0 or S[-1] >= G.n):
        raise ValueError("vertex id out of range")
    if dist is None:
        dist = all_pairs_distances(G)
    for u, v in G.edges():
        covered = False
        for a in S:
            row = bfs_distances(G, a, skip_edge=(u, v))
            base = dist[a]
            for b in S:
                if b <= a:
                    continue
                if row[b] > base[b]:
                    covered = True
                    break
            if covered:
                break
        if not covered:
            return MegSetCheck(False, (u, v))
    return MegSetCheck(True, None)


def is_mandatory(G: Graph, v: int) -> tuple[bool, int | None]:
    """Membership of v in every MEG set, with a witness neighbor.

    v is mandatory iff some neighbor u exists such that every induced
    2-path u-v-x closes into a 4-cycle u-v-x-w (w != v adjacent to both
    u and x). No such x at all counts as satisfied.
    """
    require_meg_input(G)
    if not 0 <= v < G.n:
        raise ValueError("vertex id out of range")
    masks = G.adj_masks
    v_bit = 1 << v
    for u in G.adj[v]:
        mask_u = masks[u]
        rest = masks[v] & ~mask_u & ~(1 << u)
        ok = True
        for x in iter_bits(rest):
            if not (mask_u & masks[x] & ~v_bit):
                ok = False
                break
        if ok:
            return True, u
    return False, None


def mandatory_vertices(G: Graph) -> tuple[int, ...]:
    """All vertices contained in every MEG set of G."""
    require_meg_input(G)
    return tuple(v for v in range(G.n) if is_mandatory(G, v)[0])


def bounds(G: Graph) -> Bounds:
    """Mandatory-vertex lower bound and non-cut-vertex upper bound."""
    from .graph_core import articulation_points

    require_meg_input(G)
    man = mandatory_vertices(G)
    cut = set(articulation_points(G))
    non_cut = tuple(v for v in range(G.n) if v not in cut)
    return Bounds(lower=len(man), upper=len(non_cut),
                  mandatory=man, non_cut=non_cut)
