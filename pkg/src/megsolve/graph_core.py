"""Immutable simple-graph substrate: construction, distances, connectivity.

Vertices are dense ids 0..n-1; each id carries an external string label.
Every set-valued result is a sorted id tuple so downstream output stays
deterministic. Edge deletion is never materialized: breadth-first searches
accept a ``skip_edge`` parameter instead of mutating the graph.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import EdgeListParseError, SelfLoopError

INF = math.inf

VertexSet = tuple[int, ...]  # sorted, deduplicated ids


def vertex_set(ids: Iterable[int]) -> tuple[int, ...]:
    """Normalize an id collection into a sorted deduplicated tuple."""
    return tuple(sorted(set(ids)))


class Graph:
    """Simple undirected graph, immutable after construction."""

    __slots__ = ("n", "m", "labels", "adj", "adj_masks",
                 "_label_ids", "_connected", "_articulation")

    def __init__(self, labels: Sequence[str], edges: Iterable[tuple[int, int]]):
        labels = tuple(str(x) for x in labels)
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate vertex labels")
        n = len(labels)
        neighbor_sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise SelfLoopError(labels[u])
            neighbor_sets[u].add(v)
            neighbor_sets[v].add(u)
        self.labels = labels
        self.n = n
        self.adj = tuple(tuple(sorted(s)) for s in neighbor_sets)
        self.m = sum(len(s) for s in neighbor_sets) // 2
        masks = []
        for s in neighbor_sets:
            mask = 0
            for w in s:
                mask |= 1 << w
            masks.append(mask)
        self.adj_masks = tuple(masks)
        self._label_ids = {lab: i for i, lab in enumerate(labels)}
        self._connected = None
        self._articulation = None

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and (self.adj_masks[u] >> v) & 1 == 1

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, in sorted order."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def closed_mask(self, v: int) -> int:
        return self.adj_masks[v] | (1 << v)

    def label(self, v: int) -> str:
        return self.labels[v]

    def id_of(self, label: str) -> int:
        try:
            return self._label_ids[label]
        except KeyError:
            raise KeyError(f"unknown vertex label {label!r}") from None

    def labels_of(self, ids: Iterable[int]) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in ids)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.labels == other.labels and self.adj == other.adj

    def __hash__(self):  # pragma: no cover - identity hashing is enough
        return id(self)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(edges: Iterable[tuple[str, str]],
                vertices: Sequence[str] | None = None) -> Graph:
    """Build a graph from label pairs.

    Ids are assigned in first-appearance order; an optional vertex list is
    registered first, which also allows isolated vertices. Duplicate edges
    collapse; self-loops are rejected.
    """
    order: list[str] = []
    index: dict[str, int] = {}

    def intern(label: str) -> int:
        if label not in index:
            index[label] = len(order)
            order.append(label)
        return index[label]

    if vertices is not None:
        for lab in vertices:
            intern(str(lab))
    id_edges = []
    for a, b in edges:
        a, b = str(a), str(b)
        if a == b:
            raise SelfLoopError(a)
        id_edges.append((intern(a), intern(b)))
    return Graph(order, id_edges)


def bfs_distances(G: Graph, source: int,
                  skip_edge: tuple[int, int] | None = None) -> list[float]:
    """Hop distances from ``source``; unreachable vertices get INF.

    ``skip_edge`` names one edge to ignore during traversal, giving the
    distances of the graph with that edge deleted.
    """
    if not 0 <= source < G.n:
        raise ValueError(f"source {source} out of range")
    su = sv = -1
    if skip_edge is not None:
        su, sv = skip_edge
        if not G.has_edge(su, sv):
            raise ValueError(f"skip_edge ({su}, {sv}) not in graph")
    dist: list[float] = [INF] * G.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        d = dist[v] + 1
        for w in G.adj[v]:
            if dist[w] is not INF:
                continue
            if skip_edge is not None and ((v == su and w == sv) or (v == sv and w == su)):
                continue
            dist[w] = d
            queue.append(w)
    return dist


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop distances; INF encodes unreachable."""

    dist: tuple[tuple[float, ...], ...]

    def __getitem__(self, v: int) -> tuple[float, ...]:
        return self.dist[v]

    @property
    def n(self) -> int:
        return len(self.dist)


def all_pairs_distances(G: Graph) -> DistanceMatrix:
    return DistanceMatrix(tuple(tuple(bfs_distances(G, s)) for s in range(G.n)))


def is_connected(G: Graph) -> bool:
    if G._connected is None:
        if G.n == 0:
            conn = True
        else:
            seen = 1
            frontier = 1
            masks = G.adj_masks
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    v = (f & -f).bit_length() - 1
                    f &= f - 1
                    nxt |= masks[v]
                frontier = nxt & ~seen
                seen |= frontier
            conn = seen == (1 << G.n) - 1
        G._connected = conn
    return G._connected


def connected_components(G: Graph) -> list[tuple[int, ...]]:
    """Components as sorted id tuples, ordered by smallest member."""
    comps = []
    seen = [False] * G.n
    for s in range(G.n):
        if seen[s]:
            continue
        comp = []
        stack = [s]
        seen[s] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in G.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    return comps


def articulation_points(G: Graph) -> tuple[int, ...]:
    """Cut vertices via iterative DFS low-link."""
    if G._articulation is not None:
        return G._articulation
    n = G.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    is_cut = [False] * n
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        root_children = 0
        disc[root] = low[root] = timer
        timer += 1
        stack: list[tuple[int, int]] = [(root, 0)]
        while stack:
            v, i = stack[-1]
            if i < len(G.adj[v]):
                stack[-1] = (v, i + 1)
                w = G.adj[v][i]
                if disc[w] == -1:
                    parent[w] = v
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, 0))
                elif w != parent[v]:
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            else:
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    if low[v] < low[u]:
                        low[u] = low[v]
                    if u != root and low[v] >= disc[u]:
                        is_cut[u] = True
        if root_children >= 2:
            is_cut[root] = True
    result = tuple(v for v in range(n) if is_cut[v])
    G._articulation = result
    return result


def induced_subgraph(G: Graph, members: Iterable[int]) -> Graph:
    """Subgraph induced by ``members`` (nonempty); labels carry over."""
    ids = vertex_set(members)
    if not ids:
        raise ValueError("induced subgraph needs a nonempty vertex set")
    if ids[0] < 0 or ids[-1] >= G.n:
        raise ValueError("vertex id out of range")
    remap = {old: new for new, old in enumerate(ids)}
    edges = [(remap[u], remap[v])
             for u in ids for v in G.adj[u] if u < v and v in remap]
    return Graph([G.labels[i] for i in ids], edges)


def complement(G: Graph) -> Graph:
    edges = [(u, v) for u in range(G.n) for v in range(u + 1, G.n)
             if not G.has_edge(u, v)]
    return Graph(G.labels, edges)


def co_components(G: Graph) -> list[tuple[int, ...]]:
    """Connected components of the complement graph."""
    return connected_components(complement(G))


def parse_edge_list(text: str) -> tuple[list[tuple[str, str]], list[str] | None]:
    """Parse edge-list text into (edge label pairs, declared vertices).

    Lines starting with '#' and blank lines are ignored. One optional
    ``vertices:`` header declares labels (allowing isolated vertices);
    every other line must hold exactly two whitespace-separated labels.
    """
    edges: list[tuple[str, str]] = []
    declared: list[str] | None = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("vertices:"):
            if declared is not None:
                raise EdgeListParseError(line_no, "duplicate vertices header")
            declared = line[len("vertices:"):].split()
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListParseError(
                line_no, f"expected two labels, got {len(parts)}: {line!r}")
        edges.append((parts[0], parts[1]))
    return edges, declared


def graph_from_edge_list(text: str) -> Graph:
    edges, declared = parse_edge_list(text)
    return build_graph(edges, vertices=declared)


def read_graph_file(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return graph_from_edge_list(fh.read())


def format_edge_list(G: Graph, header_comments: Iterable[str] = ()) -> str:
    """Serialize a graph; exact inverse of graph_from_edge_list.

    The vertex header pins the label-to-id assignment, so parsing the
    output reproduces ids, isolated vertices and all.
    """
    lines = [f"# {c}" for c in header_comments]
    if G.n:
        lines.append("vertices: " + " ".join(G.labels))
    lines.extend(f"{G.labels[u]} {G.labels[v]}" for u, v in G.edges())
    return "\n".join(lines) + "\n"


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set-bit positions of a mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low
