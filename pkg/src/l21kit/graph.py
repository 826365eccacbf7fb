"""Immutable simple graphs on vertices ``0..n-1`` and structural operations."""

from __future__ import annotations

from collections import deque
from typing import Iterable

from .errors import InputError

INFINITY = float("inf")


class Graph:
    """Simple undirected graph with dense integer vertices.

    Adjacency is held as one frozenset per vertex, giving O(1) edge queries
    and cheap neighbor iteration.  Instances are never mutated after
    construction.
    """

    __slots__ = ("_n", "_adj", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not isinstance(n, int) or n < 0:
            raise InputError(f"vertex count must be a nonnegative integer, got {n!r}")
        adj: list[set[int]] = [set() for _ in range(n)]
        canon: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise InputError(f"loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in canon:
                raise InputError(f"duplicate edge {e}")
            canon.add(e)
            adj[u].add(v)
            adj[v].add(u)
        self._n = n
        self._adj = tuple(frozenset(a) for a in adj)
        self._edges = frozenset(canon)

    @classmethod
    def from_adjacency(cls, adj: list[set[int]]) -> Graph:
        """Build from symmetric neighbor sets without re-validating duplicates."""
        g = cls.__new__(cls)
        g._n = len(adj)
        g._adj = tuple(frozenset(a) for a in adj)
        g._edges = frozenset((u, v) for u, nb in enumerate(adj) for v in nb if u < v)
        return g

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        """Edges as ``(u, v)`` pairs with ``u < v``."""
        return self._edges

    @property
    def m(self) -> int:
        return len(self._edges)

    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self._edges)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self):
        return hash((self._n, self._edges))

    def __repr__(self):
        return f"Graph(n={self._n}, m={self.m})"


def max_degree(G: Graph) -> int:
    return max(G.degrees(), default=0)


def _check_vertex(G: Graph, v: int) -> None:
    if not (isinstance(v, int) and 0 <= v < G.n):
        raise InputError(f"vertex {v!r} out of range for a graph on {G.n} vertices")


def bfs_distances(G: Graph, source: int, cutoff: int | None = None) -> dict[int, int]:
    """Hop distances from ``source`` to every reachable vertex (within ``cutoff``)."""
    _check_vertex(G, source)
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        d = dist[u]
        if cutoff is not None and d >= cutoff:
            continue
        for w in G.neighbors(u):
            if w not in dist:
                dist[w] = d + 1
                queue.append(w)
    return dist


def distance(G: Graph, u: int, v: int) -> int | float:
    """Shortest-path edge count, or ``INFINITY`` if ``v`` is unreachable."""
    _check_vertex(G, v)
    return bfs_distances(G, u).get(v, INFINITY)


def diameter(G: Graph) -> int | float:
    if G.n == 0:
        raise InputError("diameter of the empty graph is undefined")
    best = 0
    for s in G.vertices():
        dist = bfs_distances(G, s)
        if len(dist) < G.n:
            return INFINITY
        best = max(best, max(dist.values()))
    return best


def square(G: Graph) -> Graph:
    """Join every pair of distinct vertices at distance one or two."""
    adj = []
    for v in G.vertices():
        nb = set(G.neighbors(v))
        for w in G.neighbors(v):
            nb.update(G.neighbors(w))
        nb.discard(v)
        adj.append(nb)
    return Graph.from_adjacency(adj)


def complement(G: Graph) -> Graph:
    every = set(G.vertices())
    return Graph.from_adjacency([every - G.neighbors(v) - {v} for v in G.vertices()])


def is_subgraph(H: Graph, G: Graph) -> bool:
    """True when ``H`` and ``G`` share a vertex set and E(H) is a subset of E(G)."""
    return H.n == G.n and H.edges <= G.edges


def add_dominating_vertex(G: Graph) -> Graph:
    """Return ``G`` plus a new vertex ``G.n`` adjacent to every old vertex."""
    new = G.n
    adj = [set(G.neighbors(v)) | {new} for v in G.vertices()]
    adj.append(set(G.vertices()))
    return Graph.from_adjacency(adj)


def girth(G: Graph) -> int | float:
    """Length of a shortest cycle (``INFINITY`` for forests)."""
    best = INFINITY
    for s in G.vertices():
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in G.neighbors(u):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def is_connected(G: Graph) -> bool:
    return G.n == 0 or len(bfs_distances(G, 0)) == G.n

