"""Equitable proper colorings with ``L >= max_degree + 1`` classes.

A greedy pass places vertices (by descending degree, then index) into the
smallest class containing none of their neighbors.  Imbalance is then
repaired by shifting single vertices along paths of the *move digraph*
(class ``X -> Y`` when some vertex of ``X`` has no neighbor in ``Y``) from
an oversized class to an undersized one.  Should that stall, the coloring
is rebuilt with networkx's implementation of the Kierstead-Kostochka-
Mydlarz-Szemeredi algorithm, which always succeeds in this regime.
The result is checked before it is returned.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import networkx as nx

from .errors import PreconditionError
from .graph import Graph, max_degree


@dataclass(frozen=True)
class Coloring:
    """Ordered partition of the vertex set; classes may be empty."""

    classes: tuple[frozenset[int], ...]

    @property
    def L(self) -> int:
        return len(self.classes)

    def sizes(self) -> list[int]:
        return [len(c) for c in self.classes]

    def color_of(self) -> dict[int, int]:
        return {v: i for i, cls in enumerate(self.classes) for v in cls}

    def is_partition_of(self, n: int) -> bool:
        seen = [v for cls in self.classes for v in cls]
        return len(seen) == n and set(seen) == set(range(n))

    def is_proper(self, G: Graph) -> bool:
        return all(not (G.neighbors(v) & cls) for cls in self.classes for v in cls)

    def is_equitable(self) -> bool:
        s = self.sizes()
        return not s or max(s) - min(s) <= 1


def _greedy(G: Graph, L: int) -> list[set[int]]:
    classes: list[set[int]] = [set() for _ in range(L)]
    for v in sorted(G.vertices(), key=lambda v: (-G.degree(v), v)):
        nb = G.neighbors(v)
        best = min((i for i in range(L) if not (nb & classes[i])),
                   key=lambda i: (len(classes[i]), i))
        classes[best].add(v)
    return classes


def _movers(G: Graph, classes, src: int, dst: int) -> list[int]:
    target = classes[dst]
    return sorted(v for v in classes[src] if not (G.neighbors(v) & target))


def _shift_once(G: Graph, classes: list[set[int]]) -> bool:
    """Move one vertex's worth of size from a large class to a small one."""
    L = len(classes)
    sizes = [len(c) for c in classes]
    lo = min(sizes)
    for sink in (i for i in range(L) if sizes[i] == lo):
        # BFS backwards from the sink over the move digraph
        nxt = {sink: None}
        queue = deque([sink])
        while queue:
            y = queue.popleft()
            for x in range(L):
                if x not in nxt and _movers(G, classes, x, y):
                    nxt[x] = y
                    queue.append(x)
        sources = [x for x in nxt if sizes[x] >= lo + 2]
        if not sources:
            continue
        x = min(sources, key=lambda i: (-sizes[i], i))
        while nxt[x] is not None:
            y = nxt[x]
            v = _movers(G, classes, x, y)[0]
            classes[x].remove(v)
            classes[y].add(v)
            x = y
        return True
    return False


def _fallback(G: Graph, L: int) -> list[set[int]]:
    nxg = nx.Graph()
    nxg.add_nodes_from(G.vertices())
    nxg.add_edges_from(G.sorted_edges())
    colors = nx.algorithms.coloring.equitable_color(nxg, L)
    classes: list[set[int]] = [set() for _ in range(L)]
    for v, c in colors.items():
        classes[c].add(v)
    return classes


def _canonical(classes) -> Coloring:
    # nonempty classes by smallest member, then the empty ones
    ordered = sorted(classes, key=lambda c: (not c, min(c) if c else 0))
    return Coloring(tuple(frozenset(c) for c in ordered))


def equitable_coloring(G: Graph, L: int) -> Coloring:
    """Proper coloring with exactly ``L`` classes whose sizes differ by at most one."""
    delta = max_degree(G)
    if L <= delta:
        raise PreconditionError(
            "colors", f"need at least max_degree + 1 = {delta + 1} classes, got {L}")
    classes = _greedy(G, L)
    while True:
        sizes = [len(c) for c in classes]
        if max(sizes) - min(sizes) <= 1:
            break
        if not _shift_once(G, classes):
            classes = _fallback(G, L)
            break
    coloring = _canonical(classes)
    if not (coloring.is_partition_of(G.n) and coloring.is_proper(G) and coloring.is_equitable()):
        raise AssertionError("equitable coloring postcondition violated")
    return coloring
