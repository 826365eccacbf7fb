"""Deterministic generators for the witness graphs used throughout the toolkit.

``random_tree(n, seed)`` decodes a Pruefer sequence whose ``n - 2`` entries
are ``random.Random(seed).randrange(n)`` drawn in order; decoding always
joins the smallest current leaf to the next sequence entry.  The same
``(n, seed)`` therefore yields the same labeled tree on every platform
running CPython's Mersenne Twister, and every labeled tree is equally
likely.
"""

from __future__ import annotations

import heapq
import random

from .errors import InputError
from .galois import FiniteField, normalize, point_index, projective_points
from .graph import Graph


def path(n: int) -> Graph:
    if n < 1:
        raise InputError("path needs at least one vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InputError("cycle needs at least three vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise InputError("complete graph needs at least one vertex")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(n: int) -> Graph:
    """Star on ``n`` vertices: center 0 joined to leaves ``1..n-1`` (K_{1,n-1})."""
    if n < 1:
        raise InputError("star needs at least one vertex")
    return Graph(n, [(0, i) for i in range(1, n)])


def empty(n: int) -> Graph:
    return Graph(n)


def random_tree(n: int, seed: int = 0) -> Graph:
    if n < 1:
        raise InputError("tree needs at least one vertex")
    if n <= 2:
        return path(n)
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    remaining = [1] * n
    for x in seq:
        remaining[x] += 1
    leaves = [v for v in range(n) if remaining[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        remaining[x] -= 1
        if remaining[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return Graph(n, edges)


def petersen() -> Graph:
    """Outer 5-cycle on 0..4, spokes i -- i+5, inner pentagram on 5..9."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, edges)


def hoffman_singleton() -> Graph:
    """Five pentagons and five pentagrams.

    Vertex ``i`` of pentagon ``h`` is ``5h + i``; vertex ``i`` of pentagram
    ``j`` is ``25 + 5j + i``.  Pentagon vertex ``(h, i)`` is joined to
    pentagram vertex ``(j, h*j + i mod 5)``, one neighbor per pentagram.
    """
    edges = []
    for h in range(5):
        for i in range(5):
            edges.append((5 * h + i, 5 * h + (i + 1) % 5))
            edges.append((25 + 5 * h + i, 25 + 5 * h + (i + 2) % 5))
    for h in range(5):
        for j in range(5):
            for i in range(5):
                edges.append((5 * h + i, 25 + 5 * j + (h * j + i) % 5))
    return Graph(50, edges)


def _polar_line(F: FiniteField, coords):
    """Codes of the q + 1 normalized points orthogonal to ``coords``."""
    a, b, c = coords
    q = F.order
    if c:
        # Z = -(aX + bY) / c over the points (X, Y) of the projective line
        s = F.neg_code(F.inv_code(c))
        out = [(0, 1, F.mul_code(s, b))]
        for y in range(q):
            out.append((1, y, F.mul_code(s, F.add_code(a, F.mul_code(b, y)))))
        return out
    if b:
        y = F.mul_code(F.neg_code(a), F.inv_code(b))
        return [(0, 0, 1)] + [(1, y, z) for z in range(q)]
    return [(0, 0, 1)] + [(0, 1, z) for z in range(q)]


def polarity_graph(F: FiniteField) -> Graph:
    """Orthogonality graph of PG(2, q) under x1*y1 + x2*y2 + x3*y3.

    Vertices follow :func:`~l21kit.galois.projective_points` order.
    Self-orthogonal (absolute) points get no loop, so they have degree q
    while every other point has degree q + 1.
    """
    q = F.order
    pts = projective_points(F)
    adj = []
    for idx, pt in enumerate(pts):
        nb = {point_index(q, normalize(F, c)) for c in _polar_line(F, pt.coords)}
        nb.discard(idx)
        adj.append(nb)
    return Graph.from_adjacency(adj)


def erdos_extension(F: FiniteField) -> Graph:
    """Polarity graph plus one vertex joined to all absolute points.

    Only defined in characteristic 2, where the absolute points form a line
    and the result is (q+1)-regular of diameter two.
    """
    if F.p != 2:
        raise InputError(f"extension requires characteristic 2, field has characteristic {F.p}")
    base = polarity_graph(F)
    q = F.order
    new = base.n
    adj = [set(base.neighbors(v)) for v in base.vertices()]
    low = [v for v in base.vertices() if base.degree(v) == q]
    for v in low:
        adj[v].add(new)
    adj.append(set(low))
    return Graph.from_adjacency(adj)


FAMILIES = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "star": star,
    "empty": empty,
    "random_tree": random_tree,
    "petersen": petersen,
    "hoffman_singleton": hoffman_singleton,
}


def generate(family: str, *params, seed: int | None = None) -> Graph:
    """Build a named graph.  ``seed`` is only meaningful for ``random_tree``."""
    try:
        builder = FAMILIES[family]
    except KeyError:
        raise InputError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}") from None
    if family in ("petersen", "hoffman_singleton"):
        if params:
            raise InputError(f"{family} takes no parameters")
        return builder()
    if len(params) != 1 or not isinstance(params[0], int):
        raise InputError(f"{family} takes a single integer order")
    if family == "random_tree":
        return builder(params[0], 0 if seed is None else seed)
    return builder(params[0])
