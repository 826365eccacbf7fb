"""Labelings, weighted (G, H) instances and their feasibility checks.

A labeling is stored as a tuple indexed by vertex.  An :class:`Instance`
pairs a graph ``G`` with a spanning subgraph ``H``: edges of ``H`` demand a
label gap of at least 2, the remaining edges of ``G`` a gap of at least 1.
An L(2,1)-labeling of ``F`` is exactly a feasible labeling of the instance
``(square(F), F)``.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field

from .errors import InputError
from .graph import Graph, bfs_distances, is_subgraph, square


@dataclass(frozen=True)
class Instance:
    G: Graph
    H: Graph

    def __post_init__(self):
        if self.G.n != self.H.n:
            raise InputError(f"G has {self.G.n} vertices but H has {self.H.n}")
        if not is_subgraph(self.H, self.G):
            raise InputError("H has an edge that is not an edge of G")

    @property
    def n(self) -> int:
        return self.G.n

    def weight(self, u: int, v: int) -> int:
        """Required gap across ``uv``: 2 on H-edges, 1 on other G-edges, 0 otherwise."""
        if self.H.has_edge(u, v):
            return 2
        return 1 if self.G.has_edge(u, v) else 0

    def weighted_edges(self):
        for u, v in self.G.sorted_edges():
            yield u, v, 2 if self.H.has_edge(u, v) else 1


@dataclass(frozen=True)
class Violation:
    u: int
    v: int
    distance: int  # graph distance in F for L(2,1) checks; 1 for instance checks
    gap: int
    required: int


@dataclass(frozen=True)
class Verdict:
    violations: tuple[Violation, ...] = field(default=())

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.valid


def as_labeling(f, n: int) -> tuple[int, ...]:
    """Normalize a sequence or mapping to a total tuple over ``0..n-1``."""
    if isinstance(f, Mapping):
        missing = [v for v in range(n) if v not in f]
        if missing or len(f) != n:
            raise InputError(f"labeling is not total; missing vertices {missing[:10]}")
        labels = tuple(f[v] for v in range(n))
    elif isinstance(f, Sequence):
        if len(f) != n:
            raise InputError(f"labeling has {len(f)} entries for {n} vertices")
        labels = tuple(f)
    else:
        raise InputError(f"cannot read a labeling from {type(f).__name__}")
    for v, x in enumerate(labels):
        if not isinstance(x, int) or isinstance(x, bool) or x < 0:
            raise InputError(f"label of vertex {v} must be a nonnegative integer, got {x!r}")
    return labels


def span_of(f) -> int:
    labels = list(f.values()) if isinstance(f, Mapping) else list(f)
    if not labels:
        raise InputError("span of an empty labeling is undefined")
    return max(labels) - min(labels)


def verify_l21(F: Graph, f) -> Verdict:
    """Check distance-1 gaps >= 2 and distance-2 gaps >= 1, reporting every failure."""
    labels = as_labeling(f, F.n)
    bad = []
    for u in F.vertices():
        for v, d in sorted(bfs_distances(F, u, cutoff=2).items()):
            if v <= u:
                continue
            gap = abs(labels[u] - labels[v])
            need = 2 if d == 1 else 1
            if gap < need:
                bad.append(Violation(u, v, d, gap, need))
    return Verdict(tuple(bad))


def verify_instance(inst: Instance, f) -> Verdict:
    labels = as_labeling(f, inst.n)
    bad = []
    for u, v, w in inst.weighted_edges():
        gap = abs(labels[u] - labels[v])
        if gap < w:
            bad.append(Violation(u, v, 1, gap, w))
    return Verdict(tuple(bad))


def l21_as_instance(F: Graph) -> Instance:
    return Instance(square(F), F)


def is_equitable_labeling(f, L: int) -> bool:
    """Label classes over ``0..L-1`` differ in size by at most one."""
    counts = [0] * L
    for x in f:
        counts[x] += 1
    return max(counts) - min(counts) <= 1


def is_no_hole(f) -> bool:
    used = set(f)
    return used == set(range(min(used), max(used) + 1))
