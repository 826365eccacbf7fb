"""Labeling algorithms: the color-adjacency construction and the baselines.

``label_with_budget`` turns an equitable ``L``-coloring of ``G`` into a
labeling with labels ``0..L-1``.  Classes become the vertices of the color
adjacency graph (joined when an H-edge runs between them); a hamilton
path through its complement orders the classes so that consecutive labels
never meet across an H-edge.  When ``n <= bound_M(L, max_degree(H))`` the
complement satisfies the Posa path condition, so the path always exists.
"""

from __future__ import annotations

from dataclasses import dataclass

from .equitable import Coloring, equitable_coloring
from .errors import CapabilityError, InputError, PreconditionError
from .graph import Graph, complement, max_degree, square
from .hamilton import hamilton_path, posa_path_condition
from .labeling import Instance, verify_instance, verify_l21


@dataclass(frozen=True)
class ColorAdjacencyGraph:
    base: Graph
    classes: Coloring


@dataclass(frozen=True)
class BoundReport:
    delta: int
    deltaG: int
    L: int
    M: int
    n: int

    @property
    def applicable(self) -> bool:
        return self.deltaG <= self.delta**2 and self.L >= self.delta**2 + 1 and self.n <= self.M


def build_cgh(C: Coloring, inst: Instance) -> ColorAdjacencyGraph:
    if not C.is_partition_of(inst.n):
        raise InputError("coloring does not partition the vertex set")
    if not C.is_proper(inst.G):
        raise InputError("coloring is not proper on G")
    color = C.color_of()
    edges = {tuple(sorted((color[u], color[v]))) for u, v in inst.H.edges}
    return ColorAdjacencyGraph(Graph(C.L, sorted(edges)), C)


def bound_M(L: int, delta: int) -> int:
    """Largest order for which a span of ``L - 1`` is guaranteed."""
    if delta < 1:
        raise InputError(f"max degree of H must be at least 1, got {delta}")
    if L < delta * delta + 1:
        raise InputError(f"L must be at least delta^2 + 1 = {delta * delta + 1}, got {L}")
    return (L - delta) * ((L - 1) // (2 * delta) + 1) - 1


def bound_report(inst: Instance, L: int) -> BoundReport:
    delta = max_degree(inst.H)
    M = bound_M(L, delta) if delta >= 1 and L >= delta * delta + 1 else -1
    return BoundReport(delta, max_degree(inst.G), L, M, inst.n)


def check_budget(inst: Instance, L: int) -> int:
    """Raise a named PreconditionError unless ``label_with_budget`` applies; return delta."""
    delta = max_degree(inst.H)
    if delta < 1:
        raise PreconditionError("h_degree", "H has no edges (max_degree(H) must be >= 1)")
    dG = max_degree(inst.G)
    if dG > delta * delta:
        raise PreconditionError(
            "g_degree", f"max_degree(G) = {dG} exceeds max_degree(H)^2 = {delta * delta}")
    if L < delta * delta + 1:
        raise PreconditionError(
            "budget", f"L = {L} is below max_degree(H)^2 + 1 = {delta * delta + 1}")
    M = bound_M(L, delta)
    if inst.n > M:
        raise PreconditionError("size", f"n = {inst.n} exceeds the order bound M = {M} for L = {L}")
    return delta


def least_budget(inst: Instance) -> int:
    """Smallest ``L`` for which every precondition of ``label_with_budget`` holds."""
    delta = max_degree(inst.H)
    L = delta * delta + 1
    if delta >= 1:
        while bound_M(L, delta) < inst.n:
            L += 1
    check_budget(inst, L)
    return L


def label_with_budget(inst: Instance, L: int) -> tuple[int, ...]:
    """Feasible labeling of ``inst`` using labels ``0..L-1``.

    Label classes are equitable, and every label is used when ``n >= L``.
    """
    check_budget(inst, L)
    n = inst.n
    if L >= 2 * n + 1:
        labels = tuple(2 * v for v in range(n))
    else:
        coloring = equitable_coloring(inst.G, L)
        cgh = build_cgh(coloring, inst)
        order = hamilton_path(complement(cgh.base))
        labels = [0] * n
        for position, cls in enumerate(order):
            for v in coloring.classes[cls]:
                labels[v] = position
        labels = tuple(labels)
    if not verify_instance(inst, labels):
        raise AssertionError("pipeline produced an infeasible labeling")
    return labels


def injective_labeling(G: Graph) -> tuple[int, ...]:
    """Distinct labels ``0..n-1`` following a hamilton path of the complement."""
    Gc = complement(G)
    if not posa_path_condition(Gc):
        raise CapabilityError(
            "complement fails the Posa path condition; no hamilton path construction available")
    labels = [0] * G.n
    for position, v in enumerate(hamilton_path(Gc)):
        labels[v] = position
    labels = tuple(labels)
    if not verify_l21(G, labels):
        raise AssertionError("injective labeling failed verification")
    return labels


def chang_kuo(G: Graph) -> tuple[int, ...]:
    """Label ``i`` goes to a maximal 2-independent set avoiding neighbors of label ``i-1``."""
    G2 = square(G)
    labels: list[int | None] = [None] * G.n
    unlabeled = set(G.vertices())
    prev: set[int] = set()
    i = 0
    while unlabeled:
        blocked = set()
        for v in prev:
            blocked |= G.neighbors(v)
        current: set[int] = set()
        for v in sorted(unlabeled - blocked):
            if not (G2.neighbors(v) & current):
                current.add(v)
        for v in current:
            labels[v] = i
        unlabeled -= current
        prev = current
        i += 1
    labels = tuple(labels)
    if not verify_l21(G, labels):
        raise AssertionError("Chang-Kuo labeling failed verification")
    return labels


def first_fit(G: Graph) -> tuple[int, ...]:
    """Each vertex in index order takes the least label compatible with earlier ones."""
    G2 = square(G)
    labels: list[int] = []
    for v in G.vertices():
        banned = set()
        for w in G2.neighbors(v):
            if w < v:
                x = labels[w]
                banned.add(x)
                if G.has_edge(v, w):
                    banned.update((x - 1, x + 1))
        x = 0
        while x in banned:
            x += 1
        labels.append(x)
    labels = tuple(labels)
    if not verify_l21(G, labels):
        raise AssertionError("first-fit labeling failed verification")
    return labels


def first_fit_instance(inst: Instance) -> tuple[int, ...]:
    """First-fit for a general (G, H) instance."""
    labels: list[int] = []
    for v in range(inst.n):
        banned = set()
        for w in inst.G.neighbors(v):
            if w < v:
                x = labels[w]
                banned.add(x)
                if inst.H.has_edge(v, w):
                    banned.update((x - 1, x + 1))
        x = 0
        while x in banned:
            x += 1
        labels.append(x)
    return tuple(labels)

