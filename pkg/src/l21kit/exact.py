"""Exact minimum span by depth-first branch and bound.

Vertices are branched in descending G-degree order (ties by index) and
labels tried in ascending order, with forward checking on the unlabeled
neighbors.  The first branched vertex only takes labels in the lower half
of the current range, since reversing a labeling inside ``[0, T]`` keeps
it feasible.  The search stops early once it meets a clique-based lower
bound.  Intended for instances of at most about twenty vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .graph import Graph
from .labeling import Instance, l21_as_instance, span_of, verify_instance
from .pipeline import chang_kuo, first_fit, first_fit_instance


@dataclass(frozen=True)
class ExactResult:
    optimum: int
    witness: tuple[int, ...]


class _Infeasible:
    def __repr__(self):
        return "INFEASIBLE_WITHIN_BUDGET"

    def __bool__(self):
        return False


INFEASIBLE_WITHIN_BUDGET = _Infeasible()


def _maximal_cliques(G: Graph):
    """Bron-Kerbosch with pivoting."""
    def expand(r, p, x):
        if not p and not x:
            yield r
            return
        pivot = max(p | x, key=lambda u: len(G.neighbors(u) & p))
        for v in sorted(p - G.neighbors(pivot)):
            nb = G.neighbors(v)
            yield from expand(r | {v}, p & nb, x & nb)
            p = p - {v}
            x = x | {v}

    yield from expand(frozenset(), set(G.vertices()), set())


def clique_lower_bound(inst: Instance, limit: int = 5000) -> int:
    """Span lower bound from cliques of G.

    A clique of size k needs k distinct labels.  Sorting them, consecutive
    labels joined by an H-edge cost an extra unit, so the span is at least
    ``k - 1 + (paths - 1)`` where ``paths`` is the least number of paths
    covering the clique in the complement of H; that count is bounded below
    by the isolated and degree-one vertices of that complement.
    """
    best = 0
    for count, clique in enumerate(_maximal_cliques(inst.G)):
        if count >= limit:
            break
        k = len(clique)
        isolated = ends = 0
        for v in clique:
            d = k - 1 - len(inst.H.neighbors(v) & clique)
            if d == 0:
                isolated += 1
            elif d == 1:
                ends += 1
        paths = max(1, isolated + (ends + 1) // 2)
        best = max(best, k + paths - 2)
    return best


class _Found(Exception):
    pass


def exact_span(inst: Instance, budget: int | None = None, incumbent=None):
    """Minimum span of a feasible labeling, with an optimal witness.

    With ``budget``, only spans up to ``budget`` are considered and
    ``INFEASIBLE_WITHIN_BUDGET`` is returned when none exists.
    """
    n = inst.n
    if n < 1:
        raise InputError("exact_span needs at least one vertex")
    if incumbent is None:
        incumbent = first_fit_instance(inst)
    best = tuple(x - min(incumbent) for x in incumbent)
    best_span = span_of(best)
    if budget is not None and best_span > budget:
        best, top = None, budget
    else:
        top = best_span - 1
    lower = clique_lower_bound(inst)

    G, H = inst.G, inst.H
    order = sorted(range(n), key=lambda v: (-G.degree(v), v))
    nbrs = [[(w, 2 if H.has_edge(v, w) else 1) for w in sorted(G.neighbors(v))]
            for v in range(n)]
    labels = [-1] * n
    banned = [0] * n  # bitmask of labels excluded by already-labeled neighbors
    state = {"T": top, "best": best}

    def record():
        lo, hi = min(labels), max(labels)
        if hi - lo > state["T"]:
            # an ancestor still carries a label from before the bound shrank
            return
        state["best"] = tuple(x - lo for x in labels)
        state["T"] = hi - lo - 1
        if hi - lo <= lower:
            raise _Found

    def search(depth):
        if depth == n:
            record()
            return
        v = order[depth]
        top = state["T"] if depth else state["T"] // 2
        x = 0
        while x <= top:
            if not banned[v] >> x & 1:
                touched = []
                dead = False
                for w, wt in nbrs[v]:
                    if labels[w] < 0:
                        mask = ((1 << (2 * wt - 1)) - 1) << x >> (wt - 1)
                        old = banned[w]
                        banned[w] = old | mask
                        touched.append((w, old))
                        full = (1 << (state["T"] + 1)) - 1
                        if banned[w] & full == full:
                            dead = True
                            break
                if not dead:
                    labels[v] = x
                    search(depth + 1)
                    labels[v] = -1
                for w, old in reversed(touched):
                    banned[w] = old
            top = state["T"] if depth else state["T"] // 2
            x += 1

    if state["T"] >= 0 and (best is None or best_span > lower):
        try:
            search(0)
        except _Found:
            pass
    result = state["best"]
    if result is None:
        return INFEASIBLE_WITHIN_BUDGET
    if not verify_instance(inst, result):
        raise AssertionError("exact solver witness failed verification")
    return ExactResult(span_of(result), result)


def exact_lambda(G: Graph) -> ExactResult:
    """Minimum span of an L(2,1)-labeling of ``G``."""
    seeds = [chang_kuo(G), first_fit(G)] if G.n else []
    incumbent = min(seeds, key=span_of) if seeds else None
    return exact_span(l21_as_instance(G), incumbent=incumbent)
