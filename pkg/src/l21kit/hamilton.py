"""Hamilton cycles and paths for graphs meeting Posa-type degree conditions.

The cycle is found constructively: take the Bondy-Chvatal closure (which
is complete under the Posa condition), start from the trivial cycle in
the complete graph, then delete the closure edges in reverse order.
Whenever a deleted edge ``uv`` was on the current cycle, the remaining
hamilton path ``u p_1 ... p_{n-2} v`` is spliced back into a cycle at the
least index ``i`` with ``p_i ~ v`` and ``p_{i+1} ~ u``; such an ``i`` is
guaranteed because ``d(u) + d(v) >= n`` held when ``uv`` was added.
"""

from __future__ import annotations

from .errors import InputError, PreconditionError
from .graph import Graph, add_dominating_vertex


def _low_degree_counts(G: Graph) -> list[int]:
    """``counts[k]`` is the number of vertices of degree at most ``k``."""
    counts = [0] * (G.n + 1)
    for d in G.degrees():
        counts[d] += 1
    for k in range(1, len(counts)):
        counts[k] += counts[k - 1]
    return counts


def posa_cycle_condition(G: Graph) -> bool:
    """Fewer than ``k`` vertices of degree <= k, for every 1 <= k <= (n-1)/2."""
    if G.n < 3:
        raise InputError("the cycle condition needs at least three vertices")
    counts = _low_degree_counts(G)
    return all(counts[k] < k for k in range(1, (G.n - 1) // 2 + 1))


def posa_path_condition(G: Graph) -> bool:
    """At most ``k`` vertices of degree <= k, for every 0 <= k <= (n-2)/2."""
    if G.n < 2:
        return True
    counts = _low_degree_counts(G)
    return all(counts[k] <= k for k in range(0, (G.n - 2) // 2 + 1))


def is_hamilton_path(G: Graph, order) -> bool:
    order = list(order)
    if sorted(order) != list(range(G.n)):
        return False
    return all(G.has_edge(a, b) for a, b in zip(order, order[1:]))


def is_hamilton_cycle(G: Graph, order) -> bool:
    order = list(order)
    return (G.n >= 3 and is_hamilton_path(G, order)
            and G.has_edge(order[-1], order[0]))


def closure(G: Graph) -> tuple[list[set[int]], list[tuple[int, int]]]:
    """Bondy-Chvatal closure as (adjacency sets, edges in order of addition).

    Pairs are scanned in lexicographic order, repeating full passes until
    a pass adds nothing; degree sums use the graph as it grows.
    """
    n = G.n
    adj = [set(G.neighbors(v)) for v in G.vertices()]
    added = []
    changed = True
    while changed:
        changed = False
        for u in range(n):
            for v in range(u + 1, n):
                if v not in adj[u] and len(adj[u]) + len(adj[v]) >= n:
                    adj[u].add(v)
                    adj[v].add(u)
                    added.append((u, v))
                    changed = True
    return adj, added


def _canonical_cycle(cycle: list[int]) -> list[int]:
    i = cycle.index(0)
    cycle = cycle[i:] + cycle[:i]
    if len(cycle) > 2 and cycle[-1] < cycle[1]:
        cycle = [cycle[0]] + cycle[:0:-1]
    return cycle


def _splice(cycle: list[int], u: int, v: int, adj: list[set[int]]) -> list[int]:
    n = len(cycle)
    i = cycle.index(u)
    if cycle[(i + 1) % n] == v:
        # walk away from v so the path reads u p_1 ... p_{n-2} v
        p = [cycle[(i - k) % n] for k in range(n)]
    else:
        p = [cycle[(i + k) % n] for k in range(n)]
    nu, nv = adj[u], adj[v]
    for j in range(1, n - 2):
        if p[j] in nv and p[j + 1] in nu:
            return [u] + p[j + 1:] + p[j:0:-1]
    raise AssertionError(f"no splice point for closure edge {(u, v)}")


def hamilton_cycle(G: Graph) -> list[int]:
    """A hamilton cycle, starting at 0 with the smaller neighbor second."""
    if not posa_cycle_condition(G):
        raise PreconditionError("posa_cycle", "degree sequence fails the Posa cycle condition")
    n = G.n
    adj, added = closure(G)
    if any(len(a) != n - 1 for a in adj):
        raise AssertionError("closure of a Posa graph is not complete")
    cycle = list(range(n))
    for u, v in reversed(added):
        adj[u].discard(v)
        adj[v].discard(u)
        i = cycle.index(u)
        if v in (cycle[(i + 1) % n], cycle[i - 1]):
            cycle = _splice(cycle, u, v, adj)
    cycle = _canonical_cycle(cycle)
    if not is_hamilton_cycle(G, cycle):
        raise AssertionError("constructed sequence is not a hamilton cycle")
    return cycle


def hamilton_path(G: Graph) -> list[int]:
    """A hamilton path via a hamilton cycle of ``G`` plus a dominating vertex."""
    if not posa_path_condition(G):
        raise PreconditionError("posa_path", "degree sequence fails the Posa path condition")
    if G.n <= 1:
        return list(range(G.n))
    D = add_dominating_vertex(G)
    cycle = hamilton_cycle(D)
    i = cycle.index(G.n)
    path = cycle[i + 1:] + cycle[:i]
    if not is_hamilton_path(G, path):
        raise AssertionError("constructed sequence is not a hamilton path")
    return path
