import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphgen import gnp, to_networkx
from l21kit.errors import InputError
from l21kit.families import complete, cycle, empty, path, petersen
from l21kit.graph import (INFINITY, Graph, complement, diameter, distance, girth,
                          max_degree, square)


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


class TestConstruction:
    def test_rejects_loop(self):
        with pytest.raises(InputError):
            Graph(3, [(1, 1)])

    def test_rejects_duplicate_in_either_orientation(self):
        with pytest.raises(InputError):
            Graph(3, [(0, 1), (1, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(InputError):
            Graph(2, [(0, 2)])

    def test_edges_are_canonical(self):
        G = Graph(3, [(2, 0), (1, 2)])
        assert G.edges == {(0, 2), (1, 2)}
        assert G.has_edge(0, 2) and G.has_edge(2, 0)

    def test_large_graph(self):
        G = cycle(5000)
        assert G.m == 5000 and max_degree(G) == 2


def test_max_degree():
    assert max_degree(complete(4)) == 3
    assert max_degree(empty(5)) == 0
    assert max_degree(Graph(0)) == 0
    assert max_degree(petersen()) == 3


class TestDistance:
    def test_path_endpoints(self):
        assert distance(path(5), 0, 4) == 4

    def test_same_vertex(self):
        assert distance(path(5), 2, 2) == 0

    def test_unreachable_is_infinity(self):
        assert distance(empty(2), 0, 1) is INFINITY

    def test_out_of_range(self):
        with pytest.raises(InputError):
            distance(path(3), 0, 3)


class TestDiameter:
    @pytest.mark.parametrize("n", [2, 3, 6])
    def test_complete(self, n):
        assert diameter(complete(n)) == 1

    def test_petersen(self):
        assert diameter(petersen()) == 2

    def test_disconnected(self):
        assert diameter(Graph(4, [(0, 1), (2, 3)])) == INFINITY

    def test_empty_graph_rejected(self):
        with pytest.raises(InputError):
            diameter(Graph(0))


class TestSquare:
    def test_p3_becomes_triangle(self):
        assert square(path(3)) == complete(3)

    def test_petersen_becomes_k10(self):
        assert square(petersen()) == complete(10)

    def test_edgeless_unchanged(self):
        assert square(empty(4)) == empty(4)


class TestComplement:
    def test_complete_to_edgeless(self):
        assert complement(complete(5)) == empty(5)

    def test_c5_self_complementary(self):
        C = complement(cycle(5))
        assert set(C.degrees()) == {2}
        assert nx.is_isomorphic(to_networkx(C), nx.cycle_graph(5))


def test_girth():
    assert girth(petersen()) == 5
    assert girth(cycle(7)) == 7
    assert girth(path(4)) == INFINITY


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_square_degree_at_most_delta_squared(G):
    assert max_degree(square(G)) <= max_degree(G) ** 2


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_square_contains_graph(G):
    assert G.edges <= square(G).edges


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_complement_involution_and_edge_count(G):
    C = complement(G)
    assert complement(C) == G
    assert G.m + C.m == G.n * (G.n - 1) // 2


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=9))
def test_distance_matches_networkx(G):
    ref = dict(nx.all_pairs_shortest_path_length(to_networkx(G)))
    for u in G.vertices():
        for v in G.vertices():
            d = distance(G, u, v)
            assert d == ref[u].get(v, INFINITY)
            assert d == distance(G, v, u)


def test_triangle_inequality_on_random_graphs():
    rng = random.Random(7)
    for _ in range(30):
        G = gnp(rng, 9, 0.3)
        for a in G.vertices():
            for b in G.vertices():
                for c in G.vertices():
                    assert distance(G, a, c) <= distance(G, a, b) + distance(G, b, c)
