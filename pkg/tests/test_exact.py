import random

import pytest

from graphgen import bounded_degree, gnp, supergraph
from naive import naive_min_span
from l21kit.errors import InputError
from l21kit.exact import INFEASIBLE_WITHIN_BUDGET, clique_lower_bound, exact_lambda, exact_span
from l21kit.families import complete, cycle, erdos_extension, path, petersen, random_tree, star
from l21kit.galois import make_field
from l21kit.graph import Graph, max_degree
from l21kit.labeling import Instance, l21_as_instance, span_of, verify_instance, verify_l21


class TestExactSpan:
    def test_c7(self):
        assert exact_span(l21_as_instance(cycle(7))).optimum == 4

    def test_p2(self):
        assert exact_span(l21_as_instance(path(2))).optimum == 2

    def test_single_vertex(self):
        r = exact_span(l21_as_instance(Graph(1)))
        assert r.optimum == 0 and r.witness == (0,)

    def test_empty_rejected(self):
        with pytest.raises(InputError):
            exact_span(l21_as_instance(Graph(0)))

    def test_budget_below_optimum(self):
        assert exact_span(l21_as_instance(petersen()), budget=8) is INFEASIBLE_WITHIN_BUDGET

    def test_budget_at_optimum(self):
        r = exact_span(l21_as_instance(cycle(5)), budget=4)
        assert r.optimum == 4

    def test_budget_with_poor_incumbent(self):
        inst = l21_as_instance(path(6))
        r = exact_span(inst, budget=4, incumbent=tuple(2 * v for v in range(6)))
        assert r.optimum == 4

    def test_witness_is_feasible_and_normalized(self):
        r = exact_span(l21_as_instance(petersen()))
        assert verify_instance(l21_as_instance(petersen()), r.witness).valid
        assert min(r.witness) == 0 and span_of(r.witness) == r.optimum

    def test_deterministic(self):
        G = gnp(random.Random(3), 9, 0.4)
        assert exact_lambda(G) == exact_lambda(G)


class TestExactLambda:
    def test_petersen(self):
        assert exact_lambda(petersen()).optimum == 9

    def test_p4(self):
        assert exact_lambda(path(4)).optimum == 3

    def test_erdos_q2(self):
        assert exact_lambda(erdos_extension(make_field(2))).optimum == 7

    @pytest.mark.parametrize("n", range(5, 13))
    def test_long_paths(self, n):
        assert exact_lambda(path(n)).optimum == 4

    @pytest.mark.parametrize("n", range(2, 8))
    def test_cliques(self, n):
        assert exact_lambda(complete(n)).optimum == 2 * (n - 1)

    def test_stars(self):
        for n in range(2, 9):
            assert exact_lambda(star(n)).optimum == n


def test_trees_within_one_of_delta_plus_one():
    for seed in range(40):
        T = random_tree(4 + seed % 11, seed)
        d = max_degree(T)
        assert exact_lambda(T).optimum in (d + 1, d + 2)


def test_lower_bound_is_sound():
    rng = random.Random(6)
    for _ in range(100):
        inst = l21_as_instance(gnp(rng, rng.randint(1, 7), rng.random()))
        assert clique_lower_bound(inst) <= naive_min_span(inst)


def test_matches_naive_on_l21_instances():
    rng = random.Random(12)
    for _ in range(120):
        G = gnp(rng, rng.randint(1, 7), rng.random())
        r = exact_lambda(G)
        assert r.optimum == naive_min_span(l21_as_instance(G))
        assert verify_l21(G, r.witness).valid


def test_matches_naive_on_general_instances():
    rng = random.Random(13)
    for _ in range(120):
        H = bounded_degree(rng, rng.randint(1, 7), rng.randint(0, 3))
        G = supergraph(rng, H, 6, rng.randint(0, 12))
        inst = Instance(G, H)
        assert exact_span(inst).optimum == naive_min_span(inst)
