"""Exit criteria for the toolkit, one test per criterion.

Run ``pytest tests/test_acceptance.py``; the terminal summary lists one
PASS/FAIL line per criterion.
"""

import random
import time

from graphgen import bounded_degree, gnp, supergraph, with_max_degree
from naive import naive_min_span
from l21kit.equitable import equitable_coloring
from l21kit.exact import exact_lambda, exact_span
from l21kit.families import (cycle, erdos_extension, hoffman_singleton, path, petersen,
                             polarity_graph, random_tree)
from l21kit.galois import field_of_order
from l21kit.graph import diameter, girth, max_degree
from l21kit.hamilton import hamilton_cycle, posa_cycle_condition
from l21kit.labeling import (Instance, l21_as_instance, span_of, verify_instance,
                             verify_l21)
from l21kit.pipeline import (bound_M, chang_kuo, first_fit, injective_labeling,
                             label_with_budget)


def test_path_and_cycle_values(criterion):
    criterion(1, "lambda of P_2..P_12 and C_3..C_12, < 5 s")
    start = time.perf_counter()
    assert [exact_lambda(path(n)).optimum for n in (2, 3, 4)] == [2, 3, 3]
    assert all(exact_lambda(path(n)).optimum == 4 for n in range(5, 13))
    assert all(exact_lambda(cycle(n)).optimum == 4 for n in range(3, 13))
    assert time.perf_counter() - start < 5


def test_random_trees(criterion):
    criterion(2, "50 random trees have lambda in {D+1, D+2}, < 60 s")
    start = time.perf_counter()
    rng = random.Random(2024)
    for i in range(50):
        T = random_tree(rng.randint(4, 14), seed=i)
        d = max_degree(T)
        assert exact_lambda(T).optimum in (d + 1, d + 2)
    assert time.perf_counter() - start < 60


def test_moore_graphs(criterion):
    criterion(3, "lambda(Petersen) = 9; Hoffman-Singleton labeled with span 49")
    start = time.perf_counter()
    assert exact_lambda(petersen()).optimum == 9
    assert time.perf_counter() - start < 120

    start = time.perf_counter()
    hs = hoffman_singleton()
    assert hs.n == 50 and set(hs.degrees()) == {7}
    assert girth(hs) == 5 and diameter(hs) == 2
    f = label_with_budget(l21_as_instance(hs), 50)
    assert verify_l21(hs, f).valid
    assert span_of(f) == 49 and len(set(f)) == 50
    assert time.perf_counter() - start < 5


def test_galois_construction(criterion):
    criterion(4, "polarity and extension graphs for q = 2, 4, 8; lambda(ext(2)) = 7")
    for q in (2, 4, 8):
        F = field_of_order(q)
        P = polarity_graph(F)
        assert P.n == q * q + q + 1
        assert max_degree(P) == q + 1
        assert P.degrees().count(q) == q + 1
        E = erdos_extension(F)
        assert set(E.degrees()) == {q + 1}
        assert diameter(E) == 2 and E.n == q * q + q + 2
    start = time.perf_counter()
    assert exact_lambda(erdos_extension(field_of_order(2))).optimum == 7 == 3 * 3 - 3 + 1
    assert time.perf_counter() - start < 120


def test_budget_delta_squared_sweep(criterion):
    criterion(5, "500 graphs with D in {2,3,4}, n <= M(D^2+1, D): span <= D^2, < 120 s")
    start = time.perf_counter()
    rng = random.Random(5)
    for i in range(500):
        d = (2, 3, 4)[i % 3]
        L = d * d + 1
        F = with_max_degree(rng, rng.randint(d + 1, bound_M(L, d)), d)
        f = label_with_budget(l21_as_instance(F), L)
        assert verify_l21(F, f).valid
        assert span_of(f) <= d * d
    assert time.perf_counter() - start < 120


def test_general_pairs(criterion):
    criterion(6, "200 random (G,H) pairs labeled with span <= L-1")
    rng = random.Random(6)
    done = 0
    while done < 200:
        d = rng.choice([1, 2, 3, 4])
        L = d * d + 1 + rng.randint(0, 6)
        M = bound_M(L, d)
        if M < d + 1:
            continue
        H = with_max_degree(rng, rng.randint(d + 1, M), d)
        G = supergraph(rng, H, d * d, rng.randint(0, 4 * H.n))
        inst = Instance(G, H)
        f = label_with_budget(inst, L)
        assert verify_instance(inst, f).valid
        assert span_of(f) <= L - 1 and max(f) <= L - 1
        done += 1


def test_bound_table(criterion):
    criterion(7, "M(10,3)=13, M(17,4)=38, closed forms at L=D^2+1 and D^2+D-2 for D in [1,50]")
    assert bound_M(10, 3) == 13
    assert bound_M(17, 4) == 38
    for d in range(1, 51):
        assert bound_M(d * d + 1, d) == (d // 2 + 1) * (d * d - d + 1) - 1
        if d >= 3:
            assert bound_M(d * d + d - 2, d) == (d // 2 + 1) * (d * d - 2) - 1


def test_baseline_bounds(criterion):
    criterion(8, "1000 graphs: first-fit <= D^2+2D, Chang-Kuo <= D^2+D, both >= optimum")
    rng = random.Random(8)
    compared = 0
    for i in range(1000):
        n = rng.randint(1, 10) if i % 2 else rng.randint(11, 40)
        G = bounded_degree(rng, n, rng.randint(0, 6))
        d = max_degree(G)
        ff, ck = first_fit(G), chang_kuo(G)
        assert verify_l21(G, ff).valid and verify_l21(G, ck).valid
        assert span_of(ff) <= d * d + 2 * d
        assert span_of(ck) <= d * d + d
        if n <= 10:
            opt = exact_lambda(G).optimum
            assert span_of(ff) >= opt and span_of(ck) >= opt
            compared += 1
    assert compared >= 500


def test_equitable_engine(criterion):
    criterion(9, "1000 random graphs: equitable proper colorings, < 60 s")
    start = time.perf_counter()
    rng = random.Random(9)
    for _ in range(1000):
        G = gnp(rng, rng.randint(1, 40), rng.random() * rng.random())
        L = max_degree(G) + 1 + rng.choice([0, 0, 1, 2, 5, 30])
        C = equitable_coloring(G, L)
        assert C.L == L and C.is_partition_of(G.n)
        assert all(not (G.neighbors(v) & cls) for cls in C.classes for v in cls)
        sizes = C.sizes()
        assert max(sizes) - min(sizes) <= 1
    assert time.perf_counter() - start < 60


def test_hamilton_engine(criterion):
    criterion(10, "1000 Posa graphs get verified hamilton cycles; Petersen injective span 9")
    rng = random.Random(10)
    found = 0
    while found < 1000:
        n = rng.randint(3, 30)
        G = gnp(rng, n, rng.uniform(0.5, 1.0))
        if not posa_cycle_condition(G):
            continue
        order = hamilton_cycle(G)
        assert sorted(order) == list(range(n))
        assert all(G.has_edge(order[i], order[(i + 1) % n]) for i in range(n))
        found += 1
    f = injective_labeling(petersen())
    assert verify_l21(petersen(), f).valid
    assert sorted(f) == list(range(10)) and span_of(f) == 9


def test_exact_against_enumeration(criterion):
    criterion(11, "branch and bound equals naive enumeration on 200 graphs, n <= 7")
    rng = random.Random(11)
    for _ in range(200):
        G = gnp(rng, rng.randint(1, 7), rng.random())
        inst = l21_as_instance(G)
        assert exact_span(inst).optimum == naive_min_span(inst)
        assert exact_lambda(G).optimum == naive_min_span(inst)
