import itertools
import math
from fractions import Fraction

import pytest

import signedspan as ss


def brute_plus(host, pattern, images):
    return sum(host.is_plus(images[u - 1], images[v - 1]) for u, v in pattern.edges)


def test_graph_basics():
    g = ss.SignedGraph(4, [(1, 2), (3, 4), (2, 3)])
    assert g.n == 4 and g.plus_count == 3 and g.balanced
    assert g.density == Fraction(1, 2)
    assert g.sign(1, 2) == 1 and g.sign(1, 3) == -1
    assert g.negated().plus_count == 3
    assert ss.SignedGraph.from_json(g.to_json()) == g
    assert g.digest == ss.SignedGraph(4, [(3, 4), (2, 3), (1, 2)]).digest


def test_bad_input_raises():
    with pytest.raises(ValueError):
        ss.SignedGraph(3, [(1, 4)])
    with pytest.raises(ValueError):
        ss.random_balanced(6)


def test_score_matches_direct_count():
    g = ss.random_labeling(7, 0.4, seed=3)
    p = ss.make_pattern("hamiltonian", 7)
    for images in itertools.islice(itertools.permutations(range(1, 8)), 50):
        s = ss.score(g, p, list(images))
        assert s["plus"] == brute_plus(g, p, images)
        assert s["plus"] + s["minus"] == p.m


def test_generators():
    assert ss.bipartite_minus_matching(8).plus_count == 14
    assert ss.minus_clique(13).balanced
    assert ss.minus_clique_order(10) == 7
    assert ss.random_balanced(12, seed=1).balanced
    assert ss.planted_cliques(9, 3).plus_count == 9
    assert ss.make_pattern("clique_factor", 12, delta=3).m == 18


def test_embed_meets_bound():
    g = ss.random_labeling(16, 0.3, seed=5)
    p = ss.make_pattern("random_bounded", 16, delta=3, seed=2)
    r = ss.embed(g, p)
    assert r["certificate_pass"]
    assert r["score"]["plus"] == brute_plus(g, p, r["embedding"])
    assert sorted(r["embedding"]) == list(range(1, 17))


def test_paths_and_cycle():
    g = ss.random_balanced(20, seed=7)
    r = ss.paths(g)
    assert r["certificate"]["passed"]
    assert sorted(r["cycle"]) == list(range(1, 21))
    assert r["cycle_plus"] == ss.cycle_plus_count(g, r["cycle"])
    assert r["cycle_plus"] >= r["stats"]["m_h"] - 2 * r["stats"]["k"]
    assert r["stats"]["m_h"] >= ss.path_target(20)


def test_triangles_certified():
    g = ss.random_balanced(12, seed=2)
    r = ss.triangles(g, shuffle_seed=4)
    assert r["certificate"]["passed"]
    assert sum(r["counts"]) == 4
    assert sum(r["t"]) == Fraction(1, 3)
    best = ss.best_triangle_factor(g)
    assert r["m_plus"] <= best["max_plus"]
    assert ss.triangles(ss.SignedGraph.all_plus(9))["m_plus"] == 9


def test_discrepancy_sum():
    g = ss.random_balanced(13, seed=11)
    r = ss.discrepancy(g)
    assert abs(r["signed_sum"]) == abs(ss.cycle_signed_sum(g, r["cycle"]))
    assert abs(r["signed_sum"]) >= r["guarantee"]


def test_spectrum_mean_identity():
    g = ss.bipartite_minus_matching(8)
    p = ss.make_pattern("matching", 8)
    s = ss.spectrum(g, p)
    assert s["permutations"] == math.factorial(8)
    assert sum(s["multiplicities"].values()) == math.factorial(8)
    assert s["mean"] == g.density * p.m
    assert max(s["values"]) == 4
    assert s["value_near_mean"]
    h = ss.best_hamiltonian(ss.SignedGraph.all_plus(6))
    assert h["max_plus"] == 6 and h["cycles"] == 60


def test_closed_forms():
    b = ss.embedding_bound(100, 0.5, 2, m=100)
    assert b["value"] == pytest.approx(48.6229, abs=1e-3)
    c = ss.constants()
    assert c["c1"] == pytest.approx(2 - math.sqrt(2), abs=1e-12)
    tp = ss.triangle_program()
    assert tp["analytic"]["value"] == pytest.approx(3 * math.sqrt(2) / 4 - 0.5, abs=1e-9)
    assert tp["grid"]["value"] == pytest.approx(tp["analytic"]["value"], abs=1e-6)
