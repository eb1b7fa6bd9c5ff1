"""End-to-end smoke tests for the python bindings."""

import json
from fractions import Fraction

import pytest

import hq


def test_hypergraph_roundtrip():
    h = hq.Hypergraph(5, 3)
    h.add_edge([0, 1, 2])
    h.add_edge([1, 3, 4])
    assert h.n == 5 and h.k == 3 and h.edge_count == 2
    assert h.has_edge([0, 1, 2]) and not h.has_edge([0, 1, 3])
    assert hq.Hypergraph.from_text(h.to_text()) == h
    assert h.universe == hq.binom(5, 3) == 10


def test_add_edge_rejects_unsorted():
    h = hq.Hypergraph(5, 3)
    with pytest.raises(Exception):
        h.add_edge([2, 1, 0])


def test_samplers_hit_half_density():
    for ctor in (
        lambda: hq.sample_a(40, 3, seed=7),
        lambda: hq.sample_b(40, [2, 1], seed=7),
        lambda: hq.sample_d(40, 3, seed=7),
    ):
        c = ctor()
        assert c.nominal_density == (1, 2)
        g = c.materialize()
        rate = g.edge_count / hq.binom(40, 3)
        assert abs(rate - 0.5) < 0.03


def test_expansion_witness_spans_nothing():
    c = hq.sample_b(30, [2, 1], seed=11)
    fams = hq.expand_witness(c)
    g = c.materialize()
    assert hq.expansion_count(g, fams) == 0
    defect = hq.to_fraction(hq.expansion_defect(g, fams, 1, 2))
    assert defect == Fraction(len(fams[0]) * len(fams[1]), 2)


def test_clique_witness_is_contained():
    c = hq.sample_a(25, 3, seed=5)
    g = c.materialize()
    for clique in hq.cd_witness(c).cliques(3).edges():
        assert g.has_edge(clique)


def test_cd_ratio_counterexample():
    c = hq.sample_a(40, 3, seed=2)
    g1 = hq.color_class_graph(c, 1)
    r = hq.cd_threshold_defect(c.materialize(), g1, 2, 1, 2)
    assert abs(r.hits / r.total - 0.75) < 0.05
    assert float(r.defect) > 0


def test_deviation_exact_vs_sampled():
    g = hq.sample_d(12, 3, seed=4).materialize()
    exact = hq.deviation(g, 2, mode="exact")
    assert exact.exact and exact.value >= 0
    est = hq.deviation(g, 2, mode="sampled", samples=40000, seed=9)
    normalized = exact.value / 12**5
    assert abs(est.mean - normalized) < 5 * max(est.std_error, 1e-3)


def test_disc_defect_exact_small():
    g = hq.Hypergraph(6, 3)
    for e in hq.ksubsets(6, 3)[:10]:
        g.add_edge(e)
    r = hq.disc_defect(g, 1, 2, mode="exact")
    assert not r.lower_bound_only
    assert hq.to_fraction(r.defect) > 0
    assert len(r.witness) <= 6


def test_cycle_count_matches_exact_formula():
    pat = hq.build_cycle(2, 1)
    assert pat.v == 6 and len(pat.edges) == 4
    g = hq.sample_d(30, 3, seed=3).materialize()
    r = hq.count_labeled(pat, g, samples=200000, seed=8)
    falling = 30 * 29 * 28 * 27 * 26 * 25
    assert r.estimate == pytest.approx(falling / 16, rel=0.15)


def test_parity_census_theorem_filters():
    b = hq.sample_b(12, [2, 1], seed=6)
    r = hq.parity_census(b, 2, filter="last-pair")
    assert r.odd == 0 and r.even == r.population > 0
    a = hq.sample_a(10, 3, seed=6)
    r3 = hq.parity_census(a, 3, filter="all")
    assert r3.odd == 0


def test_pi_linear_certificate():
    pat = hq.build_cycle(2, 1)
    cert = hq.pi_linear_certificate_json(pat, [2, 1])
    assert cert is not None
    parsed = json.loads(cert)
    assert len(parsed["edge_order"]) == 4


def test_poset_exports():
    dot = hq.poset_dot(6)
    assert dot.startswith("digraph") and "CD(5) = Dev(6)" in dot
    data = json.loads(hq.poset_json(6))
    assert len(data["nodes"]) == 18
    assert len(data["edges"]) == 29
