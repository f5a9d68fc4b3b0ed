"""Acceptance criteria, all checked with exact equality.

Each test prints one PASS/FAIL line; a summary of all criteria is also
written at the end of the run (see conftest.py).
"""

import time
from fractions import Fraction

from oracles import all_edge_sets, brute_vertex_k_connected, dim_Hk_oracle

from graphcohom.cohomology import omega_powers, verify_basis
from graphcohom.fixtures import (
    bridge_triangles, example_graph, example_slope_fixture, fixture_corpus, k4_minus_edge,
)
from graphcohom.graph import (
    GenerationFailed, GraphError, RandomSpec, complete_graph, cycle_graph, delete_edges,
    find_product_scalars, moment_curve, path_graph, random_general_position, validate,
)
from graphcohom.profile import betti_generic, char_profile, dim_Hk, r_k, s_k
from graphcohom.structure import edge_connectivity, is_type_Ad
from graphcohom.verify import (
    random_corpus, verify_bound_theorem, verify_deleting_corollary, verify_deleting_lemma,
    verify_disconnecting_lemma, verify_edge_conn_theorem, verify_kunneth, verify_sum_rules, verify_trim,
    verify_type_Ad_bound, verify_vertex_conn_theorem,
)

SEED = 20240601


def report(n, ok, detail):
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


def test_criterion_01_example_reproduction():
    t0 = time.perf_counter()
    ok = True
    for G in (example_graph(), example_slope_fixture()):
        ok &= [r_k(G, k) for k in range(3)] == [3, 5, 5]
        ok &= [s_k(G, k) for k in range(3)] == [2, 0, 0]
        ok &= char_profile(G).c == (1, 1, 2)
    dt = time.perf_counter() - t0
    report(1, ok and dt < 1, f"r=(3,5,5) s=(2,0,0) c=(1,1,2) on both fixtures in {dt:.3f}s")


def test_criterion_02_complete_graphs():
    t0 = time.perf_counter()
    ok = True
    for m in range(2, 7):
        prof = char_profile(complete_graph(m))
        ok &= [prof.c_at(k) for k in range(m + 3)] == [1] * m + [0] * 3
    for m in range(2, 6):
        G = complete_graph(m)
        ok &= verify_basis(G, omega_powers(G))
    dt = time.perf_counter() - t0
    report(2, ok and dt < 30, f"c(K_m) all ones for m=2..6, omega basis m<=5, {dt:.2f}s")


def test_criterion_03_cycles():
    t0 = time.perf_counter()
    ok = True
    for m in range(3, 9):
        G = cycle_graph(m)
        ok &= char_profile(G).c == (1, m - 2, 1)
        ok &= betti_generic(G).beta == (1, m - 2, 1)
    dt = time.perf_counter() - t0
    report(3, ok and dt < 5, f"c = beta = (1, m-2, 1) for m=3..8, {dt:.2f}s")


def test_criterion_04_sum_rules():
    t0 = time.perf_counter()
    instances = fixture_corpus() + random_corpus(SEED, 120, max_m=10)
    bad = [name for name, G in instances if verify_sum_rules(G, name).verdict != "pass"]
    n_random = len(instances) - len(fixture_corpus())
    dt = time.perf_counter() - t0
    report(4, not bad and n_random >= 100 and dt < 300,
           f"{len(instances)} instances ({n_random} random, m<=10), failures {bad}, {dt:.1f}s")


def _connected_random(seed, m, density):
    G = random_general_position(RandomSpec(m, "er", density), seed)
    return G if G.is_connected() else None


def test_criterion_05_deleting_and_disconnecting():
    triples = fails = 0
    seed = SEED
    while triples < 120:
        seed += 1
        m = 3 + seed % 7
        G = random_general_position(RandomSpec(m, "er", 0.5), seed)
        t = 1 + seed % m
        lam = G.degree(t)
        for k in range(max(lam - 1, 0), lam + 1):
            fails += verify_deleting_lemma(G, t, k).verdict != "pass"
        for k in range(0, lam + 1):
            fails += verify_deleting_corollary(G, t, k).verdict != "pass"
        triples += 1
    cut_instances = 0
    fails += verify_disconnecting_lemma(bridge_triangles(), [(3, 4)], 0).verdict != "pass"
    seed = SEED
    while cut_instances < 25:
        seed += 1
        G = _connected_random(seed, 4 + seed % 6, 0.45)
        if G is None:
            continue
        size, cut = edge_connectivity(G)
        for k in range(size - 1, size + 1):
            fails += verify_disconnecting_lemma(G, cut.items, k).verdict != "pass"
        cut_instances += 1
    report(5, fails == 0, f"{triples} deletion triples, bridge + {cut_instances} minimum-cut instances, "
                          f"{fails} failures")


def test_criterion_06_kunneth():
    from graphcohom.graph import single_edge
    ok = verify_kunneth(single_edge(1), single_edge(2), 1, 1).lhs == (1, 2, 1)
    ok &= verify_kunneth(single_edge(1), complete_graph(3, 2), 1, 5).lhs == (1, 2, 2, 1)
    n = 0
    seed = SEED
    while n < 22:
        seed += 2
        G1 = random_general_position(RandomSpec(2 + seed % 3, "er", 0.6), seed)
        G2 = random_general_position(RandomSpec(2 + (seed // 3) % 3, "er", 0.6), seed + 1)
        try:
            a, b = find_product_scalars(G1, G2)
        except GraphError:
            continue
        rep = verify_kunneth(G1, G2, a, b)
        ok &= rep.verdict == "pass" and rep.witness["multiplicative_ok"]
        n += 1
    report(6, ok, f"K2xK2, K2xK3 and {n} random products; member images and convolution exact")


def _regular_instances():
    out = [(name, G) for name, G in fixture_corpus() if G.phi is not None]
    for seed in range(SEED, SEED + 400):
        m = 4 + seed % 7
        d = 2 + seed % 4
        try:
            out.append((f"reg{seed}", random_general_position(RandomSpec(m, "regular", degree=d), seed)))
        except GenerationFailed:
            continue
    return out


def test_criterion_07_connectivity_theorems():
    qualifying = violations = 0
    for name, G in _regular_instances():
        e = verify_edge_conn_theorem(G, name)
        v = verify_vertex_conn_theorem(G, name)
        if e.verdict == "vacuous":
            continue
        qualifying += 1
        violations += (e.verdict != "pass") + (v.verdict != "pass")
        # literal vertex-connectivity recheck by exhaustion
        violations += not brute_vertex_k_connected(G.m, list(G.edges), v.rhs)
    report(7, violations == 0 and qualifying >= 20,
           f"{qualifying} connected regular instances with c_d = 1, {violations} violations")


def _type_Ad_instances():
    out = [("K4-e", 3, k4_minus_edge())]
    out += [(f"P{m}", 2, path_graph(m)) for m in range(2, 8)]
    out += [(f"K{d}", d, complete_graph(d)) for d in range(2, 7)]
    out += [(f"C{m}", 3, cycle_graph(m)) for m in range(3, 8)]
    for seed in range(SEED, SEED + 200):
        m, d = 5 + seed % 5, 3 + seed % 2
        try:
            G = random_general_position(RandomSpec(m, "regular", degree=d), seed)
        except GenerationFailed:
            continue
        H = delete_edges(G, [G.edges[seed % len(G.edges)]])
        if is_type_Ad(H, d):
            out.append((f"reg{seed}-e", d, H))
    return out


def test_criterion_08_bounds():
    qualifying = fails = 0
    for name, G in _regular_instances():
        rep = verify_bound_theorem(G, name)
        qualifying += rep.verdict == "pass"
        fails += rep.verdict == "fail"
    equal = all(verify_bound_theorem(cycle_graph(m)).lhs == Fraction(m - 2) for m in range(3, 9))
    ad = _type_Ad_instances()
    ad_fails = sum(verify_type_Ad_bound(G, d, name).verdict != "pass" for name, d, G in ad)
    k4e = verify_type_Ad_bound(k4_minus_edge(), 3)
    ok = fails == 0 and equal and ad_fails == 0 and len(ad) >= 20 and k4e.lhs == 2 == k4e.rhs
    report(8, ok, f"bound on {qualifying} instances (equality on cycles), "
                  f"A_d bound on {len(ad)} instances, K4-e: 2 <= 2")


def test_criterion_09_trim():
    n = fails = 0
    for seed in range(SEED, SEED + 30):
        G = random_general_position(RandomSpec(5 + seed % 6, "er", 0.5), seed)
        for k in (1, 2, 3):
            rep = verify_trim(G, k)
            fails += rep.verdict != "pass"
        n += 1
    report(9, fails == 0 and n >= 20, f"{n} random instances x k=1..3, {fails} failures")


def test_criterion_10_membership_oracle():
    t0 = time.perf_counter()
    mismatches = checked = 0
    placements = {m: [moment_curve(m)] for m in range(1, 6)}
    for m in range(3, 6):
        placements[m].append(random_general_position(RandomSpec(m, "er", 0), 7 * m).phi)
    for m, phis in placements.items():
        for phi in phis:
            for edges in all_edge_sets(m):
                G = validate(phi, edges)
                for k in range(4):
                    checked += 1
                    mismatches += dim_Hk(G, k) != dim_Hk_oracle(G.phi, edges, k)
    dt = time.perf_counter() - t0
    report(10, mismatches == 0, f"{checked} (graph, k) pairs, m<=5, k<=3, {mismatches} mismatches, {dt:.1f}s")
