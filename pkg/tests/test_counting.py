from fractions import Fraction

import pytest

from ramseylab.counting import (
    adversarial_T_search,
    are_isomorphic,
    base_graph,
    check_T,
    count_f_minus,
    count_f_minus_through,
    count_P,
    enumerate_copies,
    enumerate_P,
    extension_count,
    f_minus_members,
    rho_d_dense_check,
)
from ramseylab.density import classify
from ramseylab.graphs import (
    Graph,
    Seed,
    complete_graph,
    cycle_graph,
    empty_graph,
    gnp_sample,
    path_graph,
)

from oracles import (
    naive_base_graph_pairs,
    naive_copies,
    naive_count_f_minus,
    naive_count_f_minus_through,
    naive_extension_count,
    naive_P,
)

K3 = complete_graph(3)
C4 = cycle_graph(4)


def test_copy_fixtures():
    assert len(enumerate_copies(K3, complete_graph(4))) == 4
    assert len(enumerate_copies(C4, complete_graph(4))) == 3
    g = gnp_sample(9, 0.5, Seed(8))
    assert len(enumerate_copies(complete_graph(2), g)) == g.num_edges()
    with pytest.raises(ValueError):
        enumerate_copies(complete_graph(5), complete_graph(4))


def test_copies_match_oracle():
    patterns = [K3, C4, cycle_graph(5), complete_graph(4), path_graph(4)]
    for i in range(30):
        g = gnp_sample(8, 0.45, Seed(301, i))
        F = patterns[i % len(patterns)]
        mine = {(c.vertices, c.edges) for c in enumerate_copies(F, g).copies}
        assert mine == naive_copies(F, g), (i, F)


def test_anchored_copies():
    g = complete_graph(5)
    for e in g.edges:
        fam = enumerate_copies(K3, g, anchor=e)
        assert len(fam) == 3  # triangles of K5 through an edge
        assert all(e in c.edges for c in fam.copies)


def test_isomorphism():
    assert are_isomorphic(path_graph(3), complete_graph(3).without_edges([(0, 1)]))
    assert not are_isomorphic(path_graph(4), cycle_graph(4))
    assert are_isomorphic(Graph(3, []), Graph(3, []))


def test_f_minus_fixtures():
    assert count_f_minus(K3, path_graph(3)) == 1
    assert count_f_minus(K3, complete_graph(4)) == 12
    assert count_f_minus_through(K3, path_graph(3), (0, 1)) == 1
    assert count_f_minus_through(K3, path_graph(3), (1, 2)) == 1
    with pytest.raises(ValueError):
        count_f_minus_through(K3, path_graph(3), (0, 2))
    assert len(f_minus_members(C4)) == 1  # all edge deletions isomorphic


def test_f_minus_matches_oracle_and_sum_identity():
    patterns = [K3, C4, cycle_graph(5)]
    for i in range(24):
        g = gnp_sample(9, 0.4, Seed(302, i))
        F = patterns[i % len(patterns)]
        total = count_f_minus(F, g)
        assert total == naive_count_f_minus(F, g)
        anchored_sum = 0
        for e in g.edges:
            c = count_f_minus_through(F, g, e)
            assert c == naive_count_f_minus_through(F, g, e)
            anchored_sum += c
        # every family member has e(F)-1 edges
        assert anchored_sum == (F.num_edges() - 1) * total, (i, F)


def test_P_trivial_cases():
    assert count_P(K3, empty_graph(6), (0, 1), (2, 3)) == 0
    with pytest.raises(ValueError):
        enumerate_P(K3, empty_graph(6), (0, 1), (0, 1))
    # two disjoint single edges cannot satisfy the intersection condition
    z = Graph(6, [(0, 1), (2, 3)])
    assert count_P(C4, z, (0, 2), (1, 3)) == 0


def test_P_hand_instance():
    z = Graph(3, [(0, 1), (1, 2)])
    pairs = enumerate_P(K3, z, (1, 2), (0, 1))
    assert len(pairs) == 1
    a, b, s = pairs[0]
    assert a.edges == frozenset({(0, 1)}) and b.edges == frozenset({(1, 2)})
    assert s == 3


def test_P_matches_oracle():
    rng = Seed(303).generator()
    patterns = [K3, C4]
    checked = 0
    for i in range(25):
        g = gnp_sample(7, 0.5, Seed(304, i))
        if g.num_edges() < 2:
            continue
        F = patterns[i % 2]
        pairs = [tuple(int(x) for x in rng.integers(0, 7, size=4)) for _ in range(3)]
        for a, b, c, d in pairs:
            e1 = (min(a, b), max(a, b))
            e2 = (min(c, d), max(c, d))
            if a == b or c == d or e1 == e2:
                continue
            mine = {
                (tuple(sorted(x.vertices)), tuple(sorted(x.edges)),
                 tuple(sorted(y.vertices)), tuple(sorted(y.edges)), s)
                for x, y, s in enumerate_P(F, g, e1, e2)
            }
            ref = {
                (c1[0], c1[1], c2[0], c2[1], s)
                for c1, c2, s in naive_P(F, g, e1, e2)
            }
            assert mine == ref, (i, F, e1, e2)
            checked += 1
    assert checked >= 30


def test_extension_count_examples():
    k3e = complete_graph(3).without_edges([(0, 1)])
    assert extension_count([0, 1], k3e, [0, 1], complete_graph(5)) == 3
    assert extension_count([0, 1], k3e, [0, 1], empty_graph(5)) == 0
    with pytest.raises(ValueError):
        extension_count([0, 1, 2], complete_graph(3), [0, 1, 2], complete_graph(5))
    with pytest.raises(ValueError):
        extension_count([0, 1], k3e, [2, 2], complete_graph(5))


def test_extension_count_falling_factorial_in_complete_host():
    # in K_n every attachment works: the count is a falling factorial
    k3e = complete_graph(3).without_edges([(0, 1)])
    for n in (4, 6, 8):
        assert extension_count([0, 1], k3e, [0, 1], complete_graph(n)) == n - 2
    c4_rooted = cycle_graph(4)
    for n in (5, 7):
        assert extension_count([0, 2], c4_rooted, [0, 1], complete_graph(n)) == (n - 2) * (n - 3)


def test_extension_count_matches_oracle():
    hs = [complete_graph(3).without_edges([(0, 1)]), cycle_graph(4), path_graph(4)]
    roots = [[0, 1], [0, 2], [0, 3]]
    for i in range(18):
        g = gnp_sample(7, 0.5, Seed(305, i))
        H = hs[i % 3]
        R = roots[i % 3]
        assert extension_count(R, H, [0, 1], g) == naive_extension_count(R, H, [0, 1], g)


def test_base_graph_fixtures():
    prof3 = classify(K3)
    assert base_graph(prof3, path_graph(3)).edges == ((0, 2),)
    assert base_graph(prof3, empty_graph(3)).num_edges() == 0
    prof4 = classify(C4)
    assert base_graph(prof4, path_graph(4)).edges == ((0, 3),)
    for n in (3, 5, 7):
        assert base_graph(prof3, complete_graph(n)) == complete_graph(n)
    with pytest.raises(ValueError):
        base_graph(classify(complete_graph(4)), complete_graph(5))


def test_base_graph_matches_oracle_and_monotone():
    prof_by = {F: classify(F) for F in (K3, C4, cycle_graph(5))}
    pats = list(prof_by)
    for i in range(18):
        g = gnp_sample(7, 0.5, Seed(306, i))
        F = pats[i % 3]
        prof = prof_by[F]
        mine = set(base_graph(prof, g).edges)
        ref = naive_base_graph_pairs(F, prof.nearly_bipartite_witness, g)
        assert mine == ref, (i, F)
        if g.num_edges() >= 1:
            sub = g.without_edges([g.edges[0]])
            assert set(base_graph(prof, sub).edges) <= mine


def test_check_T_and_search():
    prof = classify(K3)
    k6 = complete_graph(6)
    rec = check_T(prof, k6, k6, 1, 1e-9)
    assert rec["basegraph_copies"] == 20 and rec["passes"] and not rec["vacuous"]
    sparse = Graph(6, [(0, 1)])
    rec = check_T(prof, k6, sparse, Fraction(1, 2), 1e-9)
    assert rec["vacuous"] and rec["passes"]
    with pytest.raises(ValueError):
        check_T(prof, k6, complete_graph(7), 1, 1e-9)
    rec = adversarial_T_search(prof, k6, 0.9, 1e-9, budget=60, seed=Seed(7))
    assert rec["basegraph_copies"] >= 1  # K6 at 90% density still completes copies


def test_rho_d_dense():
    assert rho_d_dense_check(complete_graph(8), 0.5, 1.0)["dense"]
    r = rho_d_dense_check(empty_graph(8), 0.5, 0.1)
    assert not r["dense"] and len(r["witness"]["W"]) >= 4
    r = rho_d_dense_check(cycle_graph(6), 0.5, 0.9)
    assert not r["dense"]
    W = r["witness"]["W"]
    assert len(W) >= 3 and r["witness"]["edges"] / r["witness"]["pairs"] < 0.9
    with pytest.raises(ValueError):
        rho_d_dense_check(complete_graph(21), 0.5, 0.5, mode="exact")
    h = rho_d_dense_check(cycle_graph(6), 0.5, 0.9, mode="heuristic", seed=Seed(1), restarts=40)
    assert h["dense"] is False  # refuter finds the sparse witness here


def test_pattern_cap_enforced():
    with pytest.raises(ValueError, match="cap"):
        enumerate_copies(complete_graph(11), complete_graph(12))


def test_rho_d_dense_matches_subset_enumeration():
    from fractions import Fraction as Fr
    from itertools import combinations
    from math import ceil, comb

    for i in range(10):
        g = gnp_sample(7, 0.5, Seed(411, i))
        for rho, d in ((0.4, 0.6), (0.5, 0.5)):
            mine = rho_d_dense_check(g, rho, d)
            floor = max(ceil(Fr(rho) * 7), 2)
            dense = True
            for k in range(floor, 8):
                for W in combinations(range(7), k):
                    edges = sum(1 for u, v in combinations(W, 2) if g.has_edge(u, v))
                    if Fr(edges) < Fr(d) * comb(k, 2):
                        dense = False
            assert mine["dense"] == dense, (i, rho, d)


def test_adversarial_search_finds_exhaustive_minimum():
    from itertools import combinations

    prof = classify(K3)
    k6 = complete_graph(6)
    lam = 0.9  # floor is 14 of 15 edges: only 15 candidate subgraphs
    best = None
    for drop in range(15):
        gp = Graph(6, [e for j, e in enumerate(k6.edges) if j != drop])
        copies = len(enumerate_copies(K3, base_graph(prof, gp)))
        best = copies if best is None else min(best, copies)
    rec = adversarial_T_search(prof, k6, lam, 1e-9, budget=400, seed=Seed(13))
    assert rec["basegraph_copies"] == best
