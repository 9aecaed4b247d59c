from fractions import Fraction

import pytest

from ramseylab.arrowing import decide_arrow
from ramseylab.booster import (
    Hypergraph,
    activated_set,
    alpha_tilde,
    brute_force_cores,
    build_hypergraph,
    c_xi,
    check_interactive_regular,
    classify_bad,
    construct_normal_family,
    embedding_pool,
    focus_set,
    hypergraph_stats,
    image_graph,
    make_booster_spec,
    pair_relations,
    profile_of,
    restrict_index_consistent,
    verify_core_properties,
    verify_index_consistent,
    verify_normal_family,
)
from ramseylab.graphs import (
    Graph,
    Seed,
    complete_graph,
    cycle_graph,
    gnp_sample,
    path_graph,
    star_graph,
    union,
)

from instances import interactive_instance, assert_instance_well_formed
from oracles import naive_bad_flags, naive_hypergraph_stats

K3 = complete_graph(3)


def test_booster_spec_rejects_arrowing_patterns():
    spec = make_booster_spec(cycle_graph(5), K3)
    assert len(spec.sigma) == 5
    with pytest.raises(ValueError):
        make_booster_spec(complete_graph(6), K3)


def test_focus_set_fixtures():
    Z = Graph(4, [(1, 2)])
    spec = make_booster_spec(path_graph(3), K3)
    fs = focus_set(Z, (2, 3, 1), spec, K3)  # image edges {2,3},{1,3}
    assert [Z.edges[i] for i in fs.members] == [(1, 2)]
    # no interaction at all
    Zfar = Graph(6, [(4, 5)])
    assert focus_set(Zfar, (0, 1, 2), spec, K3).members == ()
    # all triangle edges through a missing pair
    Z2 = complete_graph(4).without_edges([(0, 1)])
    spec2 = make_booster_spec(complete_graph(2), K3)
    members = {Z2.edges[i] for i in focus_set(Z2, (0, 1), spec2, K3).members}
    assert members == {(0, 2), (1, 2), (0, 3), (1, 3)}


def test_classify_bad_fixtures():
    Z = Graph(4, [(1, 2)])
    spec = make_booster_spec(path_graph(3), K3)
    flags = classify_bad(Z, (2, 3, 1), spec, K3)
    assert flags["B1"] and flags["bad"]
    Zfar = Graph(6, [(4, 5)])
    assert not classify_bad(Zfar, (0, 1, 2), spec, K3)["bad"]


def test_classify_bad_matches_naive_oracle():
    spec5 = make_booster_spec(cycle_graph(5), K3)
    rng = Seed(611).generator()
    for i in range(25):
        Z = gnp_sample(10, 0.4, Seed(610, i))
        h = tuple(int(x) for x in rng.permutation(10)[:5])
        mine = classify_bad(Z, h, spec5, K3)
        img = set(image_graph(spec5.B, h, 10).edges)
        U = union(Z, image_graph(spec5.B, h, 10))
        ref = naive_bad_flags(Z, img, K3, U)
        assert {k: mine[k] for k in ("B1", "B2", "B3")} == ref, (i, h)


def test_pair_relations_fixture():
    Z2 = complete_graph(4).without_edges([(0, 1)])
    spec2 = make_booster_spec(complete_graph(2), K3)
    r = pair_relations(Z2, (0, 1), spec2, K3, (0, 2), (1, 2))
    assert r == {"approx": True, "sim": True}
    assert c_xi(Z2, [], spec2, K3, (0, 2), (1, 2)) == 0
    assert c_xi(Z2, [(0, 1)], spec2, K3, (0, 2), (1, 2)) == 1
    with pytest.raises(ValueError):
        pair_relations(Z2, (0, 1), spec2, K3, (0, 2), (0, 2))


def test_sim_implies_approx_randomized():
    spec2 = make_booster_spec(complete_graph(2), K3)
    rng = Seed(612).generator()
    for i in range(15):
        Z = gnp_sample(8, 0.45, Seed(613, i))
        if Z.num_edges() < 2:
            continue
        h = tuple(int(x) for x in rng.permutation(8)[:2])
        ids = rng.integers(0, Z.num_edges(), size=2)
        if ids[0] == ids[1]:
            continue
        r = pair_relations(Z, h, spec2, K3, int(ids[0]), int(ids[1]))
        assert not (r["sim"] and not r["approx"])


def test_interactive_star_example():
    Z = Graph(6, complete_graph(5).edges)
    spec = make_booster_spec(star_graph(5), K3)
    rep = check_interactive_regular(Z, [(5, 0, 1, 2, 3, 4)], spec, K3)
    entry = rep["per_h"][0]
    assert entry["interactive"] and not entry["regular"]
    # Z arrows alone: never interactive
    rep = check_interactive_regular(complete_graph(6), [(0, 1)],
                                    make_booster_spec(complete_graph(2), K3), K3)
    assert rep["per_h"][0]["interactive"] is False
    # empty family: vacuous
    rep = check_interactive_regular(Z, [], spec, K3)
    assert rep["pair_interactive"] and rep["pair_regular"]


def test_activated_set_fixture_and_errors():
    Z = Graph(6, complete_graph(5).edges)
    spec = make_booster_spec(star_graph(5), K3)
    h = (5, 0, 1, 2, 3, 4)
    phi = decide_arrow(Z, K3).certificate
    A = activated_set(Z, [h], spec, K3, phi)
    members = set(focus_set(Z, h, spec, K3).members)
    assert A and A <= members
    assert A & members  # hits the unique hyperedge
    assert activated_set(Z, [], spec, K3, phi) == set()
    with pytest.raises(ValueError):
        activated_set(Z, [h], spec, K3, [0] * Z.num_edges())  # monochromatic phi


def test_fact_hitting_and_agreement_smoke():
    checked = 0
    for idx in range(40):
        inst = interactive_instance(idx)
        if inst is None:
            continue
        Z, F, spec, Xi, phis = inst["Z"], inst["F"], inst["spec"], inst["Xi"], inst["phis"]
        assert_instance_well_formed(inst)
        fss = [set(focus_set(Z, h, spec, F).members) for h in Xi]
        acts = [activated_set(Z, Xi, spec, F, phi) for phi in phis]
        for A in acts:
            for ms in fss:
                assert A & ms, "activated set missed a hyperedge"
        for i in range(len(phis)):
            for j in range(i + 1, len(phis)):
                for z in acts[i] & acts[j]:
                    assert phis[i][z] == phis[j][z]
        checked += 1
    assert checked >= 30


def test_profile_and_index_consistency():
    Z = complete_graph(6).without_edges([(0, 1)])
    spec = make_booster_spec(complete_graph(2), K3)
    prof = profile_of(Z, (0, 1), spec, K3)
    assert prof.pi == (0,) * 8
    Xi, out_prof, rep = restrict_index_consistent(Z, [(0, 1)], spec, K3, L=10, seed=Seed(3))
    assert Xi == [(0, 1)] and out_prof.pi == prof.pi
    assert verify_index_consistent(Z, Xi, spec, K3)
    # length filter drops everything when L is too small
    Xi, out_prof, rep = restrict_index_consistent(Z, [(0, 1)], spec, K3, L=3, seed=Seed(3))
    assert Xi == [] and rep["empty_reason"]


def test_partition_keep_frequency():
    # two embeddings with disjoint two-element focus sets: each kept with
    # probability 1/4, independently
    Z = Graph(6, [(0, 1), (1, 2), (3, 4), (4, 5)])
    spec = make_booster_spec(complete_graph(2), K3)
    Xi0 = [(0, 2), (3, 5)]
    nonempty = 0
    trials = 600
    for s in range(trials):
        Xi, prof, rep = restrict_index_consistent(Z, Xi0, spec, K3, L=4, seed=Seed(991, s))
        if Xi:
            assert verify_index_consistent(Z, Xi, spec, K3)
            nonempty += 1
    expected = 7 / 16
    sd = (expected * (1 - expected) / trials) ** 0.5
    assert abs(nonempty / trials - expected) < 3 * sd


def test_restriction_outputs_always_index_consistent():
    # breadth: random hosts, all regular single-edge embeddings as the
    # input family, every non-empty output must verify
    spec = make_booster_spec(complete_graph(2), K3)
    produced = 0
    kept_total = 0
    for i in range(160):
        n = 7 + i % 3
        Z = gnp_sample(n, 0.35, Seed(777, i))
        if Z.num_edges() < 2:
            continue
        pool = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if not Z.has_edge(u, v)
        ][:8]
        Xi0 = [h for h in pool if not classify_bad(Z, h, spec, K3)["bad"]]
        if not Xi0:
            continue
        Xi, prof, rep = restrict_index_consistent(Z, Xi0, spec, K3, L=12,
                                                  seed=Seed(778, i))
        produced += 1
        kept_total += len(Xi)
        assert verify_index_consistent(Z, Xi, spec, K3)
        if prof is not None and Xi:
            lengths = {len(focus_set(Z, h, spec, K3).members) for h in Xi}
            assert lengths <= {prof.length}
    assert produced >= 150
    assert kept_total >= 1  # the partition keeps something somewhere


def test_alpha_tilde_values():
    assert alpha_tilde(path_graph(3)) == Fraction(1, 6318)
    assert alpha_tilde(complete_graph(2)) == Fraction(1, 13 * 16 * 2)


def test_embedding_pool():
    pool = embedding_pool(complete_graph(2), 5)
    assert len(pool) == 10  # one per pair
    sampled = embedding_pool(cycle_graph(4), 8, "sampled", 20, Seed(4))
    assert len(sampled) == 20
    images = {(frozenset(h), frozenset((min(h[u], h[v]), max(h[u], h[v]))
                                        for u, v in cycle_graph(4).edges))
              for h in sampled}
    assert len(images) == 20


def test_normal_family_pipeline_toy():
    Z = complete_graph(6).without_edges([(0, 1)])
    spec = make_booster_spec(complete_graph(2), K3)
    params = dict(D=4, delta=Fraction(1, 12), p=0.5, alpha=Fraction(1, 4))
    xi0, report = construct_normal_family(Z, spec, K3, params, seed=Seed(12))
    assert xi0 == [(0, 1)]
    assert report["removed"]["not_arrowing"] == 14
    check = verify_normal_family(Z, xi0, spec, K3, params)
    assert check["ok"], check
    # determinism
    xi0b, reportb = construct_normal_family(Z, spec, K3, params, seed=Seed(12))
    assert xi0b == xi0 and reportb["psi_s"] == report["psi_s"]


def test_normal_family_flags_z_arrows_alone():
    spec = make_booster_spec(complete_graph(2), K3)
    params = dict(D=4, delta=Fraction(1, 12), p=0.5, alpha=Fraction(1, 4))
    _, report = construct_normal_family(complete_graph(6), spec, K3, params, seed=Seed(1))
    assert report["z_arrows_alone"]


def test_normal_family_starvation_reported():
    # sparse Z: no union arrows, pipeline starves at the arrow filter
    Z = gnp_sample(8, 0.2, Seed(77))
    spec = make_booster_spec(complete_graph(2), K3)
    params = dict(D=4, delta=Fraction(1, 12), p=0.2, alpha=Fraction(1, 4))
    xi0, report = construct_normal_family(Z, spec, K3, params, seed=Seed(13))
    assert xi0 == []
    assert report["starved_stage"] == "psi1"


def test_hypergraph_stats_fixture_and_oracle():
    st = hypergraph_stats(Hypergraph(2, [(0, 1)]), Fraction(1, 2))
    assert st["d"] == 1 and st["delta_j"][2] == 2 and st["delta"] == 2
    with pytest.raises(ValueError):
        hypergraph_stats(Hypergraph(3, []), Fraction(1, 2))
    with pytest.raises(ValueError):
        hypergraph_stats(Hypergraph(2, [(0, 1)]), 0)
    from math import comb

    rng = Seed(888).generator()
    for i in range(12):
        m = int(rng.integers(4, 8))
        ell = int(rng.integers(2, min(4, m) + 1))
        edges = set()
        target = min(int(rng.integers(1, 6)), comb(m, ell))
        while len(edges) < target:
            edges.add(tuple(sorted(rng.choice(m, size=ell, replace=False).tolist())))
        tau = Fraction(int(rng.integers(1, 5)), 7)
        mine = hypergraph_stats(Hypergraph(m, edges), tau)
        ref = naive_hypergraph_stats(m, edges, tau)
        assert mine["d"] == ref["d"]
        assert mine["Delta1"] == ref["Delta1"] and mine["Delta2"] == ref["Delta2"]
        assert mine["delta"] == ref["delta"]
        assert mine["delta_j"] == ref["delta_j"]
        # exact rationals: relative error is exactly zero, well under 1e-12
        assert abs(mine["delta_float"] - float(ref["delta"])) <= 1e-12 * max(1.0, float(ref["delta"]))


def test_stats_internal_identities():
    rng = Seed(889).generator()
    for i in range(10):
        m = int(rng.integers(4, 9))
        edges = set()
        while len(edges) < 3:
            edges.add(tuple(sorted(rng.choice(m, size=3, replace=False).tolist())))
        st = hypergraph_stats(Hypergraph(m, edges), Fraction(1, 3))
        assert st["Delta2"] <= st["Delta1"] <= st["e"]
        assert st["d"] * st["m"] == st["ell"] * st["e"]


def test_cores_small_fixtures():
    fam = brute_force_cores(Hypergraph(2, [(0, 1)]))
    assert sorted(map(sorted, fam.cores)) == [[0], [1]]
    fam = brute_force_cores(Hypergraph(3, []))
    assert len(fam) == 1 and fam.cores[0] == frozenset()
    rep = verify_core_properties(fam, Hypergraph(3, []))
    assert rep["c3_ok"]
    with pytest.raises(ValueError):
        brute_force_cores(Hypergraph(21, [(0, 1)]))


def test_every_hitting_set_contains_a_core_randomized():
    rng = Seed(890).generator()
    for i in range(20):
        m = int(rng.integers(3, 10))
        k = int(rng.integers(1, 6))
        edges = set()
        for _ in range(k):
            size = int(rng.integers(1, min(4, m) + 1))
            edges.add(tuple(sorted(rng.choice(m, size=size, replace=False).tolist())))
        H = Hypergraph(m, edges)
        fam = brute_force_cores(H)
        rep = verify_core_properties(fam, H, beta=Fraction(1, 10), gamma=0.2)
        assert rep["c3_ok"], (i, edges)


def test_build_hypergraph_profiled_lengths():
    inst = interactive_instance(2)  # two-block host
    Z, F, spec, Xi = inst["Z"], inst["F"], inst["spec"], inst["Xi"]
    bh = build_hypergraph(Z, Xi, spec, F)
    lengths = {len(fs.members) for fs in bh.focus_sets}
    assert lengths == {8}
    # non-bad embeddings have |M_h| divisible by e(F)-1
    for fs in bh.focus_sets:
        assert len(fs.members) % (F.num_edges() - 1) == 0


def test_no_b1_b2_implies_regular():
    # the regularity consequence: without the first two badness modes,
    # every non-shared Z-edge focuses on at most one booster edge
    from ramseylab.booster import focus_map, image_edges

    spec5 = make_booster_spec(cycle_graph(5), K3)
    spec2 = make_booster_spec(complete_graph(2), K3)
    rng = Seed(614).generator()
    checked = 0
    for i in range(30):
        Z = gnp_sample(9, 0.45, Seed(615, i))
        for spec in (spec2, spec5):
            h = tuple(int(x) for x in rng.permutation(9)[: spec.B.n])
            flags = classify_bad(Z, h, spec, K3)
            if flags["B1"] or flags["B2"]:
                continue
            img = set(image_edges(spec.B, h))
            fm = focus_map(Z, h, spec, K3)
            for e, foci in fm.items():
                if e not in img:
                    assert len(foci) <= 1, (i, e, foci)
            checked += 1
    assert checked >= 20


def test_degree_bound_report():
    from ramseylab.booster import degree_bound_report

    st = hypergraph_stats(Hypergraph(2, [(0, 1)]), Fraction(1, 2))
    rep = degree_bound_report(st, D=4, p=0.5, delta=Fraction(1, 12), vF=3, n=6)
    assert rep["Delta1_within"] and rep["Delta1"] == 1
    assert rep["Delta2"] == 1
