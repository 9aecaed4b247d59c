"""Focus sets, booster embeddings, normal families, activated sets, and
the container-side hypergraph with its degree statistics.

An embedding h is a tuple sending the booster pattern's vertices into
the host vertex range; its image graph lives on the host vertex set.
Copies, focus relations and badness are all evaluated literally by copy
enumeration in Z ∪ h(B).
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, factorial, log

import numpy as np

from .arrowing import (
    BRUTE_FORCE_EDGE_CAP,
    brute_force_arrow,
    copy_constraints,
    decide_arrow,
    decide_arrow_union,
    first_f_free_coloring,
    is_f_free,
)
from .counting import count_P, enumerate_copies
from .graphs import Graph, Seed, complete_graph, union


def _norm(u, v):
    return (u, v) if u < v else (v, u)


# -- booster specification ----------------------------------------------


@dataclass(frozen=True)
class BoosterSpec:
    """Booster pattern with its fixed F-free colouring and edge order."""

    B: Graph
    sigma: tuple  # colour per B EdgeId, F-free

    @property
    def K(self):
        return self.B.num_edges()


def make_booster_spec(B, F):
    """Fix sigma as the lexicographically first F-free colouring of B.

    Fails when B arrows F, i.e. when B is not a booster at all.
    """
    sigma = first_f_free_coloring(B, F)
    if sigma is None:
        raise ValueError("B arrows F: no F-free colouring exists")
    return BoosterSpec(B=B, sigma=tuple(sigma))


def image_graph(B, h, n):
    return Graph(n, [(h[u], h[v]) for u, v in B.edges])


def image_edges(B, h):
    """Host pairs of the booster edges, in B's edge order."""
    return [_norm(h[u], h[v]) for u, v in B.edges]


# -- focusing ------------------------------------------------------------


def mixed_copies(Z, h, spec, F):
    """Copies of F in Z ∪ h(B) that contain at least one booster edge.

    Returns a list of (copy, z_only_edges, booster_edge_indices); every
    copy relevant to focusing and badness contains a booster edge, so
    anchored enumeration over the booster edges is complete.
    """
    B = spec.B
    img = image_edges(B, h)
    img_index = {e: j for j, e in enumerate(img)}
    U = union(Z, image_graph(B, h, Z.n))
    zedges = set(Z.edges)
    seen = {}
    for be in img:
        for copy in enumerate_copies(F, U, anchor=be).copies:
            key = (copy.vertices, copy.edges)
            if key in seen:
                continue
            boost = frozenset(img_index[e] for e in copy.edges if e in img_index)
            zonly = frozenset(e for e in copy.edges if e in zedges and e not in img_index)
            seen[key] = (copy, zonly, boost)
    return list(seen.values())


def focus_map(Z, h, spec, F):
    """z-edge -> set of booster edge indices it focuses on.

    An edge of Z focuses on a booster edge when some copy of F in
    Z ∪ h(B) contains both; shared edges (in Z and in the image) count
    on the Z side as well.
    """
    foci = defaultdict(set)
    img = image_edges(spec.B, h)
    img_set = set(img)
    zedges = set(Z.edges)
    for copy, _zonly, boost in mixed_copies(Z, h, spec, F):
        for e in copy.edges:
            if e in zedges:
                foci[e].update(boost)
    # an edge in both Z and the image focuses via any copy through it
    for e in zedges & img_set:
        foci[e].add(img.index(e))
    return dict(foci)


@dataclass(frozen=True)
class FocusSet:
    h: tuple
    members: tuple  # EdgeIds of Z, sorted by the global edge order


def focus_set(Z, h, spec, F):
    fm = focus_map(Z, h, spec, F)
    return FocusSet(h=h, members=tuple(sorted(Z.edge_id(*e) for e in fm)))


def classify_bad(Z, h, spec, F):
    """Literal evaluation of the three badness conditions.

    B1: one copy with a Z-only edge and two booster edges.  B2: two
    copies sharing a Z-only edge, using two different booster edges.
    B3: two copies sharing a Z-only edge and a booster edge.
    """
    copies = mixed_copies(Z, h, spec, F)
    b1 = any(zonly and len(boost) >= 2 for _, zonly, boost in copies)
    b2 = b3 = False
    by_zedge = defaultdict(list)
    for idx, (_, zonly, boost) in enumerate(copies):
        if not boost:
            continue
        for e in zonly:
            by_zedge[e].append(idx)
    for e, idxs in by_zedge.items():
        for i, j in combinations(idxs, 2):
            s1 = copies[i][2]
            s2 = copies[j][2]
            if s1 & s2:
                b3 = True
            if len(s1 | s2) >= 2:
                b2 = True
            if b2 and b3:
                break
        if b2 and b3:
            break
    return {"B1": b1, "B2": b2, "B3": b3, "bad": b1 or b2 or b3}


def pair_relations(Z, h, spec, F, e1, e2):
    """Connection relations of two Z-edges w.r.t. one embedding.

    Edges may be given as EdgeIds or vertex pairs.
    """
    if isinstance(e1, int):
        p1, p2 = Z.edges[e1], Z.edges[e2]
    else:
        p1, p2 = _norm(*e1), _norm(*e2)
    if p1 == p2:
        raise ValueError("edges must be distinct")
    fm = focus_map(Z, h, spec, F)
    f1 = fm.get(p1, set())
    f2 = fm.get(p2, set())
    approx = bool(f1) and bool(f2)
    sim = approx and len(f1 | f2) == 1
    return {"approx": approx, "sim": sim}


def c_xi(Z, Xi, spec, F, e1, e2):
    """Number of embeddings in the family connecting the two edges."""
    return sum(1 for h in Xi if pair_relations(Z, h, spec, F, e1, e2)["approx"])


# -- interactivity --------------------------------------------------------


def check_interactive_regular(Z, Xi, spec, F, budget=None):
    """Per-embedding interactivity and regularity report."""
    z_res = decide_arrow(Z, F, budget=budget)
    b_res = decide_arrow(spec.B, F, budget=budget)
    reports = []
    for h in Xi:
        entry = {"h": h}
        entry["edge_disjoint"] = not (set(image_edges(spec.B, h)) & set(Z.edges))
        u_res = decide_arrow_union(Z, image_graph(spec.B, h, Z.n), F, budget=budget)
        entry["union_verdict"] = u_res.verdict
        fm = focus_map(Z, h, spec, F)
        entry["regular"] = all(len(s) <= 1 for s in fm.values())
        if "undecided" in (z_res.verdict, b_res.verdict, u_res.verdict):
            entry["interactive"] = None  # budget exhausted somewhere
        else:
            entry["interactive"] = (
                entry["edge_disjoint"]
                and z_res.verdict == "not_arrows"
                and b_res.verdict == "not_arrows"
                and u_res.verdict == "arrows"
            )
        reports.append(entry)
    return {
        "Z_verdict": z_res.verdict,
        "B_verdict": b_res.verdict,
        "per_h": reports,
        "pair_interactive": all(r["interactive"] for r in reports) if reports else True,
        "pair_regular": all(r["regular"] for r in reports) if reports else True,
    }


# -- embedding pools -------------------------------------------------------


def embedding_pool(B, n, mode="full", size=None, seed=None, max_tries_factor=50):
    """Distinct images of B in K_n, as representative embedding tuples.

    Full mode enumerates every unlabelled copy; sampled mode draws
    uniform injections and dedupes images until `size` distinct ones.
    """
    if mode == "full":
        return [c.map for c in enumerate_copies(B, complete_graph(n)).copies]
    if mode != "sampled":
        raise ValueError(f"unknown pool mode {mode!r}")
    if not size or size < 1:
        raise ValueError("sampled pool needs a positive size")
    rng = (seed or Seed()).generator()
    seen = {}
    tries = 0
    while len(seen) < size and tries < max_tries_factor * size:
        tries += 1
        h = tuple(int(x) for x in rng.permutation(n)[: B.n])
        es = frozenset(_norm(h[u], h[v]) for u, v in B.edges)
        key = (frozenset(h), es)
        if key not in seen:
            seen[key] = h
    return list(seen.values())


def alpha_tilde(B):
    """Normal-family selection constant 1/(13 v(B)^4 v(B)!)."""
    return Fraction(1, 13 * B.n**4 * factorial(B.n))


# -- the normal-family pipeline -------------------------------------------


def construct_normal_family(
    Z,
    spec,
    F,
    params,
    seed=None,
    pool=None,
):
    """Filter and thin an embedding pool into a family satisfying the
    checkable normality conditions (overlap, badness, pair cap,
    edge-disjointness, arrowing unions).

    `params` needs D, delta and p; optional: alpha (selection-rate
    override), pool_size (sampled pool), arrow_filter (default True),
    budget (arrowing node budget).  Returns (family, report).
    """
    seed = seed or Seed()
    D = params["D"]
    delta = params["delta"]
    p = params["p"]
    arrow_filter = params.get("arrow_filter", True)
    budget = params.get("budget")
    n = Z.n
    B = spec.B

    report = {"params": {k: str(v) for k, v in params.items()}, "removed": Counter()}
    z_res = decide_arrow(Z, F, budget=budget)
    report["z_arrows_alone"] = z_res.verdict == "arrows"

    if pool is None:
        pool_size = params.get("pool_size")
        if pool_size:
            pool = embedding_pool(B, n, "sampled", pool_size, seed.substream(0))
            report["pool_mode"] = f"sampled({pool_size})"
        else:
            pool = embedding_pool(B, n, "full")
            report["pool_mode"] = "full"
    else:
        report["pool_mode"] = "supplied"
    report["pool"] = len(pool)

    # stage 1: arrowing unions
    psi1 = []
    memo = {}
    if arrow_filter:
        for h in pool:
            key = frozenset(image_edges(B, h))
            if key not in memo:
                res = decide_arrow_union(Z, image_graph(B, h, n), F, budget=budget)
                memo[key] = res.verdict
            v = memo[key]
            if v == "arrows":
                psi1.append(h)
            else:
                report["removed"]["not_arrowing" if v == "not_arrows" else "undecided"] += 1
    else:
        psi1 = list(pool)
        report["arrow_filter_disabled"] = True
    report["psi1"] = len(psi1)

    # stage 2: badness
    psi2 = []
    for h in psi1:
        flags = classify_bad(Z, h, spec, F)
        if flags["bad"]:
            for key in ("B1", "B2", "B3"):
                if flags[key]:
                    report["removed"][key] += 1
        else:
            psi2.append(h)
    report["psi2"] = len(psi2)

    # stage 3: heavy connected pairs
    heavy_cap = Fraction(D) / (Fraction(p) * Fraction(n) ** Fraction(delta))
    pair_cache = {}
    psi3 = []
    for h in psi2:
        fm = focus_map(Z, h, spec, F)
        groups = defaultdict(list)
        for e, foci in fm.items():
            if len(foci) == 1:
                groups[next(iter(foci))].append(e)
        heavy = False
        for es in groups.values():
            for e1, e2 in combinations(sorted(es), 2):
                key = (e1, e2)
                if key not in pair_cache:
                    pair_cache[key] = count_P(F, Z, e1, e2)
                if pair_cache[key] > heavy_cap:
                    heavy = True
                    break
            if heavy:
                break
        if heavy:
            report["removed"]["heavy_pair"] += 1
        else:
            psi3.append(h)
    report["psi3"] = len(psi3)

    # stage 4: random selection with repetition
    a_eff = Fraction(params["alpha"]) if "alpha" in params else alpha_tilde(B)
    eps = 2 * a_eff
    target = int(round(eps * n * n))
    draws = min(target, len(psi3))
    report["alpha_effective"] = str(a_eff)
    report["selection_target"] = target
    report["selection_draws"] = draws
    report["selection_truncated"] = target > len(psi3)
    if draws == 0:
        report["starved_stage"] = "selection" if psi3 else _starved_stage(report)
        report["xi0"] = 0
        report["removed"] = dict(report["removed"])
        return [], report
    rng = seed.substream(1).generator()
    chosen = {tuple(psi3[int(i)]) for i in rng.integers(0, len(psi3), size=draws)}
    psi_s = [h for h in psi3 if tuple(h) in chosen]  # keep pool order
    report["psi_s"] = len(psi_s)

    # stage 5: pairwise vertex overlap <= 1
    vsets = [frozenset(h) for h in psi_s]
    clash = set()
    for i, j in combinations(range(len(psi_s)), 2):
        if len(vsets[i] & vsets[j]) >= 2:
            clash.add(i)
            clash.add(j)
    psi4 = [h for i, h in enumerate(psi_s) if i not in clash]
    report["removed"]["overlap"] += len(clash)
    report["psi4"] = len(psi4)

    # stage 6: connection cap, deterministic sequential pass in pool order
    cap = Fraction(1) / (Fraction(p) * Fraction(n) ** (Fraction(delta) / 2))
    counts = Counter()
    capped = []
    for h in psi4:
        members = sorted(Z.edge_id(*e) for e in focus_map(Z, h, spec, F))
        pairs = list(combinations(members, 2))
        if any(counts[pr] + 1 > cap for pr in pairs):
            report["removed"]["pair_cap"] += 1
            continue
        for pr in pairs:
            counts[pr] += 1
        capped.append(h)
    report["after_cap"] = len(capped)

    # stage 7: edge-disjointness from Z
    zedges = set(Z.edges)
    xi0 = []
    for h in capped:
        if set(image_edges(B, h)) & zedges:
            report["removed"]["edge_clash"] += 1
        else:
            xi0.append(h)
    report["xi0"] = len(xi0)
    if not xi0:
        report["starved_stage"] = _starved_stage(report)
    report["removed"] = dict(report["removed"])
    return xi0, report


def _starved_stage(report):
    for stage in ("psi1", "psi2", "psi3", "psi_s", "psi4", "after_cap", "xi0"):
        if report.get(stage) == 0:
            return stage
    return "none"


def verify_normal_family(Z, Xi0, spec, F, params, arrow_filter=True, budget=None):
    """Independent re-verification of the five checkable conditions.

    Deliberately avoids the constructor's code paths: badness is checked
    by a direct scan over all F-copies of the union, and arrowing uses
    the brute-force oracle whenever the instance fits under its cap.
    """
    B = spec.B
    n = Z.n
    zedges = set(Z.edges)
    violations = []

    for i, j in combinations(range(len(Xi0)), 2):
        if len(set(Xi0[i]) & set(Xi0[j])) >= 2:
            violations.append(("overlap", i, j))

    for i, h in enumerate(Xi0):
        if set(image_edges(B, h)) & zedges:
            violations.append(("edge_clash", i))

    for i, h in enumerate(Xi0):
        if _naive_is_bad(Z, h, spec, F):
            violations.append(("bad", i))

    cap = Fraction(1) / (Fraction(params["p"]) * Fraction(n) ** (Fraction(params["delta"]) / 2))
    counts = Counter()
    for h in Xi0:
        members = _naive_focus_members(Z, h, spec, F)
        for pr in combinations(members, 2):
            counts[pr] += 1
    for pr, c in counts.items():
        if c > cap:
            violations.append(("pair_cap", pr, c))

    if arrow_filter:
        for i, h in enumerate(Xi0):
            U = union(Z, image_graph(B, h, n))
            k = len({e for c in copy_constraints(U, F) for e in c})
            if k <= BRUTE_FORCE_EDGE_CAP:
                res = brute_force_arrow(U, F)
            else:
                res = decide_arrow(U, F, budget=budget)
            if res.verdict != "arrows":
                violations.append(("union_not_arrowing", i, res.verdict))

    return {"ok": not violations, "violations": violations}


def _naive_is_bad(Z, h, spec, F):
    """Badness by a blunt scan over all F-copies of the union."""
    B = spec.B
    img = set(image_edges(B, h))
    U = union(Z, image_graph(B, h, Z.n))
    zedges = set(Z.edges)
    copies = []
    for c in enumerate_copies(F, U).copies:
        zonly = {e for e in c.edges if e in zedges and e not in img}
        boost = {e for e in c.edges if e in img}
        copies.append((c, zonly, boost))
    for _, zonly, boost in copies:
        if zonly and len(boost) >= 2:
            return True
    for (c1, z1, s1), (c2, z2, s2) in combinations(copies, 2):
        if not (s1 and s2):
            continue
        if not (z1 & z2):
            continue
        if s1 & s2:
            return True
        if len(s1 | s2) >= 2:
            return True
    return False


def _naive_focus_members(Z, h, spec, F):
    """Focus set via full copy enumeration (no anchoring)."""
    B = spec.B
    img = set(image_edges(B, h))
    U = union(Z, image_graph(B, h, Z.n))
    zedges = set(Z.edges)
    members = set()
    for c in enumerate_copies(F, U).copies:
        if c.edges & img:
            members.update(Z.edge_id(*e) for e in c.edges if e in zedges)
    return tuple(sorted(members))


# -- index consistency ------------------------------------------------------


@dataclass(frozen=True)
class Profile:
    """Map from focus-set position to booster edge index (0-based)."""

    pi: tuple

    @property
    def length(self):
        return len(self.pi)


def profile_of(Z, h, spec, F):
    """Profile of M(Z,h(B)); requires each member to focus on exactly
    one booster edge (regularity)."""
    fm = focus_map(Z, h, spec, F)
    members = sorted(((Z.edge_id(*e), e) for e in fm), key=lambda t: t[0])
    pi = []
    for _eid, e in members:
        foci = fm[e]
        if len(foci) != 1:
            raise ValueError("profile undefined: an edge focuses on several booster edges")
        pi.append(next(iter(foci)))
    return Profile(pi=tuple(pi))


def restrict_index_consistent(Z, Xi0, spec, F, L, seed=None):
    """Keep a majority-profile subfamily and thin it by a random edge
    partition so every shared edge sits at the same focus-set position.

    Returns (Xi, Profile, report); the result may be empty at small n,
    in which case the report suggests retrying with another seed.
    """
    seed = seed or Seed()
    report = {"input": len(Xi0), "L": L}
    profs = []
    for h in Xi0:
        pi = profile_of(Z, h, spec, F)
        if pi.length <= L:
            profs.append((h, pi))
    report["within_L"] = len(profs)
    if not profs:
        report["empty_reason"] = "all focus sets longer than L"
        return [], None, report

    tally = Counter(pi.pi for _, pi in profs)
    top = max(tally.values())
    majority = min(pi for pi, c in tally.items() if c == top)  # lexicographic tie-break
    chosen = [(h, pi) for h, pi in profs if pi.pi == majority]
    ell = len(majority)
    report["majority_profile"] = list(majority)
    report["profile_count"] = len(chosen)

    if ell == 0:
        xi = [h for h, _ in chosen]
        report["kept"] = len(xi)
        return xi, Profile(pi=()), report

    if len(chosen) == 1:
        # a one-embedding family is index consistent as it stands
        report["kept"] = 1
        report["trivial_singleton"] = True
        return [chosen[0][0]], Profile(pi=majority), report

    rng = seed.generator()
    classes = rng.integers(0, ell, size=Z.num_edges())
    xi = []
    for h, _pi in chosen:
        members = sorted(Z.edge_id(*e) for e in focus_map(Z, h, spec, F))
        if all(int(classes[eid]) == i for i, eid in enumerate(members)):
            xi.append(h)
    report["kept"] = len(xi)
    if not xi:
        report["empty_reason"] = "random partition kept nothing; retry with a fresh seed"
    return xi, Profile(pi=majority), report


def verify_index_consistent(Z, Xi, spec, F):
    """Direct check: shared edges occupy the same position everywhere."""
    index_of = {}
    for h in Xi:
        members = sorted(Z.edge_id(*e) for e in focus_map(Z, h, spec, F))
        for i, eid in enumerate(members):
            if index_of.setdefault(eid, i) != i:
                return False
    return True


# -- activated sets ----------------------------------------------------------


def activated_set(Z, Xi, spec, F, phi):
    """Edge ids of Z activated by phi, sigma and some embedding of the family.

    Scans monochromatic copies of F in the joint colouring of each union;
    any such copy is mixed, so anchored enumeration over booster edges is
    complete.  Rejects non-F-free colourings.
    """
    ok, _ = is_f_free(phi, Z, F)
    if not ok:
        raise ValueError("phi is not F-free on Z")
    ok, _ = is_f_free(list(spec.sigma), spec.B, F)
    if not ok:
        raise ValueError("sigma is not F-free on B")
    activated = set()
    zedges = set(Z.edges)
    for h in Xi:
        img = image_edges(spec.B, h)
        if set(img) & zedges:
            raise ValueError("embedding shares an edge with Z: pair is not interactive")
        joint = {e: spec.sigma[j] for j, e in enumerate(img)}
        for e in zedges:
            joint[e] = phi[Z.edge_id(*e)]
        for copy, _zonly, _boost in mixed_copies(Z, h, spec, F):
            cols = {joint[e] for e in copy.edges}
            if len(cols) == 1:
                activated.update(Z.edge_id(*e) for e in copy.edges if e in zedges)
    return activated


# -- hypergraph and container statistics --------------------------------------


class Hypergraph:
    """Plain hypergraph on vertices 0..m-1 with deduplicated edges."""

    def __init__(self, m, edges):
        self.m = m
        norm = {tuple(sorted(set(e))) for e in edges}
        for e in norm:
            for v in e:
                if not 0 <= v < m:
                    raise ValueError(f"hyperedge vertex {v} out of range")
        self.edges = tuple(sorted(norm))

    def uniformity(self):
        sizes = {len(e) for e in self.edges}
        return sizes.pop() if len(sizes) == 1 else None


@dataclass
class BoosterHypergraph:
    """V = E(Z); one hyperedge per embedding's focus set."""

    Z: Graph
    Xi: tuple
    focus_sets: tuple  # FocusSet per embedding, aligned with Xi
    profile: Profile | None = None

    @property
    def hyper(self):
        return Hypergraph(self.Z.num_edges(), [fs.members for fs in self.focus_sets])


def build_hypergraph(Z, Xi, spec, F, profile=None):
    fss = tuple(focus_set(Z, h, spec, F) for h in Xi)
    return BoosterHypergraph(Z=Z, Xi=tuple(Xi), focus_sets=fss, profile=profile)


def hypergraph_stats(H, tau):
    """Exact container statistics of a uniform hypergraph.

    Rationals are kept exact throughout; the returned record carries both
    the Fractions and float renderings.
    """
    if isinstance(H, BoosterHypergraph):
        H = H.hyper
    tau = Fraction(tau)
    if tau <= 0:
        raise ValueError("tau must be positive")
    ell = H.uniformity()
    if ell is None:
        raise ValueError("statistics need a uniform (profiled) hypergraph")
    m = H.m
    e = len(H.edges)
    d = Fraction(ell * e, m)
    if d == 0:
        raise ValueError("zero average degree")

    deg = Counter()
    for edge in H.edges:
        for v in edge:
            deg[v] += 1
    delta1 = max(deg.values(), default=0)

    codeg = Counter()
    for edge in H.edges:
        for pr in combinations(edge, 2):
            codeg[pr] += 1
    delta2 = max(codeg.values(), default=0)

    subset_deg = {}

    def d_sigma(sigma):
        if sigma not in subset_deg:
            s = set(sigma)
            subset_deg[sigma] = sum(1 for edge in H.edges if s <= set(edge))
        return subset_deg[sigma]

    delta_js = {}
    for j in range(2, ell + 1):
        total = 0
        for v in range(m):
            best = 0
            for edge in H.edges:
                if v not in edge:
                    continue
                others = [w for w in edge if w != v]
                for rest in combinations(others, j - 1):
                    best = max(best, d_sigma(tuple(sorted((v,) + rest))))
            total += best
        delta_js[j] = Fraction(total) / (tau ** (j - 1) * m * d)

    delta = 2 ** (comb(ell, 2) - 1) * sum(
        Fraction(1, 2 ** comb(j - 1, 2)) * delta_js[j] for j in range(2, ell + 1)
    )
    if ell < 2:
        delta = Fraction(0)

    return {
        "m": m,
        "e": e,
        "ell": ell,
        "d": d,
        "Delta1": delta1,
        "Delta2": delta2,
        "delta_j": delta_js,
        "delta": delta,
        "d_float": float(d),
        "delta_float": float(delta),
    }


def degree_bound_report(stats, D, p, delta, vF, n):
    """Compare the exact degree statistics against the theory-side caps
    D/p * C(v(F),2) and 1/(p n^(delta/2)); reported, never asserted."""
    b1 = Fraction(D) / Fraction(p) * comb(vF, 2)
    b2 = Fraction(1) / (Fraction(p) * Fraction(n) ** (Fraction(delta) / 2))
    return {
        "Delta1": stats["Delta1"],
        "Delta1_bound": float(b1),
        "Delta1_within": stats["Delta1"] <= b1,
        "Delta2": stats["Delta2"],
        "Delta2_bound": float(b2),
        "Delta2_within": stats["Delta2"] <= b2,
    }


# -- brute-force containers and cores ------------------------------------------


CORE_VERTEX_CAP = 20


@dataclass
class CoreFamily:
    cores: list  # frozensets of vertex ids
    containers: list  # maximal independent sets, aligned with cores

    def __len__(self):
        return len(self.cores)


def brute_force_cores(H):
    """Containers = maximal independent sets; cores = their complements.

    Exhaustive over all vertex subsets, so capped at 20 vertices.
    """
    if isinstance(H, BoosterHypergraph):
        H = H.hyper
    m = H.m
    if m > CORE_VERTEX_CAP:
        raise ValueError(f"{m} vertices exceed the exhaustive cap of {CORE_VERTEX_CAP}")
    if any(len(e) == 0 for e in H.edges):
        return CoreFamily(cores=[], containers=[])  # empty hyperedge: nothing to hit
    edge_masks = [sum(1 << v for v in e) for e in H.edges]
    full = (1 << m) - 1
    independent = np.ones(1 << m, dtype=bool)
    masks = np.arange(1 << m, dtype=np.int64)
    for em in edge_masks:
        independent &= (masks & em) != em
    ind_set = set(np.nonzero(independent)[0].tolist())
    containers = []
    for s in ind_set:
        maximal = True
        rem = full & ~s
        while rem:
            low = rem & -rem
            rem ^= low
            if (s | low) in ind_set:
                maximal = False
                break
        if maximal:
            containers.append(s)
    containers.sort()
    cores, conts = [], []
    for s in containers:
        conts.append(frozenset(v for v in range(m) if s >> v & 1))
        cores.append(frozenset(v for v in range(m) if (full & ~s) >> v & 1))
    return CoreFamily(cores=cores, containers=conts)


def verify_core_properties(core_family, H, beta=None, gamma=None):
    """Exhaustive verification of the hitting-set covering property, plus
    descriptive reports of the size bounds (asymptotic claims: reported,
    never asserted)."""
    if isinstance(H, BoosterHypergraph):
        H = H.hyper
    m = H.m
    if m > CORE_VERTEX_CAP:
        raise ValueError(f"{m} vertices exceed the exhaustive cap of {CORE_VERTEX_CAP}")
    edge_masks = [sum(1 << v for v in e) for e in H.edges]
    masks = np.arange(1 << m, dtype=np.int64)
    hitting = np.ones(1 << m, dtype=bool)
    for em in edge_masks:
        hitting &= (masks & em) != 0
    covered = np.zeros(1 << m, dtype=bool)
    for core in core_family.cores:
        cm = sum(1 << v for v in core)
        covered |= (masks & cm) == cm
    uncovered = np.nonzero(hitting & ~covered)[0]
    report = {
        "hitting_sets": int(hitting.sum()),
        "c3_violations": [int(x) for x in uncovered[:10]],
        "c3_ok": len(uncovered) == 0,
        "num_cores": len(core_family),
        "min_core_size": min((len(c) for c in core_family.cores), default=0),
        "container_edge_free": True,  # maximal independent sets span no hyperedge
    }
    if core_family.cores:
        report["log_num_cores"] = log(len(core_family.cores)) if len(core_family) else 0.0
    if beta is not None:
        report["c2_bound"] = float(Fraction(beta) * m)
        report["c2_holds_here"] = all(len(c) >= Fraction(beta) * m for c in core_family.cores)
    if gamma is not None and core_family.cores:
        report["c1_bound"] = m ** (1 - gamma)
        report["c1_holds_here"] = log(len(core_family.cores)) <= m ** (1 - gamma)
    return report
