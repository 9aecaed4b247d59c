"""Monte Carlo threshold experiments and the exact constant chain.

Every estimate is reproducible from (config, master seed): trial i of
probe j runs on Seed.substream chains, never on shared global state.
Budget-exhausted trials stay first-class "undecided" and are excluded
from point estimates with their count reported.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, exp, factorial, sqrt, ceil

from .arrowing import decide_arrow
from .booster import alpha_tilde, classify_bad, make_booster_spec
from .counting import count_f_minus, count_f_minus_through, count_P
from .density import classify, is_bipartite
from .graphs import Seed, gnp_sample


def wilson_interval(successes, n, z=1.96):
    """Wilson score interval for a binomial proportion."""
    if n == 0:
        raise ValueError("no observations")
    phat = successes / n
    denom = 1 + z * z / n
    centre = (phat + z * z / (2 * n)) / denom
    half = z * sqrt(phat * (1 - phat) / n + z * z / (4 * n * n)) / denom
    return max(0.0, centre - half), min(1.0, centre + half)


def solver_verdict(F, budget=None):
    """Default verdict function: sample G(n,p) and run the solver."""

    def fn(n, p, seed):
        return decide_arrow(gnp_sample(n, p, seed), F, budget=budget).verdict

    return fn


@dataclass
class TrialRecord:
    """One Monte Carlo trial, reproducible from (config, trial index)."""

    n: int
    p: float
    trial: int
    seed: Seed
    verdict: str
    stats: dict
    wall_time: float


def run_trials(F, n, p, trials, seed, budget=None):
    """Per-trial records with solver statistics and wall times."""
    import time as _time

    records = []
    for t in range(trials):
        sub = seed.substream(t)
        t0 = _time.monotonic()
        res = decide_arrow(gnp_sample(n, p, sub), F, budget=budget)
        records.append(
            TrialRecord(n=n, p=p, trial=t, seed=sub, verdict=res.verdict,
                        stats=res.stats, wall_time=_time.monotonic() - t0)
        )
    return records


def estimate_arrow_probability(F, n, p, trials, seed, budget=None, verdict_fn=None):
    """Fraction of decided trials that arrow, with a Wilson interval.

    Undecided (budget-exhausted) trials never enter the point estimate;
    their count is reported alongside.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    fn = verdict_fn or solver_verdict(F, budget)
    arrows = undecided = 0
    for t in range(trials):
        v = fn(n, p, seed.substream(t))
        if v == "arrows":
            arrows += 1
        elif v == "undecided":
            undecided += 1
    decided = trials - undecided
    if decided == 0:
        raise RuntimeError("all trials undecided: no estimate")
    low, high = wilson_interval(arrows, decided)
    return {
        "n": n,
        "p": p,
        "trials": trials,
        "decided": decided,
        "undecided": undecided,
        "estimate": arrows / decided,
        "wilson_low": low,
        "wilson_high": high,
    }


def _p_of_c(c, n, exponent):
    """p = c * n^(-1/m2), clamped into [0,1]."""
    p = c * n ** (-float(exponent))
    return min(1.0, max(0.0, p)), p > 1.0


def bisect_threshold_constant(
    F,
    n,
    trials,
    level=0.5,
    tol=1e-3,
    seed=None,
    c_range=(0.05, 4.0),
    budget=None,
    verdict_fn=None,
    exponent=None,
):
    """Bisection on the scaled constant c with fresh trials per probe.

    Needs the c-range to straddle the requested level; raises otherwise.
    Returns the crossing estimate and the full probe log.
    """
    seed = seed or Seed()
    if exponent is None:
        exponent = classify(F).threshold_exponent
    probes = []

    def probe(c, idx):
        p, clamped = _p_of_c(c, n, exponent)
        est = estimate_arrow_probability(
            F, n, p, trials, seed.substream(idx), budget=budget, verdict_fn=verdict_fn
        )
        est["c"] = c
        est["p_clamped"] = clamped
        probes.append(est)
        return est["estimate"]

    lo, hi = c_range
    e_lo = probe(lo, 0)
    e_hi = probe(hi, 1)
    if e_lo > level or e_hi < level:
        raise RuntimeError(
            f"no bracket: estimate({lo})={e_lo:.3f}, estimate({hi})={e_hi:.3f} "
            f"do not straddle level {level}"
        )
    idx = 2
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if probe(mid, idx) < level:
            lo = mid
        else:
            hi = mid
        idx += 1
    return {"c_hat": (lo + hi) / 2, "level": level, "probes": probes, "n": n}


def sharpness_window(
    F,
    n_list,
    trials,
    seed=None,
    levels=(0.1, 0.5, 0.9),
    tol=1e-3,
    c_range=(0.05, 4.0),
    budget=None,
    verdict_fn=None,
    exponent=None,
):
    """Crossing constants at several levels per n, plus relative widths."""
    seed = seed or Seed()
    rows = []
    for i, n in enumerate(n_list):
        entry = {"n": n}
        for j, level in enumerate(levels):
            r = bisect_threshold_constant(
                F,
                n,
                trials,
                level=level,
                tol=tol,
                seed=seed.substream(1000 * i + j),
                c_range=c_range,
                budget=budget,
                verdict_fn=verdict_fn,
                exponent=exponent,
            )
            entry[f"c_{level}"] = r["c_hat"]
        low, mid, high = (entry[f"c_{q}"] for q in levels)
        entry["window"] = high - low
        entry["relative_width"] = (high - low) / mid if mid else float("inf")
        rows.append(entry)
    return rows


def window_trend(rows):
    """Qualitative trend of the relative widths across n (no asymptotic
    claim is asserted: the limit statement lives outside desk scale)."""
    widths = [(r["n"], r["relative_width"]) for r in rows]
    nonincreasing = all(b[1] <= a[1] + 1e-12 for a, b in zip(widths, widths[1:]))
    return {"widths": widths, "nonincreasing": nonincreasing}


def threshold_curve(F, n, c_values, trials, seed=None, budget=None, verdict_fn=None):
    """Estimates over a grid of scaled constants, with interpolated
    level crossings at 0.1 / 0.5 / 0.9."""
    seed = seed or Seed()
    exponent = classify(F).threshold_exponent
    points = []
    for i, c in enumerate(sorted(c_values)):
        p, clamped = _p_of_c(c, n, exponent)
        est = estimate_arrow_probability(
            F, n, p, trials, seed.substream(i), budget=budget, verdict_fn=verdict_fn
        )
        est["c"] = c
        est["p_clamped"] = clamped
        points.append(est)

    def crossing(level):
        for a, b in zip(points, points[1:]):
            if a["estimate"] <= level <= b["estimate"]:
                if b["estimate"] == a["estimate"]:
                    return a["c"]
                frac = (level - a["estimate"]) / (b["estimate"] - a["estimate"])
                return a["c"] + frac * (b["c"] - a["c"])
        return None

    return {
        "n": n,
        "exponent": str(exponent),
        "points": points,
        "crossings": {q: crossing(q) for q in (0.1, 0.5, 0.9)},
    }


# -- empirical (Z)-property rates -----------------------------------------


def z_property_rates(
    F,
    booster,
    n,
    p,
    D,
    zeta,
    delta,
    trials,
    seed=None,
    pair_samples=100,
    embedding_samples=40,
):
    """Empirical satisfaction rates of the five good-graph properties.

    The pair and embedding properties are estimated on uniform samples
    (sizes reported).  Returns per-property rates with Wilson intervals
    plus the per-trial normalized statistics.
    """
    prof = classify(F)
    bound = min(prof.threshold_exponent, 1 - prof.threshold_exponent)
    if not 0 < Fraction(delta) <= bound:
        raise ValueError(f"delta must lie in (0, {bound}]")
    seed = seed or Seed()
    spec = booster if hasattr(booster, "sigma") else make_booster_spec(booster, F)
    B = spec.B

    passes = {k: 0 for k in ("Z1", "Z2", "Z3", "Z4", "Z5")}
    stats = {"f_minus_norm": [], "f_minus_edge_norm": [], "heavy_pair_frac": [], "bad_frac": []}
    heavy_cap = float(D) / (p * n ** float(delta)) if p > 0 else float("inf")
    z4_budget = float(D) * p * n * n / n ** float(delta)

    for t in range(trials):
        sub = seed.substream(t)
        Z = gnp_sample(n, p, sub)
        m = Z.num_edges()
        rng = sub.substream(1).generator()

        if p * n * n / 4 <= m <= p * n * n:
            passes["Z1"] += 1

        fm = count_f_minus(F, Z)
        stats["f_minus_norm"].append(fm / (n * n))
        if fm <= D * n * n:
            passes["Z2"] += 1

        worst = 0
        for e in Z.edges:
            worst = max(worst, count_f_minus_through(F, Z, e))
        stats["f_minus_edge_norm"].append(worst * p)
        if p == 0 or worst <= D / p:
            passes["Z3"] += 1

        heavy = 0
        k = min(pair_samples, m * (m - 1) // 2)
        sampled = 0
        if m >= 2:
            while sampled < k:
                i, j = rng.integers(0, m, size=2)
                if i == j:
                    continue
                sampled += 1
                if count_P(F, Z, Z.edges[int(i)], Z.edges[int(j)]) > heavy_cap:
                    heavy += 1
        frac = heavy / sampled if sampled else 0.0
        stats["heavy_pair_frac"].append(frac)
        total_pairs = m * (m - 1) // 2
        if frac * total_pairs <= z4_budget:
            passes["Z4"] += 1

        bad = 0
        for _ in range(embedding_samples):
            h = tuple(int(x) for x in rng.permutation(n)[: B.n])
            if classify_bad(Z, h, spec, F)["bad"]:
                bad += 1
        bfrac = bad / embedding_samples
        stats["bad_frac"].append(bfrac)
        if bfrac <= n ** (-float(zeta)):
            passes["Z5"] += 1

    out = {"trials": trials, "pair_samples": pair_samples, "embedding_samples": embedding_samples}
    for k, cnt in passes.items():
        low, high = wilson_interval(cnt, trials)
        out[k] = {"rate": cnt / trials, "wilson_low": low, "wilson_high": high}
    out["stats"] = stats
    return out


# -- Janson bound -----------------------------------------------------------


def janson_bound(copy_family, q):
    """Standard Janson upper bound for "no copy present" at edge
    probability q: exp(-mu + Delta/2) with exact rational mu, Delta."""
    q = Fraction(q)
    if not 0 < q <= 1:
        raise ValueError("q must lie in (0, 1]")
    copies = copy_family.copies if hasattr(copy_family, "copies") else list(copy_family)
    if not copies:
        return {"mu": Fraction(0), "Delta": Fraction(0), "bound": 1.0, "empty": True,
                "capped": False}
    edge_sets = [c.edges if hasattr(c, "edges") else frozenset(c) for c in copies]
    mu = sum(q ** len(es) for es in edge_sets)
    delta = Fraction(0)
    for i, a in enumerate(edge_sets):
        for j, b in enumerate(edge_sets):
            if i != j and a & b:
                delta += q ** len(a | b)
    raw = exp(-float(mu) + float(delta) / 2)
    return {
        "mu": mu,
        "Delta": delta,
        "bound": min(1.0, raw),
        "capped": raw > 1.0,
        "empty": False,
    }


# -- explicit constant chain -------------------------------------------------


@dataclass
class ConstantChain:
    """Exact constants of the proof pipeline, Fractions wherever the
    defining formulas are rational.  Fields are None when the inputs
    they depend on were not supplied."""

    inputs: dict
    delta: Fraction | None = None
    alpha_tilde: Fraction | None = None
    L: int | None = None
    L_exact: Fraction | None = None
    L_rounded: bool = False
    alpha_prime: Fraction | None = None
    K: int | None = None
    k: int | None = None
    beta: Fraction | None = None
    gamma: Fraction | None = None
    eps_container: Fraction = Fraction(1, 4)
    tau_exponent: Fraction | None = None  # tau(n) = n ** tau_exponent
    a: int | None = None
    b: int | None = None
    endpoints_split: bool | None = None
    C0_prime: Fraction | None = None
    d: Fraction | None = None
    gamma_kst: Fraction | None = None
    eps_reg: Fraction | None = None
    t0: Fraction | None = None
    eta: Fraction | None = None
    notes: list = field(default_factory=list)

    def to_record(self, digit_limit=10_000):
        rec = {"inputs": {k: _render(v, digit_limit) for k, v in self.inputs.items()}}
        for name in (
            "delta alpha_tilde L L_exact alpha_prime K k beta gamma eps_container "
            "tau_exponent a b C0_prime d gamma_kst eps_reg t0 eta".split()
        ):
            rec[name] = _render(getattr(self, name), digit_limit)
        rec["L_rounded"] = self.L_rounded
        rec["endpoints_split"] = self.endpoints_split
        rec["notes"] = self.notes
        return rec


def _render(v, digit_limit=10_000):
    if v is None:
        return None
    if isinstance(v, Fraction):
        num, den = v.numerator, v.denominator
        if _digits(num) > digit_limit or _digits(den) > digit_limit:
            return {
                "approx": float(v) if -1e308 < v < 1e308 else None,
                "num_digits": _digits(num),
                "den_digits": _digits(den),
            }
        return f"{num}/{den}"
    if isinstance(v, bool) or v is True or v is False:
        return v
    if isinstance(v, int):
        return v if _digits(v) <= digit_limit else {"num_digits": _digits(v)}
    return str(v)


def _digits(x):
    x = abs(int(x))
    if x < 10**18:
        return len(str(x))
    return int(x.bit_length() * 0.30103) + 1  # estimate; only gates rendering


def bipartition_sizes(profile):
    """Class sizes (a, b) of the bipartite part, both witness endpoints
    steered into class A when a bipartition allows it."""
    F = profile.pattern
    e = profile.nearly_bipartite_witness
    if e is None:
        raise ValueError("pattern is not nearly bipartite")
    Fp = F.without_edges([e])
    flag, colour = is_bipartite(Fp)
    if not flag:
        raise AssertionError("witness edge did not leave a bipartite graph")
    a1, a2 = e
    comp = _components(Fp)
    side = list(colour)
    # flip whole components so that a2 (and then everything else) favours
    # the class of a1
    c1 = next(i for i, c in enumerate(comp) if a1 in c)
    for i, c in enumerate(comp):
        if i == c1:
            continue
        if a2 in c and side[a2] != side[a1]:
            for v in c:
                side[v] = 1 - side[v]
    split = side[a1] != side[a2]
    A = sum(1 for v in range(F.n) if side[v] == side[a1])
    return A, F.n - A, split


def _components(G):
    seen = [False] * G.n
    comps = []
    for s in range(G.n):
        if seen[s]:
            continue
        stack, comp = [s], set()
        seen[s] = True
        while stack:
            u = stack.pop()
            comp.add(u)
            for w in G.neighbours(u):
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(comp)
    return comps


def derive_proof_constants(
    F,
    B=None,
    D=None,
    C0=None,
    C1=None,
    lam=None,
    rho=None,
    c0=None,
    xi_cl=None,
    eps_cl=None,
    T0=None,
    ell=None,
):
    """Compute every explicit constant of the proof chains exactly.

    Each chain computes independently, so partial inputs give partial
    output.  F must be strictly balanced; the regularity-side chain
    additionally needs F nearly bipartite.
    """
    prof = F if hasattr(F, "strictly_balanced") else classify(F)
    if not prof.strictly_balanced:
        raise ValueError("constant chain requires a strictly balanced pattern")
    Fg = prof.pattern
    inputs = {
        "F_m2": prof.m2,
        "D": D,
        "C0": C0,
        "C1": C1,
        "lambda": lam,
        "rho": rho,
        "c0": c0,
        "xi_CL": xi_cl,
        "eps_CL": eps_cl,
        "T0": T0,
        "ell": ell,
    }
    chain = ConstantChain(inputs=inputs)

    inv = prof.threshold_exponent  # 1/m2
    chain.delta = Fraction(1, 6) * min(inv, 1 - inv)

    if B is not None:
        vB = B if isinstance(B, int) else B.n
        chain.alpha_tilde = Fraction(1, 13 * vB**4 * factorial(vB))
        if not isinstance(B, int):
            chain.K = B.num_edges()

    vF, eF = Fg.n, Fg.num_edges()
    if chain.alpha_tilde is not None and D is not None:
        chain.L_exact = (eF - 1) * Fraction(2) / chain.alpha_tilde * vF**2 * Fraction(D)
        if chain.L_exact.denominator == 1:
            chain.L = int(chain.L_exact)
        else:
            chain.L = ceil(chain.L_exact)
            chain.L_rounded = True
            chain.notes.append("L was not integral; rounded up for the power formulas")
        chain.k = comb(chain.L, eF - 1) * comb(vF, 2)
        chain.gamma = chain.delta / (10 * chain.L)
        if chain.K is not None:
            KL = chain.K * chain.L
            chain.alpha_prime = chain.alpha_tilde / (2 * chain.L * Fraction(KL) ** chain.L)
            chain.beta = chain.alpha_prime / (Fraction(D) * chain.k * vF**2)

    if ell is not None and ell >= 2:
        chain.tau_exponent = -chain.delta / (4 * (ell - 1))

    if prof.nearly_bipartite:
        a, b, split = bipartition_sizes(prof)
        chain.a, chain.b, chain.endpoints_split = a, b, split
        if C0 is not None:
            C0f = Fraction(C0)
            chain.C0_prime = min(Fraction(1), C0f ** (eF - 1))
        if lam is not None:
            lamf = Fraction(lam)
            chain.gamma_kst = (
                Fraction(1, 2)
                * Fraction(1, (a - 1) ** (a - 1) * b**b)
                * (lamf / 6) ** ((a - 1) * b)
            )
            if None not in (C0, C1, xi_cl):
                C0f, C1f = Fraction(C0), Fraction(C1)
                xif = Fraction(xi_cl)
                chain.d = (
                    (lamf / 6) ** (2 * (a - 1) * b)
                    * xif**2
                    * C0f ** (2 * (eF - 1))
                    * chain.C0_prime
                ) / (
                    64
                    * Fraction(a) ** (2 * a)
                    * Fraction(b) ** (2 * b)
                    * Fraction(vF + 1) ** vF
                    * C1f ** (2 * (eF - 1))
                )
            if rho is not None and eps_cl is not None:
                chain.eps_reg = min(Fraction(rho) * Fraction(eps_cl) / 4, lamf / 48)
            chain.t0 = Fraction(48) / lamf * a * b
        if c0 is not None and T0 is not None:
            chain.eta = Fraction(c0) * Fraction(T0) ** (-vF)

    return chain
