"""Exact decision of the two-colour arrowing property G -> (F).

The solver treats each copy of F as a not-all-equal constraint over its
edge ids ("some edge red AND some edge blue") and runs complete
backtracking with unit-style propagation.  An independent brute-force
oracle enumerates all colourings of the constrained edges.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .counting import enumerate_copies
from .graphs import union

RED, BLUE = 0, 1


@dataclass
class ArrowResult:
    verdict: str  # "arrows" | "not_arrows" | "undecided"
    certificate: list | None = None  # colour per EdgeId when not_arrows
    stats: dict = field(default_factory=dict)

    @property
    def arrows(self):
        return self.verdict == "arrows"


def copy_constraints(G, F):
    """Edge-id sets of the F-copies in G (the NAE constraint system)."""
    fam = enumerate_copies(F, G) if F.n <= G.n else None
    if fam is None:
        return []
    return [tuple(sorted(G.edge_id(u, v) for u, v in c.edges)) for c in fam.copies]


def is_f_free(coloring, G, F):
    """True iff no copy of F in G is monochromatic; else the first bad copy."""
    if len(coloring) != G.num_edges():
        raise ValueError("colouring must cover every edge of G")
    if F.n > G.n:
        return True, None
    for copy in enumerate_copies(F, G).copies:
        cols = {coloring[G.edge_id(u, v)] for u, v in copy.edges}
        if len(cols) == 1:
            return False, copy
    return True, None


class _NaeSolver:
    """Complete search over {red, blue} edge colourings avoiding
    monochromatic constraints, with counter-based propagation."""

    def __init__(self, m, constraints, budget=None):
        self.m = m
        self.cons = [list(c) for c in constraints]
        self.sizes = [len(c) for c in self.cons]
        self.in_cons = [[] for _ in range(m)]
        for ci, c in enumerate(self.cons):
            for e in c:
                self.in_cons[e].append(ci)
        self.colour = [-1] * m
        self.counts = [[0, 0] for _ in self.cons]
        self.budget = budget
        self.nodes = 0
        self.propagations = 0
        self.vars = sorted({e for c in self.cons for e in c})

    # -- assignment with trail ------------------------------------------

    def _assign(self, e, c, trail):
        # counters for every constraint of e are updated even on conflict,
        # so _undo can reverse the assignment uniformly
        self.colour[e] = c
        trail.append(e)
        forced = []
        conflict = False
        for ci in self.in_cons[e]:
            cnt = self.counts[ci]
            cnt[c] += 1
            size = self.sizes[ci]
            if cnt[c] == size:
                conflict = True  # monochromatic copy
            elif cnt[c] == size - 1 and cnt[1 - c] == 0:
                # one edge left uncoloured, all others share colour c
                last = next(x for x in self.cons[ci] if self.colour[x] == -1)
                forced.append((last, 1 - c))
        return None if conflict else forced

    def _undo(self, trail, mark):
        while len(trail) > mark:
            e = trail.pop()
            c = self.colour[e]
            self.colour[e] = -1
            for ci in self.in_cons[e]:
                self.counts[ci][c] -= 1

    def _propagate(self, seed_assignments, trail):
        queue = list(seed_assignments)
        while queue:
            e, c = queue.pop()
            if self.colour[e] == c:
                continue
            if self.colour[e] == 1 - c:
                return False
            self.propagations += 1
            forced = self._assign(e, c, trail)
            if forced is None:
                return False
            queue.extend(forced)
        return True

    def _pick(self):
        best, best_score = None, -1
        for e in self.vars:
            if self.colour[e] != -1:
                continue
            score = 0
            for ci in self.in_cons[e]:
                cnt = self.counts[ci]
                if not (cnt[RED] and cnt[BLUE]):  # constraint not yet satisfied
                    score += 1
            if score > best_score:
                best, best_score = e, score
        return best

    def solve(self, symmetry_break=True, limit=1, collect=None):
        """Search for NAE-satisfying colourings.

        Returns "sat", "unsat" or "budget".  Solutions (as colour lists
        over all m edges, unconstrained edges red) go into `collect`.
        """
        if any(s == 1 for s in self.sizes):
            return "unsat"  # a one-edge copy can never be bichromatic
        found = []
        sink = collect if collect is not None else found
        trail = []

        def record():
            sol = [RED if c == -1 else c for c in self.colour]
            sink.append(sol)
            return len(sink) >= limit

        def search(depth):
            # returns "sat" when limit reached, "exhausted", or "budget"
            e = self._pick()
            if e is None:
                return "sat" if record() else "exhausted"
            if self.budget is not None and self.nodes >= self.budget:
                return "budget"
            self.nodes += 1
            colours = (RED,) if (symmetry_break and depth == 0) else (RED, BLUE)
            for c in colours:
                mark = len(trail)
                if self._propagate([(e, c)], trail):
                    res = search(depth + 1)
                    if res in ("sat", "budget"):
                        return res
                self._undo(trail, mark)
            return "exhausted"

        res = search(0)
        if res == "sat":
            return "sat"
        if res == "budget":
            return "budget"
        return "unsat" if not sink else "sat"


def decide_arrow(G, F, colours=2, budget=None):
    """Decide G -> (F) for two colours; certificate on the negative side.

    More than two colours are accepted by the encoder (plain backtracking
    over colour tuples) but only exercised at smoke level.
    """
    cons = copy_constraints(G, F)
    stats = {"constraints": len(cons)}
    if colours != 2:
        return _decide_multicolour(G, F, cons, colours, budget, stats)
    solver = _NaeSolver(G.num_edges(), cons, budget=budget)
    sols = []
    res = solver.solve(limit=1, collect=sols)
    stats.update(nodes=solver.nodes, propagations=solver.propagations)
    if res == "budget":
        return ArrowResult("undecided", None, stats)
    if res == "sat":
        return ArrowResult("not_arrows", sols[0], stats)
    return ArrowResult("arrows", None, stats)


def _decide_multicolour(G, F, cons, r, budget, stats):
    m = G.num_edges()
    vars_ = sorted({e for c in cons for e in c})
    colour = [-1] * m
    nodes = 0

    def ok(e):
        for cset in in_cons[e]:
            seen = {colour[x] for x in cset}
            if -1 not in seen and len(seen) == 1:
                return False
        return True

    in_cons = [[] for _ in range(m)]
    for c in cons:
        for e in c:
            in_cons[e].append(c)

    def search(i):
        nonlocal nodes
        if i == len(vars_):
            return "sat"
        if budget is not None and nodes >= budget:
            return "budget"
        nodes += 1
        e = vars_[i]
        choices = range(1) if i == 0 else range(r)
        for c in choices:
            colour[e] = c
            if ok(e):
                res = search(i + 1)
                if res in ("sat", "budget"):
                    return res
            colour[e] = -1
        return "exhausted"

    res = search(0)
    stats.update(nodes=nodes, propagations=0)
    if res == "budget":
        return ArrowResult("undecided", None, stats)
    if res == "sat":
        cert = [0 if c == -1 else c for c in colour]
        return ArrowResult("not_arrows", cert, stats)
    return ArrowResult("arrows", None, stats)


BRUTE_FORCE_EDGE_CAP = 24


def brute_force_arrow(G, F):
    """Exact oracle: enumerate all colourings of the constrained edges."""
    cons = copy_constraints(G, F)
    m = G.num_edges()
    if not cons:
        return ArrowResult("not_arrows", [RED] * m, {"constraints": 0, "colourings": 0})
    vars_ = sorted({e for c in cons for e in c})
    k = len(vars_)
    if k > BRUTE_FORCE_EDGE_CAP:
        raise ValueError(f"{k} constrained edges exceed the oracle cap of {BRUTE_FORCE_EDGE_CAP}")
    pos = {e: i for i, e in enumerate(vars_)}
    masks = np.array(
        [sum(1 << pos[e] for e in c) for c in cons], dtype=np.int64
    )
    total = 1 << k
    chunk = 1 << 18
    for start in range(0, total, chunk):
        xs = np.arange(start, min(start + chunk, total), dtype=np.int64)
        bad = np.zeros(len(xs), dtype=bool)
        for mk in masks:
            band = xs & mk
            bad |= (band == mk) | (band == 0)
        good = np.nonzero(~bad)[0]
        if len(good):
            x = int(xs[good[0]])
            cert = [RED] * m
            for e, i in pos.items():
                cert[e] = (x >> i) & 1
            return ArrowResult(
                "not_arrows", cert, {"constraints": len(cons), "colourings": total}
            )
    return ArrowResult("arrows", None, {"constraints": len(cons), "colourings": total})


def decide_arrow_union(Z, addition, F, budget=None):
    """decide_arrow on Z ∪ addition, with copy provenance statistics."""
    U = union(Z, addition)
    res = decide_arrow(U, F, budget=budget)
    z_edges = set(Z.edges)
    a_edges = set(addition.edges)
    inside_z = inside_a = mixed = 0
    for c in enumerate_copies(F, U).copies:
        in_z = c.edges <= z_edges
        in_a = c.edges <= a_edges
        if in_z:
            inside_z += 1
        if in_a:
            inside_a += 1
        if not in_z and not in_a:
            mixed += 1
    res.stats.update(copies_in_base=inside_z, copies_in_addition=inside_a, copies_mixed=mixed)
    return res


def enumerate_f_free_colorings(G, F, limit=16, budget=None):
    """Up to `limit` F-free colourings of G, deterministic order.

    No symmetry breaking, so colour-swapped twins both appear; edges in
    no copy of F are red in every returned colouring.
    """
    cons = copy_constraints(G, F)
    solver = _NaeSolver(G.num_edges(), cons, budget=budget)
    out = []
    solver.solve(symmetry_break=False, limit=limit, collect=out)
    return out


def first_f_free_coloring(G, F):
    """Lexicographically first F-free colouring in EdgeId order (red < blue)."""
    cons = copy_constraints(G, F)
    m = G.num_edges()
    colour = [-1] * m
    in_cons = [[] for _ in range(m)]
    for c in cons:
        for e in c:
            in_cons[e].append(c)

    def ok(e):
        for cset in in_cons[e]:
            seen = {colour[x] for x in cset}
            if -1 not in seen and len(seen) == 1:
                return False
        return True

    def search(e):
        if e == m:
            return True
        for c in (RED, BLUE):
            colour[e] = c
            if ok(e) and search(e + 1):
                return True
        colour[e] = -1
        return False

    if not search(0):
        return None
    return list(colour)


def cnf_export(G, F):
    """DIMACS CNF of the NAE system: per copy one all-positive and one
    all-negative clause over its edge variables (variable = EdgeId + 1)."""
    cons = copy_constraints(G, F)
    lines = [f"p cnf {G.num_edges()} {2 * len(cons)}"]
    for c in cons:
        lines.append(" ".join(str(e + 1) for e in c) + " 0")
        lines.append(" ".join(str(-(e + 1)) for e in c) + " 0")
    return "\n".join(lines) + "\n"
