"""Exact rational density analysis of small pattern graphs.

All classifications are decided with `fractions.Fraction`; floating point
never enters a comparison.  Pattern sizes are capped because the searches
enumerate vertex subsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .graphs import Graph

PATTERN_VERTEX_CAP = 10


def _check_cap(F):
    if F.n > PATTERN_VERTEX_CAP:
        raise ValueError(
            f"pattern has {F.n} vertices, above the cap of {PATTERN_VERTEX_CAP}"
        )


def d2(F):
    """Two-density: 1 for a single edge on two vertices, else (e-1)/(v-2)."""
    e, v = F.num_edges(), F.n
    if e < 1:
        raise ValueError("d2 undefined for edgeless graphs")
    if v == 2:
        return Fraction(1)
    return Fraction(e - 1, v - 2)


def _induced_d2_max(F, proper_only=False):
    """Max d2 over induced subgraphs with >= 1 edge; returns (value, vertex set).

    Scanning induced subgraphs suffices: deleting edges at a fixed vertex
    set only lowers (e-1)/(v-2).  Ties break to the lexicographically
    smallest vertex set.
    """
    best = None
    best_set = None
    for k in range(2, F.n + 1):
        for subset in combinations(range(F.n), k):
            if proper_only and k == F.n:
                continue
            sub = F.subgraph_on(subset)
            if sub.num_edges() < 1:
                continue
            val = d2(sub)
            if best is None or val > best:
                best, best_set = val, subset
    return best, best_set


def m2(F):
    """(max 2-density, witness) over all subgraphs of F with at least one edge."""
    _check_cap(F)
    if F.num_edges() < 1:
        raise ValueError("m2 undefined for edgeless graphs")
    val, vset = _induced_d2_max(F)
    witness = (vset, tuple((u, v) for u, v in F.edges if u in vset and v in vset))
    return val, witness


def threshold_exponent(F):
    """1/m2(F): the exponent of the arrowing threshold n^(-1/m2)."""
    return 1 / m2(F)[0]


def is_bipartite(F):
    """Two-colourability check; returns (flag, colouring array or None)."""
    colour = [-1] * F.n
    for start in range(F.n):
        if colour[start] >= 0:
            continue
        colour[start] = 0
        queue = [start]
        while queue:
            u = queue.pop()
            for w in F.neighbours(u):
                if colour[w] < 0:
                    colour[w] = 1 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return False, None
    return True, colour


@dataclass(frozen=True)
class PatternProfile:
    """Classification record of a fixed pattern graph."""

    pattern: Graph
    m2: Fraction
    witness_vertices: tuple
    witness_edges: tuple
    balanced: bool
    strictly_balanced: bool
    nearly_bipartite_witness: tuple | None  # edge e with F-e bipartite, or None
    threshold_exponent: Fraction

    @property
    def nearly_bipartite(self):
        return self.nearly_bipartite_witness is not None

    def to_record(self):
        return {
            "n": self.pattern.n,
            "edges": list(self.pattern.edges),
            "m2": f"{self.m2.numerator}/{self.m2.denominator}",
            "witness_vertices": list(self.witness_vertices),
            "balanced": self.balanced,
            "strictly_balanced": self.strictly_balanced,
            "nearly_bipartite": self.nearly_bipartite,
            "nearly_bipartite_witness": list(self.nearly_bipartite_witness)
            if self.nearly_bipartite_witness
            else None,
            "threshold_exponent": f"{self.threshold_exponent.numerator}"
            f"/{self.threshold_exponent.denominator}",
        }


def classify(F):
    """Full pattern profile: m2, balancedness flags, near-bipartiteness witness."""
    _check_cap(F)
    e = F.num_edges()
    if e < 1:
        raise ValueError("classify needs at least one edge")
    m2_val, (wv, we) = m2(F)
    balanced = d2(F) == m2_val

    # Strictly balanced: every proper subgraph with >= 1 edge has d2 < m2.
    # The maximum over proper subgraphs is attained either on a proper
    # induced subgraph or on F minus a single edge (spanning).
    strict = balanced
    if strict:
        proper_max, _ = _induced_d2_max(F, proper_only=True)
        if proper_max is not None and proper_max >= m2_val:
            strict = False
    if strict and e >= 2 and F.n > 2:
        if Fraction(e - 2, F.n - 2) >= m2_val:
            strict = False

    nb_witness = None
    if e >= 2:
        for edge in F.edges:  # lexicographically first qualifying edge
            flag, _ = is_bipartite(F.without_edges([edge]))
            if flag:
                nb_witness = edge
                break

    return PatternProfile(
        pattern=F,
        m2=m2_val,
        witness_vertices=wv,
        witness_edges=we,
        balanced=balanced,
        strictly_balanced=strict,
        nearly_bipartite_witness=nb_witness,
        threshold_exponent=1 / m2_val,
    )


def edge_density(B):
    """m(B) = e(B)/v(B)."""
    if B.n < 1:
        raise ValueError("graph needs at least one vertex")
    return Fraction(B.num_edges(), B.n)


def booster_admissible(B, F):
    """True iff m(B) <= m2(F): a necessary condition for B not to arrow F."""
    return edge_density(B) <= m2(F)[0]


def rooted_density(roots, H):
    """dens(R,H) = (e(H) - e(H[R])) / (v(H) - |R|) for an ordered root list."""
    R = list(roots)
    if len(set(R)) != len(R):
        raise ValueError("repeated roots")
    for r in R:
        if not 0 <= r < H.n:
            raise ValueError(f"root {r} out of range")
    if len(R) >= H.n:
        raise ValueError("roots must form a proper subset of V(H)")
    rset = set(R)
    e_inside = sum(1 for u, v in H.edges if u in rset and v in rset)
    return Fraction(H.num_edges() - e_inside, H.n - len(R))


def mad(roots, H):
    """Max of dens(R, H[S]) over induced S with R properly inside S.

    Returns (value, S) with S the lexicographically smallest maximizer.
    """
    _check_cap(H)
    R = list(roots)
    rset = set(R)
    if len(rset) >= H.n:
        raise ValueError("roots must form a proper subset of V(H)")
    others = [v for v in range(H.n) if v not in rset]
    best = None
    best_set = None
    for k in range(1, len(others) + 1):
        for extra in combinations(others, k):
            S = sorted(rset | set(extra))
            sub = H.subgraph_on(S)
            pos = {v: i for i, v in enumerate(S)}
            val = rooted_density([pos[r] for r in R], sub)
            if best is None or val > best:
                best, best_set = val, tuple(S)
    return best, best_set
