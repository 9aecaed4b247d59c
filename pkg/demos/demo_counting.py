#!/usr/bin/env python3
"""Copy enumeration and the derived counting families.

Counts unlabelled copies, one- and two-edge-deleted families with their
anchored forms, rooted extensions, basegraph completions, and the
dense-set check, mostly on hosts small enough to verify by hand.
"""

from ramseylab import (
    base_graph,
    check_T,
    classify,
    count_f_minus,
    count_f_minus_through,
    enumerate_copies,
    enumerate_P,
    extension_count,
    rho_d_dense_check,
)
from ramseylab.graphs import Graph, Seed, complete_graph, cycle_graph, gnp_sample, path_graph

K3 = complete_graph(3)

print("=" * 72)
print("  Unlabelled copies")
print("=" * 72)
print(f"  triangles in K4:             {len(enumerate_copies(K3, complete_graph(4)))}")
print(f"  4-cycles in K4:              {len(enumerate_copies(cycle_graph(4), complete_graph(4)))}")
print(f"  triangles in K5 through an edge: "
      f"{len(enumerate_copies(K3, complete_graph(5), anchor=(0, 1)))}")
print()

print("=" * 72)
print("  One-edge-deleted family and its anchored form")
print("=" * 72)
G = gnp_sample(10, 0.4, Seed(5))
total = count_f_minus(K3, G)
anchored_sum = sum(count_f_minus_through(K3, G, e) for e in G.edges)
print(f"  host G(10, 0.4): {G.num_edges()} edges, |F_-(G)| = {total}")
print(f"  sum over edges of |F_-(G, e)| = {anchored_sum} "
      f"= (e(F)-1) * |F_-(G)| = {2 * total}")
print("  (each deleted-edge copy carries e(F)-1 edges, hence the identity)")
print()

print("=" * 72)
print("  Two-edge-deleted pairs completed through prescribed pairs")
print("=" * 72)
Z = Graph(3, [(0, 1), (1, 2)])
pairs = enumerate_P(K3, Z, (1, 2), (0, 1))
print(f"  path host 0-1-2, e1 = (1,2), e2 = (0,1): {len(pairs)} pair(s)")
for a, b, s in pairs:
    print(f"    F1 edges {sorted(a.edges)}, F2 edges {sorted(b.edges)}, "
          f"shared vertices s = {s}")
print("  (the two single-edge copies overlap on all three vertices and the")
print("   pair {0,2} completes both to triangles with the respective e_i)")
print()

print("=" * 72)
print("  Rooted extensions")
print("=" * 72)
cherry = complete_graph(3).without_edges([(0, 1)])
for n in (5, 7, 9):
    cnt = extension_count([0, 1], cherry, [0, 1], complete_graph(n))
    print(f"  cherry completions over a fixed pair in K{n}: {cnt} (= n-2)")
print()

print("=" * 72)
print("  Basegraph completions and the density property")
print("=" * 72)
prof = classify(K3)
bg = base_graph(prof, path_graph(3))
print(f"  Base(path 0-1-2) for the triangle: edges {bg.edges}")
rec = check_T(prof, complete_graph(6), complete_graph(6), 1, 1e-9)
print(f"  Base(K6) carries {rec['basegraph_copies']} triangle copies "
      f"(C(6,3) = 20): passes = {rec['passes']}")
print()

print("=" * 72)
print("  Dense-set check")
print("=" * 72)
r = rho_d_dense_check(cycle_graph(6), 0.5, 0.9)
w = r["witness"]
print(f"  C6 at rho=1/2, d=0.9: dense = {r['dense']}; witness W = {w['W']}, "
      f"{w['edges']} of {w['pairs']} pairs present")
