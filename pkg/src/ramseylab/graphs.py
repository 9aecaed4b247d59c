"""Host-graph representation, seeded random sampling, and serialization.

Graphs are immutable: a vertex count ``n`` (vertices are 0..n-1), a
lexicographically sorted edge tuple, and adjacency bit rows (Python ints
used as bitsets).  The sorted edge tuple realizes the fixed global edge
ordering that the focus-set machinery relies on; an edge's id is its
position in that tuple.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations

import numpy as np


@dataclass(frozen=True)
class Seed:
    """Key of a counter-based Philox stream: (value, stream_id) -> one stream."""

    value: int = 0
    stream_id: int = 0

    def __post_init__(self):
        if not (0 <= self.value < 2**64 and 0 <= self.stream_id < 2**64):
            raise ValueError("seed components must be 64-bit unsigned ints")

    def generator(self):
        return np.random.Generator(np.random.Philox(key=(self.value << 64) | self.stream_id))

    def substream(self, index):
        """Derived stream for trial `index`; injective for index < 2**32."""
        if index < 0:
            raise ValueError("substream index must be nonnegative")
        return Seed(self.value, (self.stream_id * 0x100000000 + index) % 2**64)


class Graph:
    """Simple undirected graph with a fixed lexicographic edge order."""

    __slots__ = ("n", "edges", "adj", "_index")

    def __init__(self, n, edges):
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            norm.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges = tuple(sorted(norm))
        adj = [0] * n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.adj = tuple(adj)
        self._index = {e: i for i, e in enumerate(self.edges)}

    # -- basic queries ------------------------------------------------

    def num_edges(self):
        return len(self.edges)

    def has_edge(self, u, v):
        return bool(self.adj[u] >> v & 1)

    def edge_id(self, u, v):
        """Position of {u,v} in the sorted edge order."""
        key = (u, v) if u < v else (v, u)
        return self._index[key]

    def degree(self, v):
        return bin(self.adj[v]).count("1")

    def neighbours(self, v):
        m = self.adj[v]
        out = []
        while m:
            low = m & -m
            out.append(low.bit_length() - 1)
            m ^= low
        return out

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"

    def subgraph_on(self, vertices):
        """Induced subgraph, relabelled to 0..k-1 in sorted vertex order."""
        vs = sorted(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        es = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return Graph(len(vs), es)

    def with_edges(self, extra):
        return Graph(self.n, list(self.edges) + list(extra))

    def without_edges(self, removed):
        drop = {(min(u, v), max(u, v)) for u, v in removed}
        return Graph(self.n, [e for e in self.edges if e not in drop])


def empty_graph(n):
    return Graph(n, [])


def complete_graph(n):
    return Graph(n, combinations(range(n), 2))


def cycle_graph(k):
    if k < 3:
        raise ValueError("cycles need k >= 3")
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def path_graph(k):
    if k < 1:
        raise ValueError("paths need k >= 1 vertices")
    return Graph(k, [(i, i + 1) for i in range(k - 1)])


def star_graph(leaves):
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


_NAME_RE = re.compile(r"^([KCP])(\d+)(-e)?$")


def pattern_by_name(name):
    """Named small graphs: Kk, Ck, Pk, Kk-e (complete minus one edge)."""
    m = _NAME_RE.match(name.strip())
    if not m:
        raise ValueError(f"unknown pattern name {name!r} (expected Kk, Ck, Pk or Kk-e)")
    kind, k, minus = m.group(1), int(m.group(2)), m.group(3)
    if minus and kind != "K":
        raise ValueError(f"'-e' suffix only applies to complete graphs: {name!r}")
    if kind == "K":
        g = complete_graph(k)
        return g.without_edges([g.edges[0]]) if minus else g
    if kind == "C":
        return cycle_graph(k)
    return path_graph(k)


# -- sampling ---------------------------------------------------------


def gnp_sample(n, p, seed):
    """Binomial random graph: each of the C(n,2) pairs kept with probability p.

    Deterministic in (n, p, seed); a single Philox stream is consumed in
    the lexicographic pair order, so results do not depend on threading.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p={p} outside [0,1]")
    pairs = list(combinations(range(n), 2))
    if p == 0.0:
        return empty_graph(n)
    if p == 1.0:
        return Graph(n, pairs)
    u = seed.generator().random(len(pairs))
    return Graph(n, [e for e, x in zip(pairs, u) if x < p])


# -- set/edge operations ----------------------------------------------


def union(g1, g2):
    """Edge-set union of two graphs on the same vertex set."""
    if g1.n != g2.n:
        raise ValueError(f"vertex counts differ: {g1.n} vs {g2.n}")
    return Graph(g1.n, set(g1.edges) | set(g2.edges))


def edge_count_between(g, U, W=None):
    """e_G(U) for one set, e_G(U,W) across two disjoint sets."""
    Umask = 0
    for v in U:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
        Umask |= 1 << v
    if W is None:
        total = 0
        for v in U:
            total += bin(g.adj[v] & Umask).count("1")
        return total // 2
    Wmask = 0
    for v in W:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
        Wmask |= 1 << v
    if Umask & Wmask:
        raise ValueError("U and W must be disjoint")
    return sum(bin(g.adj[v] & Wmask).count("1") for v in U)


# -- serialization -----------------------------------------------------


def serialize_graph(g, fmt="edgelist"):
    if fmt == "edgelist":
        lines = [str(g.n)]
        lines += [f"{u} {v}" for u, v in g.edges]
        return "\n".join(lines) + "\n"
    if fmt == "graph6":
        return _to_graph6(g)
    raise ValueError(f"unknown format {fmt!r}")


def parse_graph(text):
    """Parse edge-list or graph6 text; malformed input reports a byte offset."""
    stripped = text.strip()
    if not stripped:
        raise ValueError("empty graph description (offset 0)")
    first = stripped.split(None, 1)[0]
    if first.isdigit() or (first.lstrip("-").isdigit()):
        return _parse_edgelist(text)
    return _parse_graph6(stripped)


def _parse_edgelist(text):
    tokens = []
    for m in re.finditer(r"\S+", text):
        tokens.append((m.group(), m.start()))
    if not tokens:
        raise ValueError("empty graph description (offset 0)")
    word, off = tokens[0]
    try:
        n = int(word)
    except ValueError:
        raise ValueError(f"bad vertex count {word!r} (offset {off})") from None
    if n < 1:
        raise ValueError(f"vertex count must be >= 1 (offset {off})")
    rest = tokens[1:]
    if len(rest) % 2:
        word, off = rest[-1]
        raise ValueError(f"dangling endpoint {word!r} (offset {off})")
    edges = []
    for (a, offa), (b, offb) in zip(rest[::2], rest[1::2]):
        try:
            u, v = int(a), int(b)
        except ValueError:
            raise ValueError(f"bad endpoint near offset {offa}") from None
        if not (0 <= u < n):
            raise ValueError(f"vertex {u} out of range (offset {offa})")
        if not (0 <= v < n):
            raise ValueError(f"vertex {v} out of range (offset {offb})")
        if u == v:
            raise ValueError(f"loop at vertex {u} (offset {offa})")
        edges.append((u, v))
    return Graph(n, edges)


def _to_graph6(g):
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    else:
        raise ValueError("graph6 output limited to n <= 258047")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    body = "".join(
        chr(sum(b << (5 - k) for k, b in enumerate(bits[i : i + 6])) + 63)
        for i in range(0, len(bits), 6)
    )
    return head + body


def _parse_graph6(s):
    if s.startswith(">>graph6<<"):
        s = s[10:]
    pos = 0
    if s[pos] == "~":
        if len(s) >= 2 and s[1] == "~":
            raise ValueError("graph6 n > 258047 unsupported (offset 0)")
        if len(s) < 4:
            raise ValueError(f"truncated graph6 size field (offset {len(s)})")
        vals = []
        for k in range(1, 4):
            c = ord(s[k]) - 63
            if not 0 <= c <= 63:
                raise ValueError(f"invalid graph6 byte (offset {k})")
            vals.append(c)
        n = (vals[0] << 12) | (vals[1] << 6) | vals[2]
        pos = 4
    else:
        n = ord(s[pos]) - 63
        if not 0 <= n <= 62:
            raise ValueError(f"invalid graph6 byte (offset {pos})")
        pos = 1
    if n == 0:
        raise ValueError("graph6 with zero vertices unsupported (offset 0)")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(s) - pos < need:
        raise ValueError(f"truncated graph6 body (offset {len(s)})")
    if len(s) - pos > need:
        raise ValueError(f"trailing bytes after graph6 body (offset {pos + need})")
    bits = []
    for k in range(need):
        c = ord(s[pos + k]) - 63
        if not 0 <= c <= 63:
            raise ValueError(f"invalid graph6 byte (offset {pos + k})")
        bits.extend((c >> (5 - t)) & 1 for t in range(6))
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph(n, edges)
