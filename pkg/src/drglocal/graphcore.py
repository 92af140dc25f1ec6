"""Finite simple graphs on bitset rows, plus the structural operations built on them."""
from __future__ import annotations

import functools
from collections import Counter
from fractions import Fraction

from .errors import BudgetExceededError, DisconnectedGraphError, GraphFormatError
from . import exactlinalg as xl

COCLIQUE_BUDGET = 120
ISO_BUDGET = 64


def _bits(x):
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def popcount(x):
    return bin(x).count("1")


class Graph:
    """Simple undirected graph; adj[v] is the bitset of neighbours of v."""

    __slots__ = ("n", "adj", "__weakref__")

    def __init__(self, n, adj):
        adj = tuple(int(a) for a in adj)
        if len(adj) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        for v, a in enumerate(adj):
            if a & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{n - 1}")
            if a >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in _bits(a):
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        self.n = n
        self.adj = adj

    @classmethod
    def from_edges(cls, n, edges):
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @classmethod
    def from_adjacency(cls, rows):
        n = len(rows)
        adj = []
        for r in rows:
            a = 0
            for j, x in enumerate(r):
                if x:
                    a |= 1 << j
            adj.append(a)
        return cls(n, adj)

    @classmethod
    def from_relation(cls, labels, rel):
        """Graph on ``labels`` (in the given order) with x ~ y iff rel(x, y)."""
        labels = list(labels)
        n = len(labels)
        adj = [0] * n
        for i in range(n):
            for j in range(i + 1, n):
                if rel(labels[i], labels[j]):
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
        return cls(n, adj)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.num_edges})"

    @property
    def vertex_mask(self):
        return (1 << self.n) - 1

    def neighbors(self, v):
        return _bits(self.adj[v])

    def degree(self, v):
        return popcount(self.adj[v])

    def degrees(self):
        return [popcount(a) for a in self.adj]

    def has_edge(self, u, v):
        return bool(self.adj[u] >> v & 1)

    def edges(self):
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self):
        return sum(self.degrees()) // 2

    def adjacency_matrix(self):
        return [[(a >> j) & 1 for j in range(self.n)] for a in self.adj]

    def is_regular(self):
        return len(set(self.degrees())) <= 1

    @property
    def valency(self):
        d = set(self.degrees())
        return d.pop() if len(d) == 1 else None

    def bfs_layers(self, x):
        """[Gamma_0(x), Gamma_1(x), ...] as bitsets."""
        seen = 1 << x
        layer = 1 << x
        out = [layer]
        while True:
            nxt = 0
            for v in _bits(layer):
                nxt |= self.adj[v]
            nxt &= ~seen
            if not nxt:
                return out
            seen |= nxt
            out.append(nxt)
            layer = nxt

    def distances_from(self, x):
        d = [-1] * self.n
        for i, layer in enumerate(self.bfs_layers(x)):
            for v in _bits(layer):
                d[v] = i
        return d

    def components(self):
        left = self.vertex_mask
        out = []
        while left:
            v = (left & -left).bit_length() - 1
            comp = 0
            for layer in self.bfs_layers(v):
                comp |= layer
            out.append(_bits(comp))
            left &= ~comp
        return out

    def is_connected(self):
        return self.n <= 1 or len(self.components()) == 1

    def diameter(self):
        if not self.is_connected():
            raise DisconnectedGraphError(self.components())
        return max((len(self.bfs_layers(x)) - 1 for x in range(self.n)), default=0)

    def induced_subgraph(self, vertices):
        vs = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(vs)}
        adj = []
        for v in vs:
            a = 0
            for u in _bits(self.adj[v]):
                if u in pos:
                    a |= 1 << pos[u]
            adj.append(a)
        return Graph(len(vs), adj)

    def relabel(self, perm):
        """Graph with vertex v renamed perm[v]."""
        adj = [0] * self.n
        for v in range(self.n):
            a = 0
            for u in _bits(self.adj[v]):
                a |= 1 << perm[u]
            adj[perm[v]] = a
        return Graph(self.n, adj)


def complete_graph(n):
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def empty_graph(n):
    return Graph(n, [0] * n)


def complement(G: Graph) -> Graph:
    full = G.vertex_mask
    return Graph(G.n, [full & ~a & ~(1 << v) for v, a in enumerate(G.adj)])


def line_graph(G: Graph) -> Graph:
    E = G.edges()
    if not E:
        raise ValueError("line graph of an edgeless graph is undefined")
    return Graph.from_relation(E, lambda e, f: len(set(e) & set(f)) == 1)


def local_graph(G: Graph, x: int) -> Graph:
    """Subgraph induced on the neighbours of x, in ascending vertex order."""
    return G.induced_subgraph(G.neighbors(x))


def disjoint_union(G: Graph, H: Graph) -> Graph:
    adj = list(G.adj) + [a << G.n for a in H.adj]
    return Graph(G.n + H.n, adj)


# ------------------------------------------------------------- partitions


class VertexPartition:
    """Ordered list of disjoint nonempty blocks covering 0..n-1."""

    def __init__(self, blocks, n=None):
        blocks = [tuple(sorted(b)) for b in blocks]
        seen = set()
        for b in blocks:
            if not b:
                raise ValueError("empty block in partition")
            for v in b:
                if v in seen:
                    raise ValueError(f"vertex {v} occurs in two blocks")
                seen.add(v)
        if n is not None and seen != set(range(n)):
            missing = sorted(set(range(n)) - seen)
            raise ValueError(f"partition does not cover the vertex set; missing {missing[:5]}")
        self.blocks = tuple(blocks)

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def sizes(self):
        return [len(b) for b in self.blocks]

    def __repr__(self):
        return f"VertexPartition(sizes={self.sizes()})"


def distance_partition(G: Graph, x: int) -> VertexPartition:
    if not G.is_connected():
        raise DisconnectedGraphError(G.components())
    return VertexPartition([_bits(layer) for layer in G.bfs_layers(x)], G.n)


class QuotientMatrix:
    """Average neighbour counts between the blocks of a partition."""

    def __init__(self, entries):
        self.entries = tuple(tuple(Fraction(x) for x in r) for r in entries)

    @property
    def size(self):
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if isinstance(other, QuotientMatrix):
            return self.entries == other.entries
        return [list(r) for r in self.entries] == [list(r) for r in other]

    def __repr__(self):
        rows = "; ".join(" ".join(str(x) for x in r) for r in self.entries)
        return f"QuotientMatrix([{rows}])"

    def is_tridiagonal(self):
        return all(x == 0 for i, r in enumerate(self.entries) for j, x in enumerate(r) if abs(i - j) > 1)


def quotient_matrix(G: Graph, P: VertexPartition):
    """(Q, equitable) where Q[i][j] averages the P_j-neighbours of P_i vertices."""
    VertexPartition(P.blocks, G.n)
    masks = []
    for b in P.blocks:
        m = 0
        for v in b:
            m |= 1 << v
        masks.append(m)
    Q = []
    equitable = True
    for b in P.blocks:
        row = []
        for m in masks:
            counts = [popcount(G.adj[v] & m) for v in b]
            if len(set(counts)) > 1:
                equitable = False
            row.append(Fraction(sum(counts), len(b)))
        Q.append(row)
    return QuotientMatrix(Q), equitable


@functools.lru_cache(maxsize=512)
def graph_char_poly(G: Graph) -> xl.IntPoly:
    return xl.char_poly(G.adjacency_matrix())


def check_interlacing(G: Graph, P: VertexPartition) -> bool:
    """Quotient eigenvalues interlace the adjacency eigenvalues (exact)."""
    Q, _ = quotient_matrix(G, P)
    return xl.interlaces(graph_char_poly(G), xl.char_poly(Q))


# --------------------------------------------------------------- cocliques


def _color_sort(P, adj):
    order, bounds = [], []
    uncolored = P
    color = 0
    while uncolored:
        color += 1
        Q = uncolored
        while Q:
            low = Q & -Q
            v = low.bit_length() - 1
            order.append(v)
            bounds.append(color)
            uncolored &= ~low
            Q &= ~low & ~adj[v]
    return order, bounds


def max_clique_size(G: Graph) -> int:
    adj = G.adj
    best = 0

    def expand(P, size):
        nonlocal best
        order, bounds = _color_sort(P, adj)
        for i in range(len(order) - 1, -1, -1):
            if size + bounds[i] <= best:
                return
            v = order[i]
            nP = P & adj[v]
            if nP:
                expand(nP, size + 1)
            elif size + 1 > best:
                best = size + 1
            P &= ~(1 << v)

    if G.n:
        expand(G.vertex_mask, 0)
    return best


def max_coclique(G: Graph) -> int:
    """Size of a maximum independent set (branch and bound on the complement)."""
    if G.n > COCLIQUE_BUDGET:
        raise BudgetExceededError(f"instance too large: {G.n} vertices exceeds the coclique budget of {COCLIQUE_BUDGET}")
    return max_clique_size(complement(G))


def seidel_switch(G: Graph, S) -> Graph:
    """Complement the edges between S and its complement."""
    smask = 0
    for v in S:
        smask |= 1 << v
    rest = G.vertex_mask & ~smask
    adj = [a ^ (rest if smask >> v & 1 else smask) for v, a in enumerate(G.adj)]
    return Graph(G.n, adj)


# ------------------------------------------------------------- isomorphism


def _vertex_invariants(G: Graph):
    out = []
    for v in range(G.n):
        prof = tuple(popcount(layer) for layer in G.bfs_layers(v))
        N = G.adj[v]
        tri = 0  # triangles inside the local graph = K4s through v
        for u in _bits(N):
            M = N & G.adj[u]
            for w in _bits(M >> (u + 1) << (u + 1)):
                tri += popcount(M & G.adj[w] >> (w + 1) << (w + 1))
        out.append((popcount(N), prof, tri))
    return out


def _refine(nbrs_g, nbrs_h, cg, ch):
    ncls = len(set(cg) | set(ch))
    while True:
        sg = [(cg[v], tuple(sorted(cg[u] for u in nb))) for v, nb in enumerate(nbrs_g)]
        sh = [(ch[v], tuple(sorted(ch[u] for u in nb))) for v, nb in enumerate(nbrs_h)]
        keys = {k: i for i, k in enumerate(sorted(set(sg) | set(sh)))}
        cg = [keys[s] for s in sg]
        ch = [keys[s] for s in sh]
        if len(keys) == ncls:
            return cg, ch
        ncls = len(keys)


def find_isomorphism(G: Graph, H: Graph):
    """A vertex map G -> H preserving adjacency, or None.  Deterministic."""
    for X in (G, H):
        if X.n > ISO_BUDGET:
            raise BudgetExceededError(f"instance too large: {X.n} vertices exceeds the isomorphism budget of {ISO_BUDGET}")
    if G.n != H.n or G.num_edges != H.num_edges or sorted(G.degrees()) != sorted(H.degrees()):
        return None
    ig, ih = _vertex_invariants(G), _vertex_invariants(H)
    if Counter(ig) != Counter(ih):
        return None
    keys = {k: i for i, k in enumerate(sorted(set(ig)))}
    cg = [keys[k] for k in ig]
    ch = [keys[k] for k in ih]
    ng = [G.neighbors(v) for v in range(G.n)]
    nh = [H.neighbors(v) for v in range(H.n)]

    def search(cg, ch):
        cg, ch = _refine(ng, nh, cg, ch)
        cnt = Counter(cg)
        if cnt != Counter(ch):
            return None
        if all(c == 1 for c in cnt.values()):
            where = {c: w for w, c in enumerate(ch)}
            perm = [where[c] for c in cg]
            if all(G.has_edge(u, v) == H.has_edge(perm[u], perm[v]) for u in range(G.n) for v in ng[u]):
                return perm
            return None
        size, color = min((s, c) for c, s in cnt.items() if s > 1)
        v = min(x for x in range(G.n) if cg[x] == color)
        fresh = max(cnt) + 1
        for w in (x for x in range(H.n) if ch[x] == color):
            cg2, ch2 = list(cg), list(ch)
            cg2[v] = fresh
            ch2[w] = fresh
            res = search(cg2, ch2)
            if res is not None:
                return res
        return None

    return search(cg, ch)


def isomorphic(G: Graph, H: Graph) -> bool:
    return find_isomorphism(G, H) is not None


# ---------------------------------------------------------------- formats


def format_native(G: Graph) -> str:
    lines = [f"n {G.n}"]
    for v in range(G.n):
        nb = " ".join(str(u) for u in G.neighbors(v))
        lines.append(f"{v}: {nb}".rstrip())
    return "\n".join(lines) + "\n"


def parse_native(text: str) -> Graph:
    """Parse the ``n <count>`` / ``i: j1 j2 ...`` adjacency-list format."""
    n = None
    rows = {}
    where = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
                raise GraphFormatError(f"expected header 'n <count>', got {raw.strip()!r}", lineno)
            n = int(parts[1])
            continue
        if ":" not in line:
            raise GraphFormatError(f"expected 'i: j1 j2 ...', got {raw.strip()!r}", lineno)
        head, tail = line.split(":", 1)
        try:
            v = int(head)
            nbrs = [int(t) for t in tail.split()]
        except ValueError:
            raise GraphFormatError(f"non-integer vertex label in {raw.strip()!r}", lineno) from None
        if not 0 <= v < n:
            raise GraphFormatError(f"vertex {v} out of range 0..{n - 1}", lineno)
        if v in rows:
            raise GraphFormatError(f"vertex {v} listed twice (first on line {where[v]})", lineno)
        if len(set(nbrs)) != len(nbrs):
            raise GraphFormatError(f"duplicate neighbour in the list of vertex {v}", lineno)
        for u in nbrs:
            if not 0 <= u < n:
                raise GraphFormatError(f"neighbour {u} of vertex {v} out of range 0..{n - 1}", lineno)
            if u == v:
                raise GraphFormatError(f"loop at vertex {v}", lineno)
        rows[v] = nbrs
        where[v] = lineno
    if n is None:
        raise GraphFormatError("missing header 'n <count>'", 1)
    adj = [0] * n
    for v, nbrs in rows.items():
        for u in nbrs:
            adj[v] |= 1 << u
    for v, nbrs in sorted(rows.items(), key=lambda kv: where[kv[0]]):
        for u in nbrs:
            if not adj[u] >> v & 1:
                line = where.get(u, where[v])
                raise GraphFormatError(f"asymmetric adjacency: {v} lists {u} but {u} does not list {v}", line)
    return Graph(n, adj)


def parse_graph6(s: str) -> Graph:
    """Decode one graph6 string (optional >>graph6<< header)."""
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = [ord(ch) - 63 for ch in s]
    if any(not 0 <= d < 64 for d in data):
        raise GraphFormatError("graph6 characters must lie in the range '?'..'~'")
    if not data:
        raise GraphFormatError("empty graph6 string")
    if data[0] < 63:
        n, pos = data[0], 1
    elif len(data) > 1 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
    else:
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        pos = 8
    bits = []
    for d in data[pos:]:
        bits.extend((d >> (5 - i)) & 1 for i in range(6))
    need = n * (n - 1) // 2
    if len(bits) < need or len(data) - pos != (need + 5) // 6:
        raise GraphFormatError(f"graph6 body has {len(data) - pos} bytes, expected {(need + 5) // 6} for n={n}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, adj)


def format_graph6(G: Graph) -> str:
    n = G.n
    if n < 63:
        out = [n]
    elif n < 258048:
        out = [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    else:
        out = [63, 63] + [(n >> (6 * i)) & 63 for i in range(5, -1, -1)]
    bits = [1 if G.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        out.append(v)
    return "".join(chr(x + 63) for x in out)


def read_graph(path: str) -> Graph:
    """Load a native-format file, or graph6 when the suffix is .g6."""
    with open(path) as fh:
        text = fh.read()
    if path.endswith(".g6") or text.lstrip().startswith(">>graph6<<"):
        return parse_graph6(text.strip().splitlines()[0])
    return parse_native(text)
