"""Graph families, finite-field covers, named assets and distance-regularity certificates."""
from __future__ import annotations

import functools
import itertools
import re
from dataclasses import dataclass
from importlib import resources

from . import fields
from .arrays import IntersectionArray, as_array
from .errors import (
    AssetCertificationError,
    DisconnectedGraphError,
    InvalidParametersError,
    UnknownFamilyError,
)
from .graphcore import (
    Graph,
    _bits,
    complement,
    complete_graph,
    isomorphic,
    local_graph,
    parse_native,
    popcount,
    seidel_switch,
)

# ------------------------------------------------------------- certificates


@dataclass(frozen=True)
class NotDistanceRegular:
    """Negative check_drg verdict; falsy so ``if check_drg(G):`` reads naturally."""

    reason: str
    witness: tuple

    def __bool__(self):
        return False

    def __str__(self):
        return f"not distance-regular: {self.reason} (witness {self.witness})"


def check_drg(G: Graph):
    """The intersection array of G, certified over all ordered pairs, or NotDistanceRegular."""
    if not G.is_connected():
        raise DisconnectedGraphError(G.components())
    if G.n == 1:
        return IntersectionArray((), ())
    degs = G.degrees()
    k = degs[0]
    for v, d in enumerate(degs):
        if d != k:
            return NotDistanceRegular(f"degree {d} at vertex {v} differs from degree {k} at vertex 0", (0, v))
    b = c = None
    for x in range(G.n):
        layers = G.bfs_layers(x)
        D = len(layers) - 1
        bx, cx = [], []
        for i, layer in enumerate(layers):
            prev = layers[i - 1] if i else 0
            nxt = layers[i + 1] if i < D else 0
            ci = bi = None
            for y in _bits(layer):
                cy, by = popcount(G.adj[y] & prev), popcount(G.adj[y] & nxt)
                if ci is None:
                    ci, bi, y0 = cy, by, y
                elif (cy, by) != (ci, bi):
                    return NotDistanceRegular(
                        f"vertices {y0} and {y} at distance {i} from {x} have (c, b) = {(ci, bi)} and {(cy, by)}", (x, y))
            if i < D:
                bx.append(bi)
            if i > 0:
                cx.append(ci)
        if b is None:
            b, c = bx, cx
        elif (bx, cx) != (b, c):
            return NotDistanceRegular(f"vertex {x} sees array {IntersectionArray(bx, cx)}, vertex 0 sees {IntersectionArray(b, c)}", (0, x))
    return IntersectionArray(b, c)


def is_distance_regular(G):
    return G.is_connected() and bool(check_drg(G))


def distance_k_graph(G: Graph, k: int) -> Graph:
    """Same vertices, x ~ y iff d(x, y) = k."""
    D = G.diameter()
    if not 1 <= k <= D:
        raise InvalidParametersError(f"distance {k} outside 1..{D} (the diameter)")
    adj = []
    for x in range(G.n):
        layers = G.bfs_layers(x)
        adj.append(layers[k])
    return Graph(G.n, adj)


def is_locally(G: Graph, H: Graph) -> bool:
    """Every local graph of G is isomorphic to H."""
    k = G.valency
    if k is None:
        raise InvalidParametersError("is_locally needs a regular graph")
    if H.n != k:
        return False
    return all(isomorphic(local_graph(G, x), H) for x in range(G.n))


# ---------------------------------------------------------------- families


def complete(n):
    if n < 1:
        raise InvalidParametersError("CompleteK(n) needs n >= 1")
    return complete_graph(n)


def multipartite(n, t):
    """K_{n x t}: n parts of size t."""
    if n < 2 or t < 1:
        raise InvalidParametersError("Multipartite(n, t) needs n >= 2 and t >= 1")
    labels = [(i, j) for i in range(n) for j in range(t)]
    return Graph.from_relation(labels, lambda x, y: x[0] != y[0])


def johnson(n, k):
    if not 1 <= k < n:
        raise InvalidParametersError(f"Johnson(n, k) needs 1 <= k < n, got ({n}, {k})")
    labels = [frozenset(s) for s in itertools.combinations(range(n), k)]
    return Graph.from_relation(labels, lambda a, b: len(a & b) == k - 1)


def triangular(n):
    if n < 3:
        raise InvalidParametersError("Triangular(n) needs n >= 3")
    return johnson(n, 2)


def grid(n):
    """The n x n rook graph."""
    if n < 2:
        raise InvalidParametersError("Grid(n) needs n >= 2")
    labels = [(i, j) for i in range(n) for j in range(n)]
    return Graph.from_relation(labels, lambda x, y: (x[0] == y[0]) != (x[1] == y[1]))


def grid_complement(n):
    return complement(grid(n))


def paley(q):
    pe = fields.prime_power(q)
    if pe is None or q % 4 != 1:
        raise InvalidParametersError(f"Paley(q) needs a prime power q = 1 mod 4, got {q}")
    F = fields.field(q)
    sq = F.squares()
    return Graph.from_relation(range(q), lambda a, b: F.sub(a, b) in sq)


def halved_cube(n):
    if n < 2:
        raise InvalidParametersError("HalvedCube(n) needs n >= 2")
    labels = [v for v in range(1 << n) if popcount(v) % 2 == 0]
    return Graph.from_relation(labels, lambda a, b: popcount(a ^ b) == 2)


def folded_cube(n):
    """(n-1)-bit vectors, adjacent at Hamming distance 1 or n-1."""
    if n < 3:
        raise InvalidParametersError("FoldedCube(n) needs n >= 3")
    return Graph.from_relation(range(1 << (n - 1)), lambda a, b: popcount(a ^ b) in (1, n - 1))


def cycle(n):
    if n < 3:
        raise InvalidParametersError("Cycle(n) needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def _zphi_mul(x, y):
    # (a + b phi)(c + d phi) with phi^2 = phi + 1
    a, b = x
    c, d = y
    return (a * c + b * d, a * d + b * c + b * d)


def icosahedron():
    """Vertices (0, +-1, +-phi) and cyclic shifts, exact in Z[phi]; edges at squared distance 4."""
    pts = []
    for s1 in (1, -1):
        for s2 in (1, -1):
            base = [(0, 0), (s1, 0), (0, s2)]
            for r in range(3):
                pts.append(tuple(base[(i - r) % 3] for i in range(3)))
    pts.sort()

    def sqdist(p, q):
        tot = (0, 0)
        for x, y in zip(p, q):
            d = (x[0] - y[0], x[1] - y[1])
            s = _zphi_mul(d, d)
            tot = (tot[0] + s[0], tot[1] + s[1])
        return tot

    return Graph.from_relation(pts, lambda p, q: sqdist(p, q) == (4, 0))


def petersen():
    return complement(johnson(5, 2))


def shrikhande():
    """Cay(Z_4^2, {+-(1,0), +-(0,1), +-(1,1)})."""
    conn = {(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)}
    labels = [(i, j) for i in range(4) for j in range(4)]
    return Graph.from_relation(labels, lambda x, y: ((x[0] - y[0]) % 4, (x[1] - y[1]) % 4) in conn)


def clebsch(valency):
    if valency == 10:
        return halved_cube(5)
    if valency == 5:
        return complement(halved_cube(5))
    raise InvalidParametersError(f"Clebsch(valency) needs valency 5 or 10, got {valency}")


def gosset():
    """Taylor graph {27,16,1;1,16,27} on (S, sign), S a 2-subset of {0..7}.

    Same sign adjacent iff S, T are disjoint; opposite sign iff |S & T| = 1.
    This is the distance-2 graph of the E7 root graph; its local graphs are
    complements of the Schlafli graph.
    """
    labels = [(frozenset(s), e) for e in (1, -1) for s in itertools.combinations(range(8), 2)]

    def rel(x, y):
        m = len(x[0] & y[0])
        return m == 0 if x[1] == y[1] else m == 1

    return Graph.from_relation(labels, rel)


def schlafli():
    """SRG(27,16,10,8): complement of a local graph of the Gosset graph."""
    return complement(local_graph(gosset(), 0))


# K8 edge sets whose T(8) vertices form the switching sets (repo convention for the order)
CHANG_SWITCHING_SETS = {
    1: [(0, 1), (2, 3), (4, 5), (6, 7)],
    2: [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (0, 7)],
    3: [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (5, 6), (6, 7), (3, 7)],
}


def chang(i):
    if i not in CHANG_SWITCHING_SETS:
        raise InvalidParametersError(f"Chang(i) needs i in 1..3, got {i}")
    labels = list(itertools.combinations(range(8), 2))
    pos = {e: j for j, e in enumerate(labels)}
    S = [pos[tuple(sorted(e))] for e in CHANG_SWITCHING_SETS[i]]
    return seidel_switch(triangular(8), S)


def symplectic_cover(q, r, b=1):
    """Classes Kv of nonzero v in GF(q)^2, K of index r, with Ku ~ Kv iff B(u, v) in bK.

    ``b`` is a field element given by its integer code.
    """
    pe = fields.prime_power(q)
    if pe is None or r <= 1 or (q - 1) % r:
        raise InvalidParametersError(f"symplectic cover needs q = rm + 1 be a prime power with r > 1; got q={q}, r={r}")
    m = (q - 1) // r
    if m % 2 and pe[0] != 2:
        raise InvalidParametersError(f"symplectic cover needs m = {m} even or q a power of 2")
    F = fields.field(q)
    if not 0 < b < q:
        raise InvalidParametersError(f"b must be a nonzero element of GF({q}), got code {b}")
    K = sorted(F.subgroup(r))
    bK = frozenset(F.mul(b, k) for k in K)
    reps = {}
    for v in itertools.product(range(q), repeat=2):
        if v == (0, 0):
            continue
        cls = min((F.mul(k, v[0]), F.mul(k, v[1])) for k in K)
        reps.setdefault(cls, cls)
    labels = sorted(reps)

    def form(u, v):
        return F.sub(F.mul(u[0], v[1]), F.mul(u[1], v[0]))

    return Graph.from_relation(labels, lambda u, v: form(u, v) in bK)


# ------------------------------------------------------------ named assets


@dataclass(frozen=True)
class NamedGraphEntry:
    name: str
    asset: str
    expected_array: str
    expected_local: str | None = None


NAMED = {
    "conway-smith": NamedGraphEntry("conway-smith", "conway_smith.txt", "{10,6,4,1;1,2,6,10}", "Petersen"),
    "doro": NamedGraphEntry("doro", "doro.txt", "{10,6,4;1,2,5}", "Petersen"),
}


@functools.lru_cache(maxsize=None)
def load_named(name: str) -> Graph:
    """Load an embedded asset and certify it, raising AssetCertificationError on any mismatch."""
    key = name.lower().replace("_", "-")
    if key not in NAMED:
        raise UnknownFamilyError(f"unknown named graph {name!r}; known: {', '.join(sorted(NAMED))}")
    entry = NAMED[key]
    try:
        text = resources.files("drglocal").joinpath("assets").joinpath(entry.asset).read_text()
    except OSError as e:
        raise AssetCertificationError(f"asset {entry.asset} unreadable: {e}") from None
    G = parse_native(text)
    return certify(G, entry)


def certify(G: Graph, entry: NamedGraphEntry) -> Graph:
    if not G.is_connected():
        raise AssetCertificationError(f"{entry.name}: asset graph is disconnected")
    arr = check_drg(G)
    if not arr:
        raise AssetCertificationError(f"{entry.name}: {arr}")
    if arr != as_array(entry.expected_array):
        raise AssetCertificationError(f"{entry.name}: certified array {arr} differs from expected {entry.expected_array}")
    if entry.expected_local and not is_locally(G, build(FamilySpec.parse(entry.expected_local))):
        raise AssetCertificationError(f"{entry.name}: some local graph is not {entry.expected_local}")
    return G


# ------------------------------------------------------------- family spec

_FAMILIES = {
    "completek": (complete, 1),
    "multipartite": (multipartite, 2),
    "triangular": (triangular, 1),
    "grid": (grid, 1),
    "gridcomplement": (grid_complement, 1),
    "paley": (paley, 1),
    "johnson": (johnson, 2),
    "halvedcube": (halved_cube, 1),
    "foldedcube": (folded_cube, 1),
    "cycle": (cycle, 1),
    "icosahedron": (icosahedron, 0),
    "petersen": (petersen, 0),
    "shrikhande": (shrikhande, 0),
    "clebsch": (clebsch, 1),
    "schlafli": (schlafli, 0),
    "gosset": (gosset, 0),
    "chang": (chang, 1),
    "symplecticcover": (symplectic_cover, (2, 3)),
}

_CANON = {
    "completek": "CompleteK", "multipartite": "Multipartite", "triangular": "Triangular", "grid": "Grid",
    "gridcomplement": "GridComplement", "paley": "Paley", "johnson": "Johnson", "halvedcube": "HalvedCube",
    "foldedcube": "FoldedCube", "cycle": "Cycle", "icosahedron": "Icosahedron", "petersen": "Petersen",
    "shrikhande": "Shrikhande", "clebsch": "Clebsch", "schlafli": "Schlafli", "gosset": "Gosset",
    "chang": "Chang", "symplecticcover": "SymplecticCover", "named": "Named",
}

_SPEC_RE = re.compile(r"^\s*([A-Za-z][A-Za-z0-9_-]*)\s*(?:\((.*)\))?\s*$")


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    args: tuple = ()

    @classmethod
    def parse(cls, text, extra=()):
        """'Paley(13)', 'paley 13', 'Named(doro)' or a bare asset name such as 'doro'."""
        parts = text.split()
        if len(parts) > 1 and "(" not in text:
            text, extra = parts[0], tuple(parts[1:]) + tuple(extra)
        m = _SPEC_RE.match(text)
        if not m:
            raise UnknownFamilyError(f"cannot parse family spec {text!r}")
        key = m.group(1).lower().replace("_", "").replace("-", "")
        raw = [a.strip() for a in m.group(2).split(",")] if m.group(2) else []
        raw += [str(a) for a in extra]
        if key == "named" or m.group(1).lower() in NAMED:
            name = raw[0] if key == "named" and raw else m.group(1)
            return cls("Named", (name.lower(),))
        if key not in _FAMILIES:
            raise UnknownFamilyError(f"unknown family {m.group(1)!r}; known: {', '.join(sorted(_CANON.values()))}")
        try:
            args = tuple(int(a) for a in raw if a)
        except ValueError:
            raise InvalidParametersError(f"non-integer parameter in {text!r}") from None
        spec = cls(_CANON[key], args)
        spec._arity_check()
        return spec

    def _arity_check(self):
        fn, arity = _FAMILIES[self.kind.lower()]
        ok = arity if isinstance(arity, tuple) else (arity,)
        if len(self.args) not in ok:
            raise InvalidParametersError(f"{self.kind} takes {' or '.join(map(str, ok))} parameter(s), got {len(self.args)}")

    def __str__(self):
        return self.kind + (f"({','.join(map(str, self.args))})" if self.args else "")

    def build(self) -> Graph:
        if self.kind == "Named":
            return load_named(self.args[0])
        self._arity_check()
        fn, _ = _FAMILIES[self.kind.lower()]
        return fn(*self.args)


def build(spec) -> Graph:
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    return spec.build()
