"""Regenerate the embedded Conway-Smith and Doro adjacency assets.

Conway-Smith: a triangle-respecting Z_3 voltage lift of the Kneser graph K(7,2).
Doro: the 65 sublines PGL(2,5)-images in one PSL(2,25)-orbit, adjacent when disjoint.
Both outputs are certified by check_drg (and locally Petersen) before writing.

    python tools/generate_assets.py
"""
import itertools
import pathlib

from drglocal import fields
from drglocal.constructions import NAMED, certify, check_drg
from drglocal.graphcore import Graph, format_native

ASSETS = pathlib.Path(__file__).resolve().parents[1] / "src" / "drglocal" / "assets"


def _nullspace_mod(rows, ncols, p):
    M = [list(r) for r in rows]
    piv = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(M)) if M[i][c] % p), None)
        if pr is None:
            continue
        M[r], M[pr] = M[pr], M[r]
        inv = pow(M[r][c], -1, p)
        M[r] = [x * inv % p for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] % p:
                f = M[i][c]
                M[i] = [(x - f * y) % p for x, y in zip(M[i], M[r])]
        piv.append(c)
        r += 1
    basis = []
    for f in (c for c in range(ncols) if c not in piv):
        v = [0] * ncols
        v[f] = 1
        for i, c in enumerate(piv):
            v[c] = -M[i][f] % p
        basis.append(v)
    return basis


def conway_smith():
    V = list(itertools.combinations(range(7), 2))
    K = Graph.from_relation(V, lambda a, b: not set(a) & set(b))
    E = K.edges()
    # BFS spanning tree gets zero voltage
    tree = set()
    seen = {0}
    queue = [0]
    while queue:
        u = queue.pop(0)
        for w in K.neighbors(u):
            if w not in seen:
                seen.add(w)
                tree.add((min(u, w), max(u, w)))
                queue.append(w)
    free = [e for e in E if e not in tree]
    fi = {e: i for i, e in enumerate(free)}
    rows = []
    for a, b, c in itertools.combinations(range(K.n), 3):
        if K.has_edge(a, b) and K.has_edge(b, c) and K.has_edge(a, c):
            r = [0] * len(free)
            for e, s in (((a, b), 1), ((b, c), 1), ((a, c), -1)):
                if e in fi:
                    r[fi[e]] = (r[fi[e]] + s) % 3
            rows.append(r)
    basis = _nullspace_mod(rows, len(free), 3)
    want = NAMED["conway-smith"].expected_array
    for vec in basis:
        w = {e: 0 for e in E}
        w.update(zip(free, vec))
        edges = []
        for a, b in E:
            for i in range(3):
                edges.append((3 * a + i, 3 * b + (i + w[(a, b)]) % 3))
        G = Graph.from_edges(3 * K.n, edges)
        if G.is_connected() and str(check_drg(G)) == want:
            return G
    raise RuntimeError("no voltage assignment gave the Conway-Smith array")


def doro():
    F = fields.field(25)
    INF = 25

    def mob(m, z):
        a, b, c, d = m
        if z == INF:
            return INF if c == 0 else F.mul(a, F.inv(c))
        num = F.add(F.mul(a, z), b)
        den = F.add(F.mul(c, z), d)
        return INF if den == 0 else F.mul(num, F.inv(den))

    base = frozenset(list(range(5)) + [INF])  # GF(5) and infinity
    gens = [(1, a, 0, 1) for a in range(1, 25)]
    gens += [(s, 0, 0, 1) for s in F.squares()]
    gens.append((0, 1, F.neg(1), 0))
    orbit = {base}
    todo = [base]
    while todo:
        s = todo.pop()
        for m in gens:
            t = frozenset(mob(m, z) for z in s)
            if t not in orbit:
                orbit.add(t)
                todo.append(t)
    labels = sorted(orbit, key=sorted)
    return Graph.from_relation(labels, lambda x, y: not x & y)


def main():
    ASSETS.mkdir(parents=True, exist_ok=True)
    for name, G in (("conway-smith", conway_smith()), ("doro", doro())):
        entry = NAMED[name]
        certify(G, entry)
        (ASSETS / entry.asset).write_text(f"# {name} {entry.expected_array}\n" + format_native(G))
        print(f"wrote {entry.asset}: {G.n} vertices, {check_drg(G)}")


if __name__ == "__main__":
    main()
