"""Randomized universal properties over the distance-regular corpus."""
import functools

from hypothesis import given, strategies as st

from drglocal import classification as cl
from drglocal import exactlinalg as xl
from drglocal.arrays import classify_shape, derive, feasibility
from drglocal.constructions import check_drg
from drglocal.graphcore import VertexPartition, graph_char_poly, local_graph
from conftest import corpus_graphs
from oracles import float_eigs

CORPUS = corpus_graphs()
SMALL = [(n, G) for n, G in CORPUS if G.n <= 40]


@functools.lru_cache(maxsize=None)
def _graph(i):
    return CORPUS[i][1]


@functools.lru_cache(maxsize=None)
def _theta1_at_most_1():
    # regular graphs with second eigenvalue <= 1: corpus members plus their local graphs
    out = []
    for _, G in CORPUS:
        if xl.count_roots_greater(graph_char_poly(G), 1) <= 1:
            out.append(G)
        L = local_graph(G, 0)
        if L.n >= 2 and L.is_regular() and xl.count_roots_greater(graph_char_poly(L), 1) <= 1:
            out.append(L)
    return out


@given(st.integers(0, len(SMALL) - 1), st.data())
def test_principal_submatrix_interlacing(i, data):
    G = SMALL[i][1]
    keep = sorted(data.draw(st.sets(st.integers(0, G.n - 1), min_size=1, max_size=min(G.n - 1, 16))))
    A = G.adjacency_matrix()
    sub = [[A[r][c] for c in keep] for r in keep]
    assert xl.interlaces(graph_char_poly(G), xl.char_poly(sub))


@given(st.integers(0, len(CORPUS) - 1), st.integers(2, 5), st.data())
def test_quotient_interlacing_random_partition(i, parts, data):
    G = _graph(i)
    labels = data.draw(st.lists(st.integers(0, parts - 1), min_size=G.n, max_size=G.n))
    blocks = [[v for v in range(G.n) if labels[v] == b] for b in range(parts)]
    P = VertexPartition([b for b in blocks if b], G.n)
    Q, _ = cl.quotient_matrix(G, P)
    assert xl.interlaces(graph_char_poly(G), xl.char_poly(Q))


@given(st.data())
def test_partition_bound_random_subsets(data):
    gs = _theta1_at_most_1()
    G = gs[data.draw(st.integers(0, len(gs) - 1))]
    A = data.draw(st.sets(st.integers(0, G.n - 1), min_size=1, max_size=G.n - 1))
    r = cl.partition_bound(G, A)
    assert r.holds
    if r.equality:
        assert r.equitable


def test_partition_bound_pool_nontrivial():
    assert len(_theta1_at_most_1()) >= 10


def test_terwilliger_chain_on_quadrangle_graphs():
    seen = 0
    for name, G in CORPUS:
        arr = check_drg(G)
        if arr.D >= 2 and cl.has_induced_quadrangle(G):
            seen += 1
            rep = feasibility(arr, ("quadrangle",))
            assert rep.verdict("F4").status == "pass", name
    assert seen >= 5


def test_sandwich_on_diameter_3_graphs():
    seen = 0
    for name, G in CORPUS:
        if check_drg(G).D >= 3:
            seen += 1
            assert cl.local_eigenvalue_sandwich(G), name
    assert seen >= 8


def test_local_connectivity_flags():
    seen = 0
    for name, G in CORPUS:
        arr = check_drg(G)
        s = cl.local_property(G, 1)
        if not s.all_pass or arr.D == 0 or derive(arr).a[0] < 2:
            continue
        seen += 1
        multipartite = arr.D <= 1 or "complete-multipartite" in classify_shape(arr)
        for x, conn, coconn in cl.connectivity_props(G):
            assert conn, (name, x)
            assert coconn or multipartite, (name, x)
    assert seen >= 5


def test_mx_bound_when_theta1_exceeds_1():
    from drglocal.arrays import spectrum
    seen = 0
    for name, G in CORPUS:
        arr = check_drg(G)
        if arr.D < 2 or derive(arr).a[0] < 2:
            continue
        s = cl.local_property(G, 1)
        if s.all_pass and spectrum(arr).eigenvalues[1] > 1:
            seen += 1
            assert s.max_m_x <= 1 + derive(arr).k_i[2], name
    assert seen >= 3


def test_exact_verdict_agrees_with_floats():
    compared = 0
    for name, G in CORPUS:
        for x in range(G.n):
            L = local_graph(G, x)
            if L.n < 2:
                continue
            lam2 = float_eigs(L)[1]
            if abs(lam2 - 1) <= 1e-6:
                continue
            compared += 1
            exact = xl.count_roots_greater(graph_char_poly(L), 1) <= 1
            assert exact == (lam2 < 1), (name, x)
    assert compared > 300
