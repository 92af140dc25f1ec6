from fractions import Fraction

import pytest

from drglocal import classification as cl
from drglocal.arrays import SRGParams
from drglocal.constructions import build
from drglocal.errors import InvalidParametersError, LemmaInapplicableError
from drglocal.graphcore import complement, complete_graph


def test_local_property_petersen_and_paley():
    s = cl.local_property(build("Paley(13)"), 1)
    assert s.all_pass and len(s.vertices) == 13
    # local graph of the Petersen graph is 3 isolated vertices: eigenvalue 0 thrice
    p = cl.local_property(build("Petersen"), 1)
    assert p.all_pass and p.vertices[0].theta1 == 0 and not p.vertices[0].connected


def test_local_property_failure_reported():
    # icosahedron: local pentagon, theta1 = (sqrt5 - 1)/2 < 1 passes at t = 1, fails at t = 1/2
    G = build("Icosahedron")
    assert cl.local_property(G, 1).all_pass
    bad = cl.local_property(G, Fraction(1, 2))
    assert len(bad.failures()) == 12


def test_local_property_threshold_rational():
    s = cl.local_property(build("Gosset"), Fraction(3, 2))
    assert s.all_pass
    assert s.vertices[0].m_x == 20


def test_irregular_graph_warns():
    from drglocal.graphcore import Graph
    with pytest.warns(UserWarning):
        cl.local_property(Graph.from_edges(3, [(0, 1), (1, 2)]))


def test_partition_bound_equality_on_schlafli_complement():
    G = complement(build("Schlafli"))
    x = 0
    nb = G.neighbors(x)
    y = next(v for v in nb if any(G.has_edge(v, w) for w in nb))
    z = next(w for w in nb if G.has_edge(y, w))
    r = cl.partition_bound(G, [x, y, z])
    assert (r.alpha, r.bound, r.beta) == (8, 8, 1)
    assert r.equality and r.equitable and r.consistent


def test_partition_bound_single_vertex_of_k4():
    r = cl.partition_bound(complete_graph(4), [0])
    assert (r.alpha, r.bound) == (3, Fraction(3, 2)) and not r.equality


def test_partition_bound_inapplicable_and_invalid():
    with pytest.raises(LemmaInapplicableError):
        cl.partition_bound(build("Paley(13)"), [0])
    with pytest.raises(InvalidParametersError):
        cl.partition_bound(complete_graph(4), [])
    with pytest.raises(InvalidParametersError):
        cl.partition_bound(complete_graph(4), range(4))


def test_mu_partition_bounds_numbers():
    p28, p45 = SRGParams.from_array("{28,12;1,16}"), SRGParams.from_array("{45,16;1,24}")
    assert p28 == SRGParams(50, 28, 15, 16) and p45 == SRGParams(76, 45, 28, 24)
    assert cl.mu_partition_bounds(p28)[1] == 6
    assert cl.mu_partition_bounds(p45)[1] == Fraction(63, 5)
    assert cl.local_srg_alpha(p28, 10) == 5
    assert cl.local_srg_alpha(p45, 21) == 7


def test_sandwich_on_distance_regular_graphs():
    for spec in ("Icosahedron", "Johnson(6,3)", "Gosset", "doro"):
        assert cl.local_eigenvalue_sandwich(build(spec)), spec
    with pytest.raises(InvalidParametersError):
        cl.local_eigenvalue_sandwich(build("Petersen"))


def test_sandwich_bounds_gosset():
    upper, lower = cl.sandwich_bounds("{27,16,1;1,16,27}")
    # theta_D = -9, theta_1 = 3, b1 = 16
    assert upper == 1 and lower == -5


def test_diamond_and_quadrangle_search():
    assert not cl.has_induced_diamond(complement(build("Schlafli")))
    assert cl.has_induced_diamond(build("Schlafli"))
    assert cl.has_induced_quadrangle(build("Petersen")) is False
    assert cl.has_induced_quadrangle(build("Johnson(6,3)"))


def test_connectivity_props_shape():
    props = cl.connectivity_props(build("Paley(13)"))
    assert len(props) == 13 and all(c and cc for _, c, cc in props)


def test_parallel_map_preserves_order(monkeypatch):
    monkeypatch.setenv("DRG_THREADS", "2")
    assert cl.parallel_map(abs, [-3, 2, -1]) == [3, 2, 1]
    monkeypatch.setenv("DRG_THREADS", "1")
    assert cl.parallel_map(abs, [-3, 2, -1]) == [3, 2, 1]


def test_local_catalog_reports():
    reports = cl.verify_local_eigenvalue_list()
    assert {r.status for r in reports} == {"pass", "open"}
    assert sorted(r.expected_array for r in reports if r.status == "open") == sorted(cl.OPEN_ARRAYS)


def test_smallest_eigenvalue_values():
    from drglocal import exactlinalg as xl
    assert xl.smallest_eigenvalue(build("Gosset")) == -9
    assert xl.smallest_eigenvalue(build("Johnson(6,3)")) == -3
    assert xl.smallest_eigenvalue(build("conway-smith")) == -4
    # complete multipartite K_{n x t}: smallest eigenvalue is -t
    assert xl.smallest_eigenvalue(build("Multipartite(4,3)")) == -3


def test_property_corpus_all_pass():
    bad = [r for r in cl.verify_properties() if r.status != "pass"]
    assert not bad, "\n".join(r.text() for r in bad)


# ---------------------------------------------------------------- scans

@pytest.fixture(scope="module")
def d3():
    return cl.scan_diameter3plus()


@pytest.fixture(scope="module")
def d2():
    return cl.scan_diameter2()


def _pairs(part):
    return {(e.params["t"], e.params["alpha"]) for e in part.survivors()}


def test_d3_regular_line_graph_pairs(d3):
    part = d3.part("line-graph-regular")
    assert _pairs(part) == {(4, 1), (5, 1), (6, 1), (4, 2)}
    e = next(e for e in part.entries if e.params == {"t": 3, "alpha": 3})
    assert "Terwilliger" in e.reason


def test_d3_regular_line_graph_arrays_imported(d3):
    part = d3.part("line-graph-regular")
    assert sorted(e.item for e in part.arrays) == sorted(
        ["{10,6,1;1,2,10}", "{10,6,1;1,3,10}", "{15,8,1;1,4,15}", "{12,6,1;1,3,12}"])
    assert all(e.kind == "imported" for e in part.arrays)


def test_d3_semiregular_empty(d3):
    assert not d3.part("line-graph-semiregular").survivors()


def test_d3_e7_case(d3):
    part = d3.part("e7-subgraph")
    assert [e.item for e in part.arrays] == ["{28,12,1;1,6,28}"]
    assert part.arrays[0].kind == "arithmetic"


def test_d3_schlafli_case(d3):
    part = d3.part("schlafli-subgraph")
    cands = {e.item: e for e in part.arrays if e.params.get("candidate")}
    assert set(cands) == {"{15,8,1;1,4,15}", "{21,12,1;1,4,21}", "{24,14,1;1,7,24}", "{27,16,1;1,4,27}"}
    assert cands["{15,8,1;1,4,15}"].kind == "imported"
    assert cands["{21,12,1;1,4,21}"].kind == "arithmetic"
    assert cands["{24,14,1;1,7,24}"].kind == cands["{27,16,1;1,4,27}"].kind == "prose"


def test_d3_only_survivor_is_the_cover(d3):
    assert d3.surviving_arrays() == ["{16,10,1;1,5,16}"]


def test_d2_regular_line_graph_pairs(d2):
    part = d2.part("line-graph-regular")
    expected = {(4, a) for a in range(1, 6)} | {(5, 1), (5, 3), (6, 1), (6, 2), (6, 3), (7, 1), (7, 3), (8, 1), (9, 1)}
    assert _pairs(part) == expected
    assert any("(7, 5)" in n and "(10, 1)" in n for n in part.notes)


def test_d2_regular_line_graph_arrays(d2):
    part = d2.part("line-graph-regular")
    assert sorted(part.surviving_arrays()) == sorted(["{12,6;1,6}", "{15,8;1,6}", "{28,12;1,16}", "{45,16;1,24}"])
    assert part.array_entry("{10,6;1,4}").kind == "imported"


def test_d2_semiregular_pairs_and_coclique_kills(d2):
    part = d2.part("line-graph-semiregular")
    pairs = {(e.params["sigma"] * e.params["t"], e.params["s"] + e.params["t"] - 2) for e in part.survivors()}
    assert pairs == {(12, 6), (14, 7), (18, 6), (15, 6), (18, 7), (21, 8), (24, 6), (32, 8), (24, 8)}
    assert not part.surviving_arrays()
    for lit in ("{12,6;1,6}", "{14,7;1,7}", "{15,6;1,9}", "{21,8;1,12}"):
        assert "coclique" in part.array_entry(lit).reason


def test_d2_union_and_final(d2):
    union = d2.part("union")
    expected = {cl.corrected_literal(a) for a in cl.CANDIDATE_ARRAYS}
    assert {e.item for e in union.arrays} == expected
    final = {e.item: e for e in d2.arrays}
    assert sorted(d2.surviving_arrays()) == sorted(cl.OPEN_ARRAYS)
    assert final["{28,12;1,16}"].kind == final["{45,16;1,24}"].kind == "arithmetic"
    assert final["{27,16;1,6}"].kind == final["{24,14;1,6}"].kind == "prose"


def test_d2_imported_24_10(d2):
    e = d2.part("e7-subgraph").array_entry("{24,10;1,12}")
    assert e.kind == "imported" and "F3" in e.arithmetic


def test_scans_deterministic():
    assert cl.scan_diameter3plus().to_dict() == cl.scan_diameter3plus().to_dict()
    assert cl.scan_diameter2().text() == cl.scan_diameter2().text()
