import itertools

import pytest

from drglocal.constructions import (
    NAMED,
    FamilySpec,
    build,
    certify,
    check_drg,
    distance_k_graph,
    is_locally,
    symplectic_cover,
)
from drglocal.errors import (
    AssetCertificationError,
    DisconnectedGraphError,
    InvalidParametersError,
    UnknownFamilyError,
)
from drglocal.graphcore import Graph, complement, complete_graph, disjoint_union, isomorphic, local_graph
from oracles import nx_array

# arrays from the standard tables (BCN, Brouwer SRG tables)
FAMILY_ARRAYS = {
    "CompleteK(6)": "{5;1}",
    "Multipartite(4,2)": "{6,1;1,6}",
    "Petersen": "{3,2;1,1}",
    "Paley(13)": "{6,3;1,3}",
    "Paley(17)": "{8,4;1,4}",
    "Shrikhande": "{6,3;1,2}",
    "Clebsch(5)": "{5,4;1,2}",
    "Clebsch(10)": "{10,3;1,6}",
    "FoldedCube(5)": "{5,4;1,2}",
    "Icosahedron": "{5,2,1;1,2,5}",
    "Johnson(6,3)": "{9,4,1;1,4,9}",
    "Triangular(8)": "{12,5;1,4}",
    "Grid(4)": "{6,3;1,2}",
    "Schlafli": "{16,5;1,8}",
    "Gosset": "{27,16,1;1,16,27}",
    "HalvedCube(6)": "{15,6,1;1,6,15}",
    "Cycle(7)": "{2,1,1;1,1,1}",
    "Chang(1)": "{12,5;1,4}",
    "Chang(2)": "{12,5;1,4}",
    "Chang(3)": "{12,5;1,4}",
    "SymplecticCover(5,2,1)": "{5,2,1;1,2,5}",
    "SymplecticCover(4,3,1)": "{4,2,1;1,1,4}",
    "SymplecticCover(16,3,1)": "{16,10,1;1,5,16}",
    "doro": "{10,6,4;1,2,5}",
    "conway-smith": "{10,6,4,1;1,2,6,10}",
}


@pytest.mark.parametrize("spec", sorted(FAMILY_ARRAYS))
def test_family_arrays(spec):
    assert str(check_drg(build(spec))) == FAMILY_ARRAYS[spec]


@pytest.mark.parametrize("spec", ["Petersen", "Paley(13)", "Icosahedron", "Johnson(6,3)", "Clebsch(5)", "Shrikhande",
                                  "SymplecticCover(4,3,1)", "Cycle(7)"])
def test_check_drg_agrees_with_networkx(spec):
    G = build(spec)
    arr = check_drg(G)
    assert (tuple(arr.b), tuple(arr.c)) == nx_array(G)


def test_non_drg_gives_witness():
    G = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
    v = check_drg(G)
    assert not v and v.witness


def test_disconnected_rejected():
    with pytest.raises(DisconnectedGraphError):
        check_drg(disjoint_union(complete_graph(3), complete_graph(3)))


def test_distance_2_graph_of_halved_cube():
    G = distance_k_graph(build("HalvedCube(6)"), 2)
    assert str(check_drg(G)) == "{15,8,1;1,8,15}"
    with pytest.raises(InvalidParametersError):
        distance_k_graph(build("Petersen"), 3)


def test_schlafli_is_complement_of_gosset_local():
    S = build("Schlafli")
    assert S.n == 27
    assert isomorphic(complement(local_graph(build("Gosset"), 0)), S)


def test_chang_graphs_distinct():
    gs = [build(f"Chang({i})") for i in (1, 2, 3)] + [build("Triangular(8)")]
    for G, H in itertools.combinations(gs, 2):
        assert not isomorphic(G, H)


def test_symplectic_cover_q16():
    G = symplectic_cover(16, 3, 1)
    assert G.n == 51
    assert is_locally(G, build("FoldedCube(5)"))


def test_symplectic_cover_b_independent_up_to_isomorphism():
    from drglocal.fields import field
    g = field(16).generator
    F = field(16)
    for b in (g, F.mul(g, g)):
        assert isomorphic(symplectic_cover(16, 3, b), symplectic_cover(16, 3, 1))


def test_symplectic_cover_rejects_bad_parameters():
    for args in ((6, 5, 1), (13, 5, 1), (7, 2, 1), (16, 3, 0)):
        with pytest.raises(InvalidParametersError):
            symplectic_cover(*args)


def test_local_structure():
    assert is_locally(build("Shrikhande"), build("Cycle(6)"))
    assert not is_locally(build("Petersen"), complete_graph(3))
    assert is_locally(build("Icosahedron"), build("Cycle(5)"))


def test_named_assets_are_locally_petersen():
    for name in NAMED:
        G = build(name)
        assert is_locally(G, build("Petersen"))
    assert build("doro").n == 65 and build("conway-smith").n == 63


def test_certify_rejects_tampered_asset():
    G = build("doro")
    edges = G.edges()
    bad = Graph.from_edges(G.n, edges[1:])
    with pytest.raises(AssetCertificationError):
        certify(bad, NAMED["doro"])


@pytest.mark.parametrize("text,expected", [
    ("Paley(13)", "Paley(13)"), ("paley 13", "Paley(13)"), ("Johnson(6, 3)", "Johnson(6,3)"),
    ("Named(doro)", "Named(doro)"), ("doro", "Named(doro)"),
])
def test_family_spec_parse(text, expected):
    assert str(FamilySpec.parse(text)) == expected


def test_family_spec_errors():
    with pytest.raises(UnknownFamilyError):
        FamilySpec.parse("Hoffman-Singleton")
    with pytest.raises(InvalidParametersError):
        FamilySpec.parse("Paley(13,2)")
    with pytest.raises(InvalidParametersError):
        build("Paley(15)")
    with pytest.raises(InvalidParametersError):
        build("Chang(4)")
