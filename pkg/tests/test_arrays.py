from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from drglocal.arrays import (
    IMPORTED_FACTS,
    IntersectionArray,
    SRGParams,
    classify_shape,
    coclique_ratio_bound,
    cover_of_complete,
    derive,
    feasibility,
    spectrum,
    srg_from_eigs,
    srg_theta1_multiplicity,
)
from drglocal.errors import ArrayFormatError, InfeasibleArrayError, InvalidParametersError
from oracles import k_sequence, srg_spectrum

A = IntersectionArray.parse


def test_parse_and_round_trip():
    a = A(" { 27, 16 ,1 ; 1,16, 27 } ")
    assert str(a) == "{27,16,1;1,16,27}"
    assert (a.D, a.k, a.a_(1), a.a_(3)) == (3, 27, 10, 0)
    assert A(str(a)) == a


@pytest.mark.parametrize("bad", ["{1,2}", "27,16;1,16", "{a;1}", "{3,2;1}", ""])
def test_malformed_literals(bad):
    with pytest.raises(ArrayFormatError):
        A(bad)


@pytest.mark.parametrize("lit,ks,nu", [
    ("{9,4,1;1,4,9}", (1, 9, 9, 1), 20),
    ("{3,2;1,1}", (1, 3, 6), 10),
    ("{27,16,1;1,16,27}", (1, 27, 27, 1), 56),
    ("{10,6,4,1;1,2,6,10}", (1, 10, 30, 20, 2), 63),
])
def test_derived_k_sequence(lit, ks, nu):
    a = A(lit)
    prm = derive(a)
    assert prm.k_i == tuple(map(Fraction, ks))
    assert prm.k_i == tuple(k_sequence(a.b, a.c))
    assert prm.nu == nu


def _spec(lit):
    sp = spectrum(A(lit))
    return [(str(t), None if m is None else int(m)) for t, m in sp.pairs()]


def test_gosset_spectrum():
    assert _spec("{27,16,1;1,16,27}") == [("27", 1), ("3", 21), ("-1", 27), ("-9", 7)]


def test_conway_smith_spectrum():
    # matches the float spectrum of the 63-vertex graph, computed independently
    assert _spec("{10,6,4,1;1,2,6,10}") == [("10", 1), ("5", 12), ("1", 14), ("-2", 30), ("-4", 6)]


@pytest.mark.parametrize("nu,k,lam,mu", [(13, 6, 2, 3), (16, 6, 2, 2), (27, 10, 1, 5), (10, 3, 0, 1), (17, 8, 3, 4)])
def test_srg_spectrum_against_textbook_formula(nu, k, lam, mu):
    sp = spectrum(SRGParams(nu, k, lam, mu).to_array())
    ref = srg_spectrum(nu, k, lam, mu)
    for (t, m), (rt, rm) in zip(sp.pairs(), ref):
        assert float(t) == pytest.approx(float(rt))
        assert m == Fraction(int(rm))


def test_theta1_multiplicity_closed_form():
    # Petersen: theta1 = 1, theta2 = -2, multiplicity 5
    assert srg_theta1_multiplicity(3, 1, -2, 1) == 5


def test_srg_from_eigs():
    assert srg_from_eigs(6, 1, -2) == SRGParams(10, 6, 3, 4)
    assert srg_from_eigs(28, 3, -4) == SRGParams(50, 28, 15, 16)
    with pytest.raises(InvalidParametersError):
        srg_from_eigs(3, 4, -1)
    with pytest.raises(InfeasibleArrayError):
        srg_from_eigs(5, 2, -4)


def test_coclique_ratio_bound_values():
    assert coclique_ratio_bound(SRGParams(25, 12, 5, 6), 6) == Fraction(19, 12)


def test_shape_tags():
    assert cover_of_complete(A("{16,10,1;1,5,16}")) == (16, 5, 3)
    assert "taylor" in classify_shape(A("{27,16,1;1,16,27}"))
    assert "conference" in classify_shape(A("{6,3;1,3}"))
    assert "complete-multipartite" in classify_shape(A("{6,1;1,6}"))
    assert "bipartite" in classify_shape(A("{3,2,1;1,2,3}"))
    assert "bipartite" not in classify_shape(A("{5,2,1;1,2,5}"))


def _status(lit, code, *assume):
    return feasibility(A(lit), assume).verdict(code).status


def test_feasibility_verdicts():
    assert _status("{21,12,1;1,4,21}", "F3") == "fail"
    assert _status("{28,12,1;1,6,28}", "F7") == "fail"
    assert _status("{24,10;1,12}", "F3") == "fail"
    assert _status("{24,12;1,6}", "F7") == "fail"
    assert feasibility(A("{10,6,4,1;1,2,6,10}")).overall == "surviving"
    assert feasibility(A("{16,10,1;1,5,16}"), ("quadrangle",)).overall == "surviving"


def test_multiplicity_detail_for_21_12():
    d = feasibility(A("{21,12,1;1,4,21}")).verdict("F3").detail
    assert "99/5" in d and "231/5" in d


def test_irrational_multiplicity_reported():
    sp = spectrum(A("{28,12,1;1,6,28}"))
    assert sum(m is None for m in sp.multiplicities) == 2


def test_imported_facts_have_citations():
    for key, fact in IMPORTED_FACTS.items():
        assert fact.citation and fact.provenance == "imported from literature"
        assert str(A(key)) == key


def test_infeasible_spectrum_raises():
    with pytest.raises(InfeasibleArrayError):
        spectrum(A("{14,6;1,8}"))


@given(st.integers(1, 12), st.integers(0, 6), st.integers(-8, -2))
def test_srg_from_eigs_identity(k, th1, th2):
    try:
        p = srg_from_eigs(k, th1, th2)
    except (InvalidParametersError, InfeasibleArrayError):
        return
    assert p.identity_holds()
    arr = p.to_array()
    assert derive(arr).nu == p.nu
    ev = [t for t, _ in spectrum(arr).pairs()] if derive(arr).integral else []
    if ev:
        assert [str(t) for t in ev] == [str(k), str(th1), str(th2)]


@given(st.integers(2, 30), st.integers(1, 29), st.integers(1, 30))
def test_spectrum_multiplicities_sum_to_nu(k, b1, mu):
    if b1 >= k or mu > k:
        return
    arr = IntersectionArray((k, b1), (1, mu))
    prm = derive(arr)
    if not prm.integral:
        return
    sp = spectrum(arr)
    if sp.feasible:
        assert sum(sp.multiplicities) == prm.nu
        # trace of A is zero, trace of A^2 is nu k
        assert abs(sum(float(t) * m for t, m in sp.pairs())) < 1e-9
        assert abs(sum(float(t) ** 2 * m for t, m in sp.pairs()) - prm.nu * k) < 1e-6
