import pytest

from drglocal.errors import InvalidParametersError
from drglocal.fields import field, prime_power


def test_prime_power():
    assert prime_power(16) == (2, 4)
    assert prime_power(25) == (5, 2)
    assert prime_power(12) is None


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 13, 16, 25])
def test_field_axioms(q):
    F = field(q)
    for a in range(q):
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
        for b in range(q):
            assert F.mul(a, b) == F.mul(b, a)
            for c in (0, 1, q - 1):
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


def test_gf16_generator_order_15():
    F = field(16)
    g = F.generator
    assert [F.power(g, k) == 1 for k in (3, 5, 15)] == [False, False, True]
    assert len(F.squares()) == 15      # characteristic 2: every element is a square


def test_squares_in_odd_field():
    assert len(field(13).squares()) == 6


def test_not_a_prime_power():
    with pytest.raises(InvalidParametersError):
        field(6)
