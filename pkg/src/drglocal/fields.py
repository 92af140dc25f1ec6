"""Small finite fields GF(p^e) with table arithmetic.

Elements are coded as integers sum c_i p^i over the polynomial basis
1, x, ..., x^(e-1).  GF(16) is fixed to the modulus x^4 + x + 1; other
fields use the first monic irreducible polynomial in code order.
"""
from __future__ import annotations

import functools
import itertools

from .errors import InvalidParametersError

FIXED_MODULI = {(2, 4): (1, 1, 0, 0, 1)}


def prime_power(q):
    """(p, e) with q = p^e, or None."""
    if q < 2:
        return None
    p = next(d for d in itertools.count(2) if q % d == 0)
    e = 0
    while q % p == 0:
        q //= p
        e += 1
    return (p, e) if q == 1 else None


def _polymod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        c = a[-1] % p
        if c:
            shift = len(a) - 1 - dm
            for i, mc in enumerate(m):
                a[shift + i] = (a[shift + i] - c * mc) % p
        a.pop()
    return [x % p for x in a]


def _is_irreducible(m, p):
    e = len(m) - 1
    for d in range(1, e // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            f = list(tail) + [1]
            r = _polymod(m, f, p)
            if not any(r):
                return False
    return True


def _first_irreducible(p, e):
    for tail in itertools.product(range(p), repeat=e):
        m = tuple(reversed(tail)) + (1,)
        if m[0] and _is_irreducible(m, p):
            return m
    raise AssertionError("no irreducible polynomial found")


class GF:
    """The field with q = p^e elements."""

    def __init__(self, q):
        pe = prime_power(q)
        if pe is None:
            raise InvalidParametersError(f"GF({q}): {q} is not a prime power")
        self.q, (self.p, self.e) = q, pe
        p, e = self.p, self.e
        self.modulus = FIXED_MODULI.get((p, e)) or (_first_irreducible(p, e) if e > 1 else (0, 1))
        self._vec = [self._to_vec(a) for a in range(q)]
        self.add_t = [[self._from_vec([(x + y) % p for x, y in zip(self._vec[a], self._vec[b])]) for b in range(q)] for a in range(q)]
        self.mul_t = [[self._mul_slow(a, b) for b in range(q)] for a in range(q)]
        self.neg_t = [self._from_vec([(-x) % p for x in self._vec[a]]) for a in range(q)]
        self.generator = self._find_generator()
        self.exp_t = [1]
        for _ in range(q - 2):
            self.exp_t.append(self.mul_t[self.exp_t[-1]][self.generator])
        self.log_t = {a: i for i, a in enumerate(self.exp_t)}
        self.inv_t = [0] + [self.exp_t[(-self.log_t[a]) % (q - 1)] for a in range(1, q)]

    def _to_vec(self, a):
        v = []
        for _ in range(self.e):
            v.append(a % self.p)
            a //= self.p
        return v

    def _from_vec(self, v):
        a = 0
        for c in reversed(v):
            a = a * self.p + c
        return a

    def _mul_slow(self, a, b):
        va, vb = self._vec[a], self._vec[b]
        prod = [0] * (2 * self.e - 1)
        for i, x in enumerate(va):
            for j, y in enumerate(vb):
                prod[i + j] += x * y
        r = _polymod(prod, self.modulus, self.p) if self.e > 1 else [prod[0] % self.p]
        r += [0] * (self.e - len(r))
        return self._from_vec(r[: self.e])

    def _order(self, a):
        x, k = a, 1
        while x != 1:
            x = self.mul_t[x][a]
            k += 1
        return k

    def _find_generator(self):
        # x itself (code p) is tried first so GF(16) uses x as its generator
        cands = ([self.p] if self.e > 1 else []) + list(range(2, self.q)) + [1]
        for a in cands:
            if a and self._order(a) == self.q - 1:
                return a
        raise AssertionError("no generator")

    # scalar arithmetic on codes
    def add(self, a, b):
        return self.add_t[a][b]

    def sub(self, a, b):
        return self.add_t[a][self.neg_t[b]]

    def neg(self, a):
        return self.neg_t[a]

    def mul(self, a, b):
        return self.mul_t[a][b]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self.inv_t[a]

    def power(self, a, k):
        if a == 0:
            return 0 if k else 1
        return self.exp_t[(self.log_t[a] * k) % (self.q - 1)]

    def squares(self):
        """Nonzero squares."""
        return frozenset(self.mul_t[a][a] for a in range(1, self.q))

    def subgroup(self, index):
        """The multiplicative subgroup of the given index (generated by g^index)."""
        if (self.q - 1) % index:
            raise InvalidParametersError(f"index {index} does not divide {self.q - 1}")
        return frozenset(self.exp_t[i] for i in range(0, self.q - 1, index))

    def element(self, code):
        return FiniteFieldElem(self, code)

    def elements(self):
        return [FiniteFieldElem(self, a) for a in range(self.q)]

    def __repr__(self):
        return f"GF({self.q})"


@functools.lru_cache(maxsize=None)
def field(q) -> GF:
    return GF(q)


class FiniteFieldElem:
    """Element of GF(p^e); ``coeffs`` is its vector over GF(p) in the polynomial basis."""

    __slots__ = ("F", "code")

    def __init__(self, F: GF, code: int):
        self.F = F
        self.code = code

    @property
    def p(self):
        return self.F.p

    @property
    def e(self):
        return self.F.e

    @property
    def coeffs(self):
        return tuple(self.F._vec[self.code])

    def _wrap(self, other):
        if isinstance(other, FiniteFieldElem):
            return other.code
        return self.F._from_vec(self.F._to_vec(other % self.F.p))

    def __add__(self, other):
        return FiniteFieldElem(self.F, self.F.add(self.code, self._wrap(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FiniteFieldElem(self.F, self.F.sub(self.code, self._wrap(other)))

    def __neg__(self):
        return FiniteFieldElem(self.F, self.F.neg(self.code))

    def __mul__(self, other):
        return FiniteFieldElem(self.F, self.F.mul(self.code, self._wrap(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FiniteFieldElem(self.F, self.F.mul(self.code, self.F.inv(self._wrap(other))))

    def __pow__(self, k):
        if k < 0:
            return FiniteFieldElem(self.F, self.F.power(self.F.inv(self.code), -k))
        return FiniteFieldElem(self.F, self.F.power(self.code, k))

    def __eq__(self, other):
        if isinstance(other, FiniteFieldElem):
            return self.F is other.F and self.code == other.code
        if isinstance(other, int):
            return self.code == self._wrap(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.F.q, self.code))

    def __repr__(self):
        return f"GF({self.F.q})[{'+'.join(f'{c}x^{i}' for i, c in enumerate(self.coeffs) if c) or '0'}]"
