"""Exact spectral kernel.

Characteristic polynomials are computed division-free (Berkowitz) over the
integers.  Roots are handled through Sturm chains on squarefree parts, with
multiplicities recovered by repeated gcd deflation.  Nothing in here touches
floating point except ``AlgebraicValue.__float__``.
"""
from __future__ import annotations

import functools
import math
from fractions import Fraction

from .errors import IndeterminateError

# isolating intervals handed out for non-quadratic roots are at most this wide
INTERVAL_WIDTH = Fraction(1, 2**30)


class IntPoly:
    """Polynomial with integer coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def from_roots(cls, roots):
        p = cls([1])
        for r in roots:
            p = p * cls([-r, 1])
        return p

    @classmethod
    def monomial(cls, d, c=1):
        return cls([0] * d + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly([other])
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        out = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                body = ("" if a == 1 else f"{a}*") + ("x" if i == 1 else f"x^{i}")
            out.append((sign, body))
        s = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPoly([other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        r = IntPoly([1])
        base = self
        while e:
            if e & 1:
                r = r * base
            base = base * base
            e >>= 1
        return r

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def content(self):
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    def primitive(self):
        """Divide out the content and make the leading coefficient positive."""
        if not self.coeffs:
            return self
        g = self.content()
        if self.lc < 0:
            g = -g
        return IntPoly(c // g for c in self.coeffs)

    def sign_at(self, t):
        """Sign of p(t) for rational t, using integer arithmetic only."""
        t = Fraction(t)
        num, den = t.numerator, t.denominator
        acc = 0
        dp = 1
        # homogenised Horner gives sum c_i num^i den^(d-i); den > 0 keeps the sign
        for c in reversed(self.coeffs):
            acc = acc * num + c * dp
            dp *= den
        return (acc > 0) - (acc < 0)

    def sign_at_inf(self, positive=True):
        if not self.coeffs:
            return 0
        s = 1 if self.lc > 0 else -1
        if not positive and self.degree % 2:
            s = -s
        return s

    def pseudo_rem(self, other, positive=False):
        """Remainder of lc(other)^e * self by other, e = deg self - deg other + 1.

        With ``positive`` the multiplier is |lc(other)|^e, which keeps the
        sign needed by Sturm chains.
        """
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        db = other.degree
        lb = other.lc
        if positive and lb < 0:
            lb_use = -lb
            b = [-c for c in other.coeffs]
        else:
            lb_use = lb
            b = list(other.coeffs)
        # b now has leading coefficient lb_use > 0 when positive is set
        e = len(r) - 1 - db + 1
        if e <= 0:
            return IntPoly(r)
        while len(r) - 1 >= db and any(r):
            dr = len(r) - 1
            lr = r[-1]
            r = [c * lb_use for c in r]
            shift = dr - db
            for i, c in enumerate(b):
                r[i + shift] -= lr * c
            r.pop()
            while r and r[-1] == 0:
                r.pop()
            e -= 1
        if e > 0:
            f = lb_use**e
            r = [c * f for c in r]
        return IntPoly(r)

    def exact_quotient(self, other):
        """self / other when the division is exact in Z[x]; raises otherwise."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        db = other.degree
        lb = other.lc
        q = [0] * max(len(r) - db, 0)
        while len(r) - 1 >= db and r:
            shift = len(r) - 1 - db
            c, rem = divmod(r[-1], lb)
            if rem:
                raise ValueError("division is not exact")
            q[shift] = c
            for i, bc in enumerate(other.coeffs):
                r[i + shift] -= c * bc
            while r and r[-1] == 0:
                r.pop()
        if r:
            raise ValueError("division is not exact")
        return IntPoly(q)

    def divides(self, other):
        """True when self divides other in Q[x]."""
        if self.is_zero():
            return other.is_zero()
        return other.pseudo_rem(self).is_zero()


X = IntPoly([0, 1])


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd via the primitive PRS."""
    if a.is_zero():
        return b.primitive()
    if b.is_zero():
        return a.primitive()
    a, b = a.primitive(), b.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        r = a.pseudo_rem(b)
        a, b = b, (r.primitive() if not r.is_zero() else r)
        if b.degree == 0:
            return IntPoly([1])
    return a.primitive()


@functools.lru_cache(maxsize=4096)
def squarefree_levels(p: IntPoly):
    """Return [s_1, s_2, ...] where s_i is the product of the distinct
    irreducible factors of p with multiplicity >= i (primitive)."""
    if p.is_zero():
        raise IndeterminateError("indeterminate: zero polynomial")
    levels = []
    cur = p.primitive()
    while cur.degree > 0:
        g = poly_gcd(cur, cur.derivative())
        levels.append(cur.exact_quotient(g).primitive())
        cur = g
    return levels


def squarefree_part(p: IntPoly) -> IntPoly:
    lv = squarefree_levels(p)
    return lv[0] if lv else IntPoly([1])


def squarefree_decomposition(p: IntPoly):
    """[(f, m)] with the f pairwise coprime, squarefree and p ~ prod f^m."""
    lv = squarefree_levels(p)
    out = []
    for i, s in enumerate(lv):
        nxt = lv[i + 1] if i + 1 < len(lv) else IntPoly([1])
        f = s.exact_quotient(nxt).primitive()
        if f.degree > 0:
            out.append((f, i + 1))
    return out


# ---------------------------------------------------------------- Sturm


@functools.lru_cache(maxsize=4096)
def sturm_chain(f: IntPoly):
    """Sturm chain of a squarefree polynomial with positive rescalings."""
    seq = [f, f.derivative()]
    while seq[-1].degree > 0:
        r = seq[-2].pseudo_rem(seq[-1], positive=True)
        if r.is_zero():
            break
        g = r.content()
        seq.append(IntPoly(-c // g for c in r.coeffs))
    return tuple(seq)


def _variations(signs):
    v = 0
    last = 0
    for s in signs:
        if s == 0:
            continue
        if last and s != last:
            v += 1
        last = s
    return v


def _var_at(chain, t):
    if t == math.inf:
        return _variations(p.sign_at_inf(True) for p in chain)
    if t == -math.inf:
        return _variations(p.sign_at_inf(False) for p in chain)
    return _variations(p.sign_at(t) for p in chain)


def sturm_count(f: IntPoly, lo, hi):
    """Number of distinct roots of squarefree f in (lo, hi]."""
    if f.degree <= 0:
        return 0
    ch = sturm_chain(f)
    return _var_at(ch, lo) - _var_at(ch, hi)


def root_bound(f: IntPoly) -> int:
    """A power of two strictly exceeding every |root| of f."""
    n = f.degree
    lb = abs(f.lc).bit_length()
    e = 0
    for i in range(1, n + 1):
        c = f.coeffs[n - i]
        if c:
            e = max(e, -(-(abs(c).bit_length() - lb + 1) // i))
    return 2 ** (e + 1)


def isolate_roots(f: IntPoly):
    """Isolating intervals (lo, hi] for the real roots of squarefree f, ascending."""
    if f.degree <= 0:
        return []
    B = Fraction(root_bound(f))
    out = []
    stack = [(-B, B)]
    while stack:
        lo, hi = stack.pop()
        c = sturm_count(f, lo, hi)
        if c == 0:
            continue
        if c == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        stack.append((mid, hi))
        stack.append((lo, mid))
    out.sort()
    return out


def refine(f: IntPoly, lo, hi, width=INTERVAL_WIDTH):
    """Shrink an isolating interval of squarefree f to at most ``width``."""
    while hi - lo > width:
        mid = (lo + hi) / 2
        if f.sign_at(mid) == 0:
            return mid - width / 2, mid
        if sturm_count(f, lo, mid) == 1:
            hi = mid
        else:
            lo = mid
    return lo, hi


# ------------------------------------------------------ char polynomials


class RationalSymMatrix:
    """Square symmetric matrix with exact rational entries."""

    def __init__(self, rows):
        rows = [[Fraction(x) for x in r] for r in rows]
        n = len(rows)
        for i, r in enumerate(rows):
            if len(r) != n:
                raise ValueError(f"row {i} has length {len(r)}, expected {n}")
        for i in range(n):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"matrix is not symmetric at ({i},{j})")
        self.n = n
        self.entries = tuple(tuple(r) for r in rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def principal_submatrix(self, idx):
        idx = list(idx)
        return RationalSymMatrix([[self.entries[i][j] for j in idx] for i in idx])

    def trace(self):
        return sum(self.entries[i][i] for i in range(self.n))


def _rows(M):
    if isinstance(M, RationalSymMatrix):
        return [list(r) for r in M.entries]
    if hasattr(M, "entries"):
        return [list(r) for r in M.entries]
    if hasattr(M, "adjacency_matrix"):
        return M.adjacency_matrix()
    return [list(r) for r in M]


def _berkowitz(A):
    """Coefficients (highest first) of det(xI - A) for an integer matrix."""
    n = len(A)
    if n == 0:
        return [1]
    sparse = [[(j, v) for j, v in enumerate(row) if v] for row in A]
    vect = [1, -A[0][0]]
    for r in range(1, n):
        a = A[r][r]
        R = [(j, v) for j, v in sparse[r] if j < r]
        cols = [A[i][r] for i in range(r)]
        rows_r = [[(j, v) for j, v in sparse[i] if j < r] for i in range(r)]
        Q = [1, -a]
        v = cols
        Q.append(-sum(x * v[j] for j, x in R))
        for _ in range(r - 1):
            v = [sum(x * v[j] for j, x in row) for row in rows_r]
            Q.append(-sum(x * v[j] for j, x in R))
        vect = [sum(Q[i - j] * vect[j] for j in range(min(i, r) + 1)) for i in range(r + 2)]
    return vect


def char_poly(M) -> IntPoly:
    """Characteristic polynomial det(xI - M).

    Integer matrices give det(xI - M) itself.  For rational entries with
    common denominator d the result is the primitive integer multiple
    of det(xI - M), which has the same roots with the same multiplicities.
    """
    rows = _rows(M)
    n = len(rows)
    if n == 0:
        return IntPoly([1])
    den = 1
    for r in rows:
        for x in r:
            den = math.lcm(den, Fraction(x).denominator)
    A = [[int(Fraction(x) * den) for x in r] for r in rows]
    q = list(reversed(_berkowitz(A)))
    if den == 1:
        return IntPoly(q)
    return IntPoly(c * den**i for i, c in enumerate(q)).primitive()


def char_poly_rational(M):
    """Monic det(xI - M) as a list of Fractions, lowest degree first."""
    p = char_poly(M)
    return [Fraction(c, p.lc) for c in p.coeffs]


# ------------------------------------------------------------ root counts


def _as_threshold(t):
    if isinstance(t, AlgebraicValue):
        return t
    return Fraction(t)


def relation_counts(p: IntPoly, t):
    """(#roots < t, #roots == t, #roots > t), real roots with multiplicity.

    ``t`` is a rational or an AlgebraicValue."""
    if p.is_zero():
        raise IndeterminateError("indeterminate: zero polynomial")
    t = _as_threshold(t)
    less = eq = gt = 0
    for s in squarefree_levels(p):
        if isinstance(t, Fraction):
            e = 1 if s.sign_at(t) == 0 else 0
            g_ = sturm_count(s, t, math.inf)
            total = sturm_count(s, -math.inf, math.inf)
        else:
            g_, e, total = t._level_counts(s)
        gt += g_
        eq += e
        less += total - g_ - e
    return less, eq, gt


def count_roots_greater(p: IntPoly, t) -> int:
    """Real roots of p strictly greater than t, counted with multiplicity."""
    return relation_counts(p, t)[2]


def count_real_roots(p: IntPoly) -> int:
    return sum(sturm_count(s, -math.inf, math.inf) for s in squarefree_levels(p))


def second_largest_at_most(M, t) -> bool:
    """True iff the second largest eigenvalue of M is at most t."""
    return count_roots_greater(char_poly(M), t) <= 1


def integer_eigenvalues(p: IntPoly):
    """Integer roots with multiplicities, largest first."""
    if p.is_zero():
        raise IndeterminateError("indeterminate: zero polynomial")
    out = []
    coeffs = list(p.coeffs)
    z = 0
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
        z += 1
    q = IntPoly(coeffs)
    if q.degree > 0:
        trailing = abs(q.coeffs[0])
        B = root_bound(q)
        for r in range(-B, B + 1):
            if r == 0 or trailing % r:
                continue
            m = 0
            lin = IntPoly([-r, 1])
            while q.degree > 0 and q(r) == 0:
                q = q.exact_quotient(lin)
                m += 1
            if m:
                out.append((r, m))
    if z:
        out.append((0, z))
    out.sort(key=lambda rm: -rm[0])
    return out


def root_multiplicity(p: IntPoly, f: IntPoly) -> int:
    """Largest m with f^m | p (f nonconstant)."""
    m = 0
    cur = p
    while not cur.is_zero() and f.divides(cur):
        cur = cur.exact_quotient(f) if f.lc in (1, -1) else _q_div(cur, f)
        m += 1
    return m


def _q_div(a: IntPoly, b: IntPoly) -> IntPoly:
    # a / b over Q, cleared to a primitive integer polynomial
    bb = b.primitive()
    return (a.primitive()).exact_quotient(bb).primitive()


# ------------------------------------------------------- factorisation


@functools.lru_cache(maxsize=4096)
def factor(p: IntPoly):
    """Irreducible factorisation over Z, as ((f, m), ...) with f primitive.

    Delegates to sympy; every other step in this module is self-contained."""
    import sympy

    if p.is_zero():
        raise IndeterminateError("indeterminate: zero polynomial")
    x = sympy.Symbol("x")
    out = []
    for f, m in sympy.factor_list(sympy.Poly(list(reversed(p.coeffs)), x, domain="ZZ"))[1]:
        fp = IntPoly(int(c) for c in reversed(f.all_coeffs())).primitive()
        if fp.degree > 0:
            out.append((fp, int(m)))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return tuple(out)


def real_roots(p: IntPoly):
    """[(AlgebraicValue, multiplicity)] for the distinct real roots, ascending."""
    out = []
    for f, m in factor(p):
        for idx, (lo, hi) in enumerate(isolate_roots(f)):
            out.append((AlgebraicValue._make(f, lo, hi, idx), m))
    out.sort(key=functools.cmp_to_key(lambda a, b: a[0].compare(b[0])))
    return out


def exact_spectrum(M):
    """Distinct eigenvalues of a symmetric matrix with multiplicities, largest first."""
    return list(reversed(real_roots(char_poly(M))))


def smallest_eigenvalue(M) -> "AlgebraicValue":
    return real_roots(char_poly(M))[0][0]


def largest_eigenvalue(M) -> "AlgebraicValue":
    return real_roots(char_poly(M))[-1][0]


def kth_largest_root(p: IntPoly, k: int):
    """The k-th largest real root (k = 1 is the largest), with multiplicity."""
    seen = 0
    for v, m in reversed(real_roots(p)):
        seen += m
        if seen >= k:
            return v
    raise ValueError(f"polynomial has fewer than {k} real roots")


def interlaces(pA: IntPoly, pB: IntPoly) -> bool:
    """theta_{n-m+i}(A) <= theta_i(B) <= theta_i(A) for all i.

    Checked by counting: at every eigenvalue b of B, A must have at least
    as many eigenvalues >= b and at least as many <= b as B does."""
    if pB.degree > pA.degree:
        return False
    for b, _ in real_roots(pB):
        la, ea, ga = relation_counts(pA, b)
        lb, eb, gb = relation_counts(pB, b)
        if ga + ea < gb + eb or la + ea < lb + eb:
            return False
    return True


# ------------------------------------------------------ algebraic values


def _squarefree_split(n: int):
    """n = s^2 * d with d squarefree; returns (s, d)."""
    import sympy

    s, d = 1, 1
    for p, e in sympy.factorint(n).items():
        s *= p ** (e // 2)
        if e % 2:
            d *= p
    return s, d


class AlgebraicValue:
    """A real algebraic number, exact.

    ``kind`` is one of integer, rational, quadratic, interval.  Quadratic
    values are (a + b*sqrt(d))/c.  Every value also keeps its minimal
    polynomial and an isolating interval (lo, hi] so any two values can be
    compared exactly.
    """

    __slots__ = ("kind", "poly", "lo", "hi", "index", "value", "a", "b", "d", "c")

    def __init__(self):
        raise TypeError("use AlgebraicValue.rational or AlgebraicValue.root_of")

    @classmethod
    def _make(cls, f: IntPoly, lo, hi, index):
        self = object.__new__(cls)
        self.poly = f
        self.index = index
        self.value = self.a = self.b = self.d = self.c = None
        if f.degree == 1:
            v = Fraction(-f.coeffs[0], f.coeffs[1])
            self.value = v
            self.kind = "integer" if v.denominator == 1 else "rational"
            self.lo, self.hi = v - 1, v
        elif f.degree == 2:
            C, B, A = f.coeffs
            s, d = _squarefree_split(B * B - 4 * A * C)
            sign = -1 if index == 0 else 1
            a, b, c = -B, sign * s, 2 * A
            g = math.gcd(math.gcd(a, b), c)
            if c < 0:
                g = -g
            self.a, self.b, self.d, self.c = a // g, b // g, d, c // g
            self.kind = "quadratic"
            self.lo, self.hi = lo, hi
        else:
            self.kind = "interval"
            self.lo, self.hi = refine(f, lo, hi)
        return self

    @classmethod
    def rational(cls, q):
        q = Fraction(q)
        return cls._make(IntPoly([-q.numerator, q.denominator]), q - 1, q, 0)

    @classmethod
    def root_of(cls, f: IntPoly, index: int):
        """The index-th smallest real root of f (f is factored first)."""
        return real_roots(f)[index][0]

    # -- exact comparisons

    def _interval(self):
        return self.lo, self.hi

    def _refined(self, lo, hi):
        mid = (lo + hi) / 2
        if self.poly.sign_at(mid) == 0:
            # rational root of a linear factor
            return mid - (hi - lo) / 4, mid
        if sturm_count(self.poly, lo, mid) == 1:
            return lo, mid
        return mid, hi

    def is_rational(self):
        return self.poly.degree == 1

    def compare(self, other) -> int:
        if not isinstance(other, AlgebraicValue):
            other = AlgebraicValue.rational(other)
        if self.is_rational() and other.is_rational():
            return (self.value > other.value) - (self.value < other.value)
        if self.poly == other.poly:
            return (self.index > other.index) - (self.index < other.index)
        a_lo, a_hi = self._interval()
        b_lo, b_hi = other._interval()
        if self.is_rational():
            a_lo = a_hi = self.value
        if other.is_rational():
            b_lo = b_hi = other.value
        # distinct minimal polynomials: the values differ, so refinement ends
        while True:
            if a_hi < b_lo or (a_hi == b_lo and not other.is_rational()):
                return -1
            if b_hi < a_lo or (b_hi == a_lo and not self.is_rational()):
                return 1
            if not self.is_rational():
                a_lo, a_hi = self._refined(a_lo, a_hi)
            if not other.is_rational():
                b_lo, b_hi = other._refined(b_lo, b_hi)

    def __eq__(self, other):
        if not isinstance(other, (AlgebraicValue, int, Fraction)):
            return NotImplemented
        return self.compare(other) == 0

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    def __hash__(self):
        if self.is_rational():
            return hash(self.value)
        return hash((self.poly.coeffs, self.index))

    def _level_counts(self, s: IntPoly):
        """(#roots of s above self, 1 if self is a root else 0, #real roots)."""
        total = sturm_count(s, -math.inf, math.inf)
        if self.is_rational():
            v = self.value
            return sturm_count(s, v, math.inf), (1 if s.sign_at(v) == 0 else 0), total
        is_root = 1 if self.poly.divides(s) else 0
        lo, hi = self.lo, self.hi
        while sturm_count(s, lo, hi) != is_root:
            lo, hi = self._refined(lo, hi)
        return sturm_count(s, hi, math.inf), is_root, total

    # -- arithmetic used by the local-eigenvalue bounds

    def mobius(self, p, q, r, s):
        """(p*x + q)/(r*x + s) at x = self, for integers with ps - qr != 0."""
        if p * s - q * r == 0:
            raise ValueError("degenerate linear fractional map")
        if self.is_rational():
            x = self.value
            den = r * x + s
            if den == 0:
                raise ZeroDivisionError("value is the pole of the map")
            return AlgebraicValue.rational((p * x + q) / den)
        f = self.poly
        d = f.degree
        num = IntPoly([-q, s])   # s*y - q
        den = IntPoly([p, -r])   # p - r*y
        g = IntPoly()
        for i, c in enumerate(f.coeffs):
            if c:
                g = g + (num**i) * (den ** (d - i)) * c
        g = g.primitive()
        lo, hi = self.lo, self.hi
        if r:
            pole = Fraction(-s, r)
            while lo <= pole <= hi:
                lo, hi = self._refined(lo, hi)
        y1 = (p * lo + q) / (r * lo + s)
        y2 = (p * hi + q) / (r * hi + s)
        ylo, yhi = min(y1, y2), max(y1, y2)
        index = sturm_count(g, -math.inf, ylo)
        return AlgebraicValue._make(g, ylo, yhi, index)

    # -- presentation

    def __float__(self):
        if self.is_rational():
            return float(self.value)
        if self.kind == "quadratic":
            return (self.a + self.b * math.sqrt(self.d)) / self.c
        lo, hi = refine(self.poly, self.lo, self.hi, Fraction(1, 2**60))
        return float((lo + hi) / 2)

    def __str__(self):
        if self.kind in ("integer", "rational"):
            return str(self.value)
        if self.kind == "quadratic":
            a, b, d, c = self.a, self.b, self.d, self.c
            rad = f"sqrt({d})" if abs(b) == 1 else f"{abs(b)}*sqrt({d})"
            if a:
                body = f"{a} {'+' if b > 0 else '-'} {rad}"
            else:
                body = rad if b > 0 else f"-{rad}"
            if c == 1:
                return body
            return f"({body})/{c}"
        return f"root#{self.index} of {self.poly} in ({self.lo}, {self.hi}] ~ {float(self):.9f}"

    def __repr__(self):
        return f"AlgebraicValue({self})"

    def to_dict(self):
        d = {"kind": self.kind, "text": str(self), "approx": float(self)}
        if self.kind in ("integer", "rational"):
            d["value"] = str(self.value)
        elif self.kind == "quadratic":
            d.update(a=self.a, b=self.b, d=self.d, c=self.c)
        else:
            d.update(lo=str(self.lo), hi=str(self.hi), poly=list(self.poly.coeffs))
        return d
