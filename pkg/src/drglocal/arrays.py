"""Intersection arrays: derived parameters, exact spectra and feasibility filters."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from . import exactlinalg as xl
from .errors import ArrayFormatError, InfeasibleArrayError, InvalidParametersError

_ARRAY_RE = re.compile(r"^\{\s*([^;{}]*?)\s*;\s*([^;{}]*?)\s*\}$")


def _int_list(s, what):
    s = s.strip()
    if not s:
        return ()
    try:
        return tuple(int(x) for x in s.split(","))
    except ValueError:
        raise ArrayFormatError(f"malformed {what} list {s!r}: expected comma-separated integers") from None


@dataclass(frozen=True)
class IntersectionArray:
    """{b_0, ..., b_{D-1}; c_1, ..., c_D}, stored raw; validity is a filter verdict."""

    b: tuple
    c: tuple

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        object.__setattr__(self, "c", tuple(int(x) for x in self.c))
        if len(self.b) != len(self.c):
            raise ArrayFormatError(f"array needs as many b's as c's, got {len(self.b)} and {len(self.c)}")

    @classmethod
    def parse(cls, s: str) -> "IntersectionArray":
        m = _ARRAY_RE.match(s.strip())
        if not m:
            raise ArrayFormatError(f"malformed intersection array {s!r}: expected '{{b0,b1,...;c1,c2,...}}'")
        return cls(_int_list(m.group(1), "b"), _int_list(m.group(2), "c"))

    def __str__(self):
        return "{" + ",".join(map(str, self.b)) + ";" + ",".join(map(str, self.c)) + "}"

    def __repr__(self):
        return f"IntersectionArray({self})"

    @property
    def D(self):
        return len(self.b)

    @property
    def k(self):
        return self.b[0] if self.b else 0

    def b_(self, i):
        return self.b[i] if 0 <= i < self.D else 0

    def c_(self, i):
        return self.c[i - 1] if 1 <= i <= self.D else 0

    def a_(self, i):
        return self.k - self.b_(i) - self.c_(i)


def as_array(x) -> IntersectionArray:
    if isinstance(x, IntersectionArray):
        return x
    if isinstance(x, str):
        return IntersectionArray.parse(x)
    b, c = x
    return IntersectionArray(b, c)


@dataclass
class DRGParams:
    k: int
    D: int
    a: tuple          # a_1..a_D
    k_i: tuple        # k_0..k_D, exact rationals
    nu: Fraction
    flags: list = field(default_factory=list)

    @property
    def integral(self):
        return all(x.denominator == 1 and x > 0 for x in self.k_i)


def derive(arr) -> DRGParams:
    arr = as_array(arr)
    D = arr.D
    a = tuple(arr.a_(i) for i in range(1, D + 1))
    ks = [Fraction(1)]
    flags = []
    for i in range(1, D + 1):
        if arr.c_(i) == 0:
            flags.append(f"c_{i} = 0, k_{i} undefined")
            ks.append(Fraction(0))
            continue
        ks.append(ks[-1] * arr.b_(i - 1) / arr.c_(i))
    for i, x in enumerate(ks):
        if x.denominator != 1:
            flags.append(f"k_{i} = {x} is not an integer")
        elif x <= 0:
            flags.append(f"k_{i} = {x} is not positive")
    for i, x in enumerate(a, 1):
        if x < 0:
            flags.append(f"a_{i} = {x} is negative")
    return DRGParams(arr.k, D, a, tuple(ks), sum(ks, Fraction(0)), flags)


def tridiagonal_matrix(arr):
    """(D+1)x(D+1) matrix with rows (c_i, a_i, b_i)."""
    arr = as_array(arr)
    D = arr.D
    L = [[0] * (D + 1) for _ in range(D + 1)]
    for i in range(D + 1):
        if i > 0:
            L[i][i - 1] = arr.c_(i)
        L[i][i] = arr.a_(i) if i > 0 else 0
        if i < D:
            L[i][i + 1] = arr.b_(i)
    return L


# -------------------------------------------------------------- spectrum

def _qtrim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _qmul(p, q):
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x:
            for j, y in enumerate(q):
                out[i + j] += x * y
    return _qtrim(out)


def _qadd(p, q):
    n = max(len(p), len(q))
    return _qtrim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def _qscale(p, s):
    return _qtrim([x * s for x in p])


def _qmod(p, f):
    p = [Fraction(x) for x in p]
    df = len(f) - 1
    lf = Fraction(f[-1])
    while len(p) - 1 >= df and p:
        c = p[-1] / lf
        shift = len(p) - 1 - df
        for i, fc in enumerate(f):
            p[shift + i] -= c * fc
        p.pop()
        p = _qtrim(p)
    return p


def standard_sequence_norm(arr, f: xl.IntPoly, ks):
    """sum_i u_i(x)^2 k_i reduced modulo f, as a Fraction polynomial."""
    k = arr.k
    fc = list(f.coeffs)
    u_prev, u = [Fraction(1)], [Fraction(0), Fraction(1, k)]
    total = _qadd([Fraction(ks[0])], _qscale(_qmod(_qmul(u, u), fc), ks[1]))
    for i in range(1, arr.D):
        # c_i u_{i-1} + a_i u_i + b_i u_{i+1} = x u_i
        xu = _qmul([Fraction(0), Fraction(1)], u)
        nxt = _qadd(_qadd(xu, _qscale(u, -arr.a_(i))), _qscale(u_prev, -arr.c_(i)))
        nxt = _qmod(_qscale(nxt, Fraction(1, arr.b_(i))), fc)
        u_prev, u = u, nxt
        total = _qadd(total, _qscale(_qmod(_qmul(u, u), fc), ks[i + 1]))
    return _qmod(total, fc)


@dataclass
class SpectrumEstimate:
    eigenvalues: list          # AlgebraicValue, descending
    multiplicities: list       # Fraction, or None when the multiplicity is irrational
    nu: Fraction

    @property
    def feasible(self):
        return all(m is not None and m.denominator == 1 and m > 0 for m in self.multiplicities)

    def pairs(self):
        return list(zip(self.eigenvalues, self.multiplicities))

    def to_dict(self):
        return {
            "eigenvalues": [str(t) for t in self.eigenvalues],
            "multiplicities": [None if m is None else str(m) for m in self.multiplicities],
            "nu": str(self.nu),
            "feasible": self.feasible,
        }


def quotient_eigenvalues(arr):
    """Distinct eigenvalues of the tridiagonal matrix, descending, with their minimal polynomials."""
    p = xl.char_poly(tridiagonal_matrix(arr))
    roots = xl.real_roots(p)
    if sum(m for _, m in roots) != p.degree or any(m != 1 for _, m in roots):
        raise InfeasibleArrayError(f"infeasible array {as_array(arr)}: tridiagonal matrix lacks {p.degree} distinct real eigenvalues")
    return [t for t, _ in reversed(roots)]


def spectrum(arr) -> SpectrumEstimate:
    """Eigenvalues and standard-sequence multiplicities m = nu / sum u_i^2 k_i."""
    arr = as_array(arr)
    prm = derive(arr)
    if not prm.integral:
        raise InfeasibleArrayError(f"infeasible array {arr}: " + "; ".join(prm.flags))
    if arr.D == 0:
        return SpectrumEstimate([xl.AlgebraicValue.rational(0)], [Fraction(1)], Fraction(1))
    if any(arr.b_(i) <= 0 for i in range(arr.D)) or any(arr.c_(i) <= 0 for i in range(1, arr.D + 1)):
        raise InfeasibleArrayError(f"infeasible array {arr}: b_i and c_i must be positive")
    thetas = quotient_eigenvalues(arr)
    mults = []
    for t in thetas:
        S = standard_sequence_norm(arr, t.poly, prm.k_i)
        if len(S) > 1:
            mults.append(None)
        elif not S or S[0] == 0:
            mults.append(None)
        else:
            mults.append(prm.nu / S[0])
    return SpectrumEstimate(thetas, mults, prm.nu)


def srg_theta1_multiplicity(k, theta1, theta2, c2):
    """Closed form (theta2+1) k (k-theta2) / (c2 (theta2-theta1)) for diameter 2."""
    return Fraction((theta2 + 1) * k * (k - theta2), c2 * (theta2 - theta1))


# ------------------------------------------------------------ SRG params

@dataclass(frozen=True)
class SRGParams:
    nu: int
    k: int
    lam: int
    mu: int

    @property
    def b1(self):
        return self.k - self.lam - 1

    def identity_holds(self):
        return self.k * (self.k - self.lam - 1) == (self.nu - self.k - 1) * self.mu

    def to_array(self):
        return IntersectionArray((self.k, self.b1), (1, self.mu))

    @classmethod
    def from_array(cls, arr):
        arr = as_array(arr)
        if arr.D != 2:
            raise InvalidParametersError(f"{arr} does not have diameter 2")
        nu = derive(arr).nu
        if nu.denominator != 1:
            raise InfeasibleArrayError(f"infeasible array {arr}: vertex count {nu} is not an integer")
        return cls(int(nu), arr.k, arr.a_(1), arr.c_(2))

    def __str__(self):
        return f"SRG({self.nu},{self.k},{self.lam},{self.mu})"


def srg_from_eigs(k, theta1, theta2) -> SRGParams:
    """Parameters of the SRG with valency k and nontrivial eigenvalues theta1 > theta2."""
    if not all(isinstance(x, int) for x in (k, theta1, theta2)):
        raise InvalidParametersError("srg_from_eigs expects integers")
    if not k > theta1 > theta2:
        raise InvalidParametersError(f"need k > theta1 > theta2, got {k}, {theta1}, {theta2}")
    mu = k + theta1 * theta2
    b1 = -(theta1 + 1) * (theta2 + 1)
    lam = k - b1 - 1
    if mu <= 0:
        raise InfeasibleArrayError(f"mu = k + theta1*theta2 = {mu} is not positive")
    if b1 <= 0:
        raise InfeasibleArrayError(f"b1 = -(theta1+1)(theta2+1) = {b1} is not positive")
    if lam < 0:
        raise InfeasibleArrayError(f"lambda = k - b1 - 1 = {lam} is negative")
    nu = Fraction(k * b1, mu) + k + 1
    if nu.denominator != 1:
        raise InfeasibleArrayError(f"k(k-lambda-1) = (nu-k-1)mu forces nu = {nu}, not an integer")
    return SRGParams(int(nu), k, lam, mu)


def coclique_ratio_bound(p: SRGParams, gamma) -> Fraction:
    """Upper bound (nu - gamma)(k - mu)/(gamma k) on theta1 given a coclique of size gamma."""
    if gamma < 1:
        raise InvalidParametersError("coclique size must be positive")
    return Fraction((p.nu - gamma) * (p.k - p.mu), gamma * p.k)


# -------------------------------------------------------------- shapes

def is_conference_form(arr):
    arr = as_array(arr)
    return arr.D == 2 and arr.k == 2 * arr.b[1] and arr.c == (1, arr.b[1])


def cover_of_complete(arr):
    """(q, m, r) when arr is {q, (r-1)m, 1; 1, m, q}, else None."""
    arr = as_array(arr)
    if arr.D != 3 or arr.b[2] != 1 or arr.c[0] != 1 or arr.c[2] != arr.k:
        return None
    m = arr.c[1]
    if m <= 0 or arr.b[1] % m:
        return None
    return arr.k, m, 1 + arr.b[1] // m


def classify_shape(arr) -> frozenset:
    arr = as_array(arr)
    tags = set()
    cov = cover_of_complete(arr)
    if cov:
        q, m, r = cov
        if r == 2:
            tags.add("taylor")
        elif r >= 3:
            tags.add(f"antipodal-cover-of-complete(q={q}, m={m}, r={r})")
    if is_conference_form(arr):
        tags.add("conference")
    if arr.D >= 1 and all(arr.a_(i) == 0 for i in range(1, arr.D + 1)):
        tags.add("bipartite")
    if arr.D == 2 and arr.c[1] == arr.k:
        tags.add("complete-multipartite")
    return frozenset(tags)


# --------------------------------------------------------- feasibility

PASS, FAIL, NA = "pass", "fail", "n/a"


@dataclass
class FilterVerdict:
    code: str
    name: str
    status: str
    detail: str

    def to_dict(self):
        return {"code": self.code, "name": self.name, "status": self.status, "detail": self.detail}


@dataclass
class FeasibilityReport:
    array: IntersectionArray
    assumptions: tuple
    verdicts: list

    @property
    def overall(self):
        return "infeasible" if any(v.status == FAIL for v in self.verdicts) else "surviving"

    def verdict(self, code):
        return next(v for v in self.verdicts if v.code == code)

    def failed(self):
        return [v for v in self.verdicts if v.status == FAIL]

    def to_dict(self):
        return {
            "array": str(self.array),
            "assumptions": list(self.assumptions),
            "verdict": self.overall,
            "filters": [v.to_dict() for v in self.verdicts],
        }

    def text(self):
        lines = [f"array {self.array}" + (f"  assumptions: {', '.join(self.assumptions)}" if self.assumptions else "")]
        for v in self.verdicts:
            lines.append(f"  {v.code} {v.name:<28} {v.status.upper():<5} {v.detail}")
        lines.append(f"verdict: {self.overall}")
        return "\n".join(lines)


def _f1(arr):
    D, k = arr.D, arr.k
    if D == 0:
        return PASS, "single vertex"
    b, c = arr.b, arr.c
    if not b[0] > (b[1] if D > 1 else 0) and D > 1:
        return FAIL, f"b_0 = {b[0]} <= b_1 = {b[1]}"
    for i in range(1, D - 1):
        if b[i] < b[i + 1]:
            return FAIL, f"b_{i} = {b[i]} < b_{i + 1} = {b[i + 1]}"
    if b[-1] < 1:
        return FAIL, f"b_{D - 1} = {b[-1]} < 1"
    if c[0] != 1:
        return FAIL, f"c_1 = {c[0]} != 1"
    for i in range(1, D):
        if c[i] < c[i - 1]:
            return FAIL, f"c_{i + 1} = {c[i]} < c_{i} = {c[i - 1]}"
    if c[-1] > k:
        return FAIL, f"c_{D} = {c[-1]} > k = {k}"
    for i in range(1, D):
        for j in range(1, D - i + 1):
            if arr.b_(i) < arr.c_(j):
                return FAIL, f"b_{i} = {arr.b_(i)} < c_{j} = {arr.c_(j)} although {i}+{j} <= {D}"
    for i in range(1, D + 1):
        if arr.a_(i) < 0:
            return FAIL, f"a_{i} = k - b_{i} - c_{i} = {arr.a_(i)} < 0"
    return PASS, "b_0 > b_1 >= ... >= 1 = c_1 <= ... <= c_D, b_i >= c_j for i+j <= D, a_i >= 0"


def _f2(arr, prm):
    bad = [fl for fl in prm.flags if fl.startswith("k_") or fl.startswith("c_")]
    if bad:
        return FAIL, "; ".join(bad)
    return PASS, "k_i = " + ", ".join(str(x) for x in prm.k_i) + f"; nu = {prm.nu}"


def _f3(arr, prm):
    if not prm.integral:
        return NA, "needs integral k_i"
    if arr.D == 0:
        return PASS, "single vertex"
    try:
        sp = spectrum(arr)
    except InfeasibleArrayError as e:
        return FAIL, str(e)
    conf = is_conference_form(arr)
    parts = []
    bad = []
    for t, m in sp.pairs():
        if m is None:
            bad.append(f"m({t}) is irrational")
        elif m.denominator != 1 or m <= 0:
            bad.append(f"m({t}) = {m}")
        parts.append(f"m({t}) = {m if m is not None else 'irrational'}")
    if bad and not conf:
        return FAIL, "non-integral multiplicities: " + "; ".join(bad)
    if conf:
        return PASS, "conference exemption ({2t,t;1,t}); " + "; ".join(parts)
    return PASS, "; ".join(parts)


def _f4(arr, quadrangle):
    if not quadrangle:
        return NA, "needs the induced-quadrangle assumption"
    a1 = arr.a_(1)
    for i in range(2, arr.D + 1):
        lhs = arr.c_(i) - arr.b_(i)
        rhs = arr.c_(i - 1) - arr.b_(i - 1) + a1 + 2
        if lhs < rhs:
            return FAIL, f"c_{i} - b_{i} = {arr.c_(i)} - {arr.b_(i)} = {lhs} < c_{i - 1} - b_{i - 1} + a_1 + 2 = {rhs}"
    return PASS, f"c_i - b_i >= c_(i-1) - b_(i-1) + {a1 + 2} for i = 2..{arr.D}"


def _f5(arr, quadrangle):
    if not quadrangle:
        return NA, "needs the induced-quadrangle assumption"
    bound = Fraction(2 * arr.k, arr.a_(1) + 2)
    if arr.D > bound:
        return FAIL, f"D = {arr.D} > 2k/(a_1+2) = {bound}"
    return PASS, f"D = {arr.D} <= 2k/(a_1+2) = {bound}"


def _f6(arr, prm):
    if arr.D != 2:
        return NA, "diameter is not 2"
    k, lam, mu = arr.k, arr.a_(1), arr.c_(2)
    lhs = k * (k - lam - 1)
    rhs = (prm.nu - k - 1) * mu
    if lhs != rhs:
        return FAIL, f"k(k-lambda-1) = {lhs} != (nu-k-1)mu = {rhs}"
    return PASS, f"k(k-lambda-1) = (nu-k-1)mu = {lhs}"


def eigenvalue_integrality_applies(arr):
    arr = as_array(arr)
    if arr.D == 2:
        return not is_conference_form(arr)
    cov = cover_of_complete(arr)
    return bool(cov) and arr.a_(1) != arr.c_(2)


def _f7(arr):
    if not eigenvalue_integrality_applies(arr):
        return NA, "only for non-conference diameter 2 and diameter-3 covers of complete graphs with a_1 != c_2"
    try:
        thetas = quotient_eigenvalues(arr)
    except InfeasibleArrayError as e:
        return FAIL, str(e)
    bad = [t for t in thetas if t.kind != "integer"]
    if bad:
        return FAIL, "eigenvalue " + ", ".join(str(t) for t in bad) + " not an integer"
    return PASS, "eigenvalues " + ", ".join(str(t) for t in thetas)


FILTER_NAMES = {
    "F1": "monotonicity",
    "F2": "k_i integrality",
    "F3": "multiplicity integrality",
    "F4": "Terwilliger chain",
    "F5": "diameter bound",
    "F6": "SRG identity",
    "F7": "eigenvalue integrality",
}


def feasibility(arr, assumptions=()) -> FeasibilityReport:
    """Run every filter.  ``assumptions`` may contain 'quadrangle'."""
    arr = as_array(arr)
    if isinstance(assumptions, str):
        assumptions = (assumptions,)
    assumptions = tuple(sorted(set(assumptions)))
    unknown = set(assumptions) - {"quadrangle"}
    if unknown:
        raise InvalidParametersError(f"unknown assumption flag(s): {sorted(unknown)}")
    quad = "quadrangle" in assumptions
    prm = derive(arr)
    results = {
        "F1": _f1(arr),
        "F2": _f2(arr, prm),
        "F3": _f3(arr, prm),
        "F4": _f4(arr, quad),
        "F5": _f5(arr, quad),
        "F6": _f6(arr, prm),
        "F7": _f7(arr),
    }
    verdicts = [FilterVerdict(code, FILTER_NAMES[code], st, det) for code, (st, det) in results.items()]
    return FeasibilityReport(arr, assumptions, verdicts)


# ------------------------------------------------------- imported facts

@dataclass(frozen=True)
class ImportedFact:
    array: str
    statement: str
    citation: str
    provenance: str = "imported from literature"


_COVER_TABLES = "Brouwer, Cohen and Neumaier, Distance-Regular Graphs (1989), tables of antipodal covers of complete graphs"
_SRG_TABLES = "Brouwer, tables of strongly regular graphs"

IMPORTED_FACTS = {
    "{10,6,1;1,2,10}": ImportedFact("{10,6,1;1,2,10}", "no distance-regular graph has this array", _COVER_TABLES),
    "{10,6,1;1,3,10}": ImportedFact("{10,6,1;1,3,10}", "no distance-regular graph has this array", _COVER_TABLES),
    "{12,6,1;1,3,12}": ImportedFact("{12,6,1;1,3,12}", "no distance-regular graph has this array", _COVER_TABLES),
    "{15,8,1;1,4,15}": ImportedFact("{15,8,1;1,4,15}", "no distance-regular graph has this array", _COVER_TABLES),
    "{10,5;1,5}": ImportedFact("{10,5;1,5}", "no conference graph on 21 vertices (21 is not a sum of two squares)", _SRG_TABLES),
    "{10,6;1,4}": ImportedFact("{10,6;1,4}", "no locally Petersen SRG(26,10,3,4); the connected locally Petersen graphs have 21, 63 or 65 vertices", "Hall, Locally Petersen graphs, J. Graph Theory 4 (1980)"),
    "{24,10;1,12}": ImportedFact("{24,10;1,12}", "no strongly regular graph has this array", _SRG_TABLES),
    "{6,3;1,3}": ImportedFact("{6,3;1,3}", "the Paley graph on 13 vertices is the unique graph with this array", _SRG_TABLES),
    "{8,4;1,4}": ImportedFact("{8,4;1,4}", "the Paley graph on 17 vertices is the unique graph with this array", _SRG_TABLES),
}

# local graphs forced by the local structure (used for the mu-bar values)
LOCAL_STRUCTURE_FACTS = {
    "{28,12;1,16}": ImportedFact("{28,12;1,16}", "every local graph is the complement of a Chang graph or of T(8)", "structure of regular graphs with smallest eigenvalue -2 (Seidel; Cameron-Goethals-Seidel-Shult)"),
    "{45,16;1,24}": ImportedFact("{45,16;1,24}", "every local graph is the complement of T(10)", "structure of regular graphs with smallest eigenvalue -2 (Seidel; Cameron-Goethals-Seidel-Shult)"),
}


def imported_fact(arr):
    return IMPORTED_FACTS.get(str(as_array(arr)))
