"""Seifert matrices and their classical derived invariants.

A Seifert matrix is a square integer matrix A of even size 2g whose
antisymmetrization A - A^t is unimodular. From it we derive the Alexander
polynomial det(tA - A^t) (normalized so its value at t=1 is +1), the Arf
invariant via a symplectic basis, and half-rank direct summands on which
the bilinear form vanishes (the algebraic sliceness condition).
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd
from typing import Optional

from . import intmat
from .polyz import peval, pnorm


class NotSquare(ValueError):
    """Input matrix is not square."""


class OddSize(ValueError):
    """Input matrix has odd size."""


class NotUnimodular(ValueError):
    """det(A - A^t) is not 1."""


class SearchExhausted(RuntimeError):
    """No metabolizer was found within the coefficient bound."""

    def __init__(self, bound):
        super().__init__(f"no metabolizer with coefficients bounded by {bound}")
        self.bound = bound


@dataclass(frozen=True)
class SeifertMatrix:
    """Validated Seifert matrix; entries are row-major tuples."""

    entries: tuple
    name: Optional[str] = None

    @property
    def n(self):
        return len(self.entries)

    @property
    def genus(self):
        return self.n // 2

    def row(self, i):
        return self.entries[i]

    def symmetrization(self):
        """A + A^t."""
        a = self.entries
        return [[a[i][j] + a[j][i] for j in range(self.n)] for i in range(self.n)]

    def antisymmetrization(self):
        """A - A^t."""
        a = self.entries
        return [[a[i][j] - a[j][i] for j in range(self.n)] for i in range(self.n)]

    def as_lists(self):
        return [list(r) for r in self.entries]

    def __str__(self):
        return self.name or f"seifert{self.n}x{self.n}"


def validate_seifert(raw, name=None):
    """Validate a raw integer matrix as a Seifert matrix.

    Raises NotSquare, OddSize or NotUnimodular on malformed input; these
    all indicate bad data, never a computation failure.
    """
    rows = [list(r) for r in raw]
    n = len(rows)
    for r in rows:
        if len(r) != n:
            raise NotSquare(f"row of length {len(r)} in a {n}-row matrix")
        for x in r:
            if x != int(x):
                raise NotSquare("entries must be integers")
    if n % 2 != 0:
        raise OddSize(f"size {n} is odd")
    skew = [[rows[i][j] - rows[j][i] for j in range(n)] for i in range(n)]
    if intmat.det(skew) != 1:
        raise NotUnimodular("det(A - A^t) != 1")
    return SeifertMatrix(tuple(tuple(int(x) for x in r) for r in rows), name=name)


def block_sum(a, b, name=None):
    """Block-diagonal sum of two Seifert matrices (connected sum of knots)."""
    n, m = a.n, b.n
    out = [[0] * (n + m) for _ in range(n + m)]
    for i in range(n):
        for j in range(n):
            out[i][j] = a.entries[i][j]
    for i in range(m):
        for j in range(m):
            out[n + i][n + j] = b.entries[i][j]
    return validate_seifert(out, name=name)


@dataclass(frozen=True)
class IntLaurentPoly:
    """Integer Laurent polynomial: coeffs[i] is the coefficient of
    t**(offset + i). The canonical representative has offset 0 and no zero
    coefficients at either end."""

    coeffs: tuple
    offset: int = 0

    @classmethod
    def make(cls, coeffs, offset=0):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
            offset += 1
        if not coeffs:
            return cls((), 0)
        return cls(tuple(coeffs), offset)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def canonical(self):
        """Unit-normalize: offset 0; sign fixed so the value at 1 is positive
        when it is a unit, otherwise so the leading coefficient is positive."""
        p = IntLaurentPoly.make(self.coeffs, 0)
        if p.is_zero():
            return p
        at_one = sum(p.coeffs)
        if (at_one < 0) or (at_one == 0 and p.coeffs[-1] < 0):
            p = IntLaurentPoly(tuple(-c for c in p.coeffs), 0)
        return p

    def __call__(self, x):
        val = peval(list(self.coeffs), Fraction(x))
        return val * Fraction(x) ** self.offset

    def is_palindromic(self):
        return list(self.coeffs) == list(reversed(self.coeffs))

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for e in range(self.degree, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            exp = e + self.offset
            if exp == 0:
                body = str(abs(c))
            else:
                tpart = "t" if exp == 1 else f"t^{exp}"
                body = tpart if abs(c) == 1 else f"{abs(c)}{tpart}"
            sign = "-" if c < 0 else ("+" if terms else "")
            terms.append(sign + body)
        return "".join(terms)


def alexander_polynomial(a):
    """det(tA - A^t), canonically normalized so its value at t=1 is +1.

    The determinant of the linear pencil is recovered by exact evaluation
    at n+1 integer points followed by Lagrange interpolation; cross-checked
    elsewhere against cofactor expansion.
    """
    n = a.n
    if n == 0:
        return IntLaurentPoly((1,), 0)
    ent = a.entries
    points = range(-(n // 2), n // 2 + 2)  # n+1 or n+2 integer points
    xs, ys = [], []
    for t in points:
        m = [[t * ent[i][j] - ent[j][i] for j in range(n)] for i in range(n)]
        xs.append(t)
        ys.append(intmat.det(m))
        if len(xs) == n + 1:
            break
    coeffs = _lagrange_int(xs, ys)
    poly = IntLaurentPoly.make(coeffs, 0).canonical()
    assert poly(1) == 1, "det(A - A^t) = 1 forces value 1 at t=1"
    assert poly.is_palindromic(), "pencil determinant must be palindromic"
    return poly


def _lagrange_int(xs, ys):
    """Interpolating polynomial through integer points, coefficients verified
    integral."""
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            new = [Fraction(0)] * (len(basis) + 1)
            for k, c in enumerate(basis):
                new[k] -= c * xs[j]
                new[k + 1] += c
            basis = new
            denom *= xs[i] - xs[j]
        scale = Fraction(ys[i]) / denom
        for k, c in enumerate(basis):
            coeffs[k] += c * scale
    out = []
    for c in coeffs:
        assert c.denominator == 1
        out.append(int(c))
    return pnorm(out)


def symplectic_basis(skew):
    """Symplectic basis of Z^n for a unimodular antisymmetric integer matrix.

    Returns (es, fs) with es[i]^t * skew * fs[j] = delta_ij and all other
    pairings zero, via integer symplectic reduction.
    """
    n = len(skew)

    def pair(u, v):
        return sum(u[i] * skew[i][j] * v[j] for i in range(n) for j in range(n))

    basis = [[int(i == j) for j in range(n)] for i in range(n)]
    es, fs = [], []
    while basis:
        v = basis.pop(0)
        # find w in the span of the remaining basis with <v, w> = 1;
        # unimodularity makes the pairing values of v with the remaining
        # vectors have gcd 1
        vals = [pair(v, w) for w in basis]
        g, coeff = _gcd_combination(vals)
        assert g == 1, "pairing must be unimodular on the remaining span"
        w = [sum(c * bv[i] for c, bv in zip(coeff, basis)) for i in range(n)]
        assert pair(v, w) == 1
        es.append(v)
        fs.append(w)
        reduced = []
        for u in basis:
            a, b = pair(u, v), pair(u, w)
            nu = [u[i] + a * w[i] - b * v[i] for i in range(n)]
            if any(nu):
                reduced.append(nu)
        # the projections span the symplectic complement lattice but need
        # not be independent (w lay in the old span): re-extract a basis
        basis = intmat.lattice_row_basis(reduced)
    return es, fs


def _gcd_combination(vals):
    """gcd of vals and integer coefficients realizing it."""
    g = 0
    coeff = [0] * len(vals)
    for i, v in enumerate(vals):
        if v == 0:
            continue
        if g == 0:
            g = abs(v)
            coeff = [0] * len(vals)
            coeff[i] = 1 if v > 0 else -1
            continue
        x, y, g2 = _xgcd(g, v)
        coeff = [x * c for c in coeff]
        coeff[i] += y
        g = g2
    return g, coeff


def _xgcd(a, b):
    x, nx, y, ny, g, ng = 1, 0, 0, 1, a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def arf_invariant(a):
    """Arf invariant in Z/2: sum of q(e_i) q(f_i) over a symplectic basis,
    with the quadratic refinement q(x) = x^t A x mod 2."""
    if a.n == 0:
        return 0
    es, fs = symplectic_basis(a.antisymmetrization())
    ent = a.entries

    def q(x):
        return sum(x[i] * ent[i][j] * x[j] for i in range(a.n) for j in range(a.n)) % 2

    return sum(q(e) * q(f) for e, f in zip(es, fs)) % 2


@dataclass(frozen=True)
class Metabolizer:
    """Basis of a rank-g direct summand of Z^2g on which the Seifert form
    vanishes identically."""

    basis: tuple

    def __iter__(self):
        return iter(self.basis)


def _isotropic_with(a, chosen, v):
    ent = a.entries
    n = a.n
    for u in list(chosen) + [v]:
        if sum(u[i] * ent[i][j] * v[j] for i in range(n) for j in range(n)) != 0:
            return False
        if sum(v[i] * ent[i][j] * u[j] for i in range(n) for j in range(n)) != 0:
            return False
    return True


def find_seifert_metabolizer(a, search_bound, required=False):
    """Search for a Metabolizer with basis coefficients bounded by
    search_bound in max-norm.

    Returns None when no metabolizer exists within the bound (which does not
    prove nonexistence); with required=True raises SearchExhausted instead.
    Candidates are primitive vectors, enumerated by increasing max-norm with
    sign normalized, extended greedily to direct summands.
    """
    n = a.n
    g = n // 2
    if g == 0:
        return Metabolizer(())
    cands = []
    for norm in range(1, search_bound + 1):
        layer = []
        for v in product(range(-norm, norm + 1), repeat=n):
            if max(abs(x) for x in v) != norm:
                continue
            nz = next((x for x in v if x != 0), 0)
            if nz < 0:
                continue  # sign-normalized representative only
            if gcd(*(abs(x) for x in v)) != 1:
                continue  # primitive vectors only
            layer.append(v)
        # within a norm layer, prefer sparse vectors supported on early
        # coordinates (so clean bases like standard vectors come out first)
        layer.sort(key=lambda v: (sum(1 for x in v if x),
                                  tuple(abs(x) for x in v[::-1]), v[::-1]))
        cands.extend(layer)

    def extend(chosen, start):
        if len(chosen) == g:
            return tuple(chosen)
        for idx in range(start, len(cands)):
            v = cands[idx]
            if not _isotropic_with(a, chosen, v):
                continue
            if not intmat.spans_direct_summand(list(chosen) + [list(v)], n):
                continue
            got = extend(chosen + [v], idx + 1)
            if got is not None:
                return got
        return None

    got = extend([], 0)
    if got is not None:
        return Metabolizer(tuple(tuple(v) for v in got))
    if required:
        raise SearchExhausted(search_bound)
    return None
