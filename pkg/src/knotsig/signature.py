"""Exact Tristram-Levine signature functions and their circle averages.

For a Seifert matrix A and z on the unit circle, sigma_z is the signature
of the Hermitian matrix (1-z)A + (1-conj(z))A^t. Writing z = x + iy this
matrix is (1-x)(A+A^t) - iy(A-A^t), and its characteristic polynomial has
coefficients that are integer polynomials in x alone (they are invariant
under y -> -y, and y^2 = 1 - x^2). That one symbolic characteristic
polynomial, computed once per matrix, turns every signature query into
exact sign determinations of integer polynomials at an algebraic x:

  * counts of positive/negative eigenvalues come from Descartes' rule,
    which is exact for real-rooted polynomials;
  * zero coefficients are certified symbolically (cyclotomic divisibility
    for rational turns, gcd with the defining polynomial at breakpoints);
  * nonzero signs come from certified interval refinement.

sigma_z is a step function, constant on the arcs between the unit-circle
roots of the Alexander polynomial. Those breakpoints are isolated exactly
by Sturm bisection of the compactified polynomial in x = cos(theta), so
root-of-unity averages of sigma reduce to counting grid points per arc and
the circle integral reduces to certified arc measures.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .polyz import (cyclotomic, isolate_roots, pdeg, pdivides, pnorm,
                    palindromic_compact, peval, psubst_scale, pprimitive,
                    cos_minimal_poly, squarefree_part)
from .realalg import (MAX_REFINE, PrecisionExhausted, RealAlgebraic,
                      cos_turn_bounds, cos_turn_rational, sign_at_cos_turn,
                      simplest_between, _sgn)
from .seifert import SeifertMatrix, alexander_polynomial


@dataclass(frozen=True)
class UnitRootAngle:
    """The point exp(2*pi*i*numerator/denominator) on the unit circle,
    stored reduced with 0 <= numerator < denominator."""

    numerator: int
    denominator: int

    def __post_init__(self):
        if self.denominator < 1:
            raise ValueError("denominator must be positive")
        g = gcd(self.numerator, self.denominator) or 1
        object.__setattr__(self, "numerator", self.numerator // g)
        object.__setattr__(self, "denominator", self.denominator // g)
        if not 0 <= self.numerator < self.denominator:
            raise ValueError("angle must satisfy 0 <= j < k after reduction")

    @classmethod
    def of(cls, j, k):
        if k < 1:
            raise ValueError("denominator must be positive")
        return cls(j % k, k)

    @property
    def turn(self):
        return Fraction(self.numerator, self.denominator)

    def conjugate(self):
        return UnitRootAngle.of(-self.numerator, self.denominator)


# characteristic polynomial of (1-x)S - i y T over Z[x], y^2 = 1 - x^2 ----

def _pr_mul(a, b):
    """Multiply (P1 + iyQ1)(P2 + iyQ2) in Q[x][y]/(y^2 - (1 - x^2))."""
    p1, q1 = a
    p2, q2 = b
    p = _qsub(_qmul(p1, p2), _qmul([1, 0, -1], _qmul(q1, q2)))
    q = _qadd(_qmul(p1, q2), _qmul(q1, p2))
    return (p, q)


def _qmul(p, q):
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return pnorm(out)


def _qadd(p, q):
    out = [Fraction(0)] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return pnorm(out)


def _qsub(p, q):
    return _qadd(p, [-c for c in q])


@lru_cache(maxsize=None)
def _char_poly_in_x(a: SeifertMatrix):
    """Coefficients c_0..c_n of det(lambda*I - M(x)) as integer polynomials
    in x, where M(x) = (1-x)(A+A^t) - iy(A-A^t), via Faddeev-LeVerrier."""
    n = a.n
    if n == 0:
        return ((1,),)
    s = a.symmetrization()
    t = a.antisymmetrization()
    one_minus_x = [Fraction(1), Fraction(-1)]
    m = [[(_qmul(one_minus_x, [Fraction(s[i][j])]), [Fraction(-t[i][j])] if t[i][j] else [])
          for j in range(n)] for i in range(n)]
    zero = ([], [])
    ident = [[([Fraction(1)], []) if i == j else zero for j in range(n)] for i in range(n)]

    def mat_mul(x, y):
        out = [[zero] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                acc = ([], [])
                for k in range(n):
                    prod = _pr_mul(x[i][k], y[k][j])
                    acc = (_qadd(acc[0], prod[0]), _qadd(acc[1], prod[1]))
                out[i][j] = acc
        return out

    coeffs = [None] * (n + 1)
    coeffs[n] = [Fraction(1)]
    nmat = ident
    for k in range(1, n + 1):
        mk = mat_mul(m, nmat)
        tr = ([], [])
        for i in range(n):
            tr = (_qadd(tr[0], mk[i][i][0]), _qadd(tr[1], mk[i][i][1]))
        ck = ([-c / k for c in tr[0]], [-c / k for c in tr[1]])
        assert not pnorm(ck[1]), "trace must be even in y"
        coeffs[n - k] = ck[0]
        nmat = [[(mk[i][j][0] if i != j else _qadd(mk[i][j][0], ck[0]),
                  mk[i][j][1]) for j in range(n)] for i in range(n)]
    out = []
    for c in coeffs:
        ints = []
        for v in pnorm(c):
            assert v.denominator == 1, "characteristic coefficients are integral"
            ints.append(int(v))
        out.append(tuple(ints))
    return tuple(out)


def _signature_from_signs(signs):
    """Signature from the coefficient signs of a real-rooted monic
    polynomial, zeros dropped. Descartes' rule is exact here; the identity
    pos + neg + zeros = degree certifies it."""
    n = len(signs) - 1
    m = 0
    while m <= n and signs[m] == 0:
        m += 1
    tail = signs[m:]
    pos = _variations(tail)
    neg = _variations([s if i % 2 == 0 else -s for i, s in enumerate(tail)])
    assert pos + neg + m == n, "sign pattern inconsistent with real-rootedness"
    return pos - neg


def _variations(signs):
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def tl_signature_at(a: SeifertMatrix, z: UnitRootAngle) -> int:
    """Exact signature of (1-z)A + (1-conj z)A^t at z = e^(2*pi*i*j/k).

    Zero eigenvalues contribute nothing, so the value is well defined even
    at singular points (the unit-circle roots of the Alexander polynomial).
    """
    if a.n == 0 or z.numerator == 0:
        return 0
    coeffs = _char_poly_in_x(a)
    turn = z.turn
    r = cos_turn_rational(turn)
    if r is not None:
        signs = [_sgn(peval(list(c), r)) for c in coeffs]
    else:
        signs = [sign_at_cos_turn(list(c), turn) for c in coeffs]
    return _signature_from_signs(signs)


def _signature_at_algebraic(a: SeifertMatrix, x: RealAlgebraic) -> int:
    """Signature at the circle point with cos(theta) = x (hemisphere is
    irrelevant: the characteristic polynomial depends on x only)."""
    if a.n == 0:
        return 0
    coeffs = _char_poly_in_x(a)
    signs = [x.sign_of_poly(list(c)) for c in coeffs]
    return _signature_from_signs(signs)


# breakpoints --------------------------------------------------------------

class CirclePoint:
    """A unit-circle root of the Alexander polynomial.

    The x = cos(theta) coordinate is held exactly (an isolating interval of
    the defining polynomial); the hemisphere flag distinguishes theta from
    2*pi - theta. Points at rational turns (roots of unity) carry their
    exact turn; other turns are available as certified enclosures of any
    requested width.
    """

    __slots__ = ("x", "hemisphere", "exact_turn", "_tracker")

    def __init__(self, x, hemisphere, exact_turn=None, tracker=None):
        self.x = x
        self.hemisphere = hemisphere  # "upper" or "lower"
        self.exact_turn = exact_turn
        self._tracker = tracker

    @property
    def defining_poly(self):
        return self.x.poly

    @property
    def x_interval(self):
        return (self.x.lo, self.x.hi)

    def turn_bounds(self, width):
        """Certified rational (lo, hi) enclosing theta/(2*pi), width <= width."""
        if self.exact_turn is not None:
            return (self.exact_turn, self.exact_turn)
        lo, hi = self._tracker.bounds(width)
        if self.hemisphere == "upper":
            return lo, hi
        return 1 - hi, 1 - lo

    def __repr__(self):
        t = self.exact_turn if self.exact_turn is not None else self.turn_bounds(Fraction(1, 1024))
        return f"CirclePoint(turn~{t}, {self.hemisphere})"


class _TurnTracker:
    """Certified enclosure of arccos(x)/(2*pi) in (0, 1/2) for an algebraic
    x in (-1, 1) with irrational turn, refined by bisection against
    certified cosine enclosures."""

    __slots__ = ("x", "lo", "hi")

    def __init__(self, x):
        self.x = x
        self.lo = Fraction(0)
        self.hi = Fraction(1, 2)

    def bounds(self, width):
        steps = 0
        while self.hi - self.lo > width:
            mid = (self.lo + self.hi) / 2
            if self._cos_exceeds_x(mid):
                self.lo = mid  # cos decreasing: cos(mid) > x means mid < turn
            else:
                self.hi = mid
            steps += 1
            if steps > MAX_REFINE:
                raise PrecisionExhausted("turn enclosure refinement stalled")
        return self.lo, self.hi

    def _cos_exceeds_x(self, turn):
        bits = 16
        for _ in range(MAX_REFINE):
            clo, chi = cos_turn_bounds(turn, bits)
            xlo, xhi = self.x.lo, self.x.hi
            if clo > xhi:
                return True
            if chi < xlo:
                return False
            width = Fraction(1, 1 << bits)
            self.x.bounds(width)
            bits *= 2
        raise PrecisionExhausted("cosine comparison stalled")


def _alexander_x_polynomial(delta):
    """Compactification of a palindromic Alexander polynomial: the integer
    polynomial G with delta(t) = t^m * G((t + 1/t)/2) up to the 2^j scale,
    whose roots in (-1, 1) are the cos(theta) of the unit-circle roots."""
    w = palindromic_compact(list(delta.coeffs))
    return pprimitive(psubst_scale(w, 2))


def _root_of_unity_orders(delta):
    """All d with the d-th cyclotomic polynomial dividing delta."""
    dd = pdeg(list(delta.coeffs))
    out = []
    d = 3
    while True:
        phi = pdeg(list(cyclotomic(d)))
        if d > 4 * dd * dd + 6:
            break
        if phi <= dd and pdivides(list(cyclotomic(d)), list(delta.coeffs)):
            out.append(d)
        d += 1
    return out


def breakpoints(a: SeifertMatrix):
    """The unit-circle roots of the Alexander polynomial as CirclePoints,
    ordered by theta in (0, 2*pi). z = 1 never appears (the value at 1 is
    1); z = -1 never appears (the value at -1 is odd)."""
    return list(signature_function(a).breakpoints)


def _compute_breakpoints(a: SeifertMatrix):
    delta = alexander_polynomial(a)
    if delta.degree == 0:
        return []
    g = _alexander_x_polynomial(delta)
    gsf = squarefree_part(g)
    assert peval(gsf, 1) != 0 and peval(gsf, -1) != 0
    intervals = isolate_roots(gsf, Fraction(-1), Fraction(1))
    orders = _root_of_unity_orders(delta)
    uppers = []
    for lo, hi in intervals:
        x = RealAlgebraic.root_of(gsf, lo, hi)
        exact = _match_root_of_unity(x, orders)
        tracker = None if exact is not None else _TurnTracker(x)
        uppers.append(CirclePoint(x, "upper", exact_turn=exact, tracker=tracker))
    uppers.sort(key=lambda c: -c.x.lo)  # increasing theta = decreasing x
    lowers = []
    for c in reversed(uppers):
        ex = 1 - c.exact_turn if c.exact_turn is not None else None
        lowers.append(CirclePoint(c.x, "lower", exact_turn=ex, tracker=c._tracker))
    return uppers + lowers


def _match_root_of_unity(x, orders):
    """If x = cos(2*pi*j/d) for some admissible d, return the exact turn
    j/d in (0, 1/2); otherwise None."""
    for d in orders:
        psi = list(cos_minimal_poly(d))
        if x.sign_of_poly(psi) != 0:
            continue
        cands = [j for j in range(1, d // 2 + 1) if gcd(j, d) == 1]
        bits = 16
        while True:
            lo, hi = x.lo, x.hi
            alive = []
            for j in cands:
                clo, chi = cos_turn_bounds(Fraction(j, d), bits)
                if not (chi < lo or clo > hi):
                    alive.append(j)
            if len(alive) == 1:
                return Fraction(alive[0], d)
            assert alive, "a cosine conjugate must land in the interval"
            cands = alive
            x.bounds(Fraction(1, 1 << bits))
            bits *= 2
    return None


# the signature step function ----------------------------------------------

class SignatureFunction:
    """The signature step function of a Seifert matrix.

    breakpoints are ordered by theta in (0, 2*pi); arc_values[i] is the
    constant value on the open arc from breakpoints[i] to breakpoints[i+1],
    the last arc wrapping through theta = 0; point_values[i] is the value
    at breakpoints[i]. With no breakpoints there is a single arc. The value
    at z = 1 is 0 (the matrix there is zero), and the wrap arc value is 0
    as well since the function is continuous off the breakpoint set.
    """

    def __init__(self, matrix, breakpoints, arc_values, point_values):
        self.matrix = matrix
        self.breakpoints = tuple(breakpoints)
        self.arc_values = tuple(arc_values)
        self.point_values = tuple(point_values)
        self.value_at_one = 0
        n = matrix.n
        assert all(abs(v) <= n for v in arc_values)
        assert all(abs(v) <= n for v in point_values)
        # the arc through z = 1 carries the value 0: the function is
        # continuous off the breakpoints and the matrix at z = 1 is zero
        assert arc_values[-1] == 0, "arc through z=1 must vanish"

    def genus_bound(self):
        return self.matrix.n

    def value_at(self, z: UnitRootAngle) -> int:
        """Evaluate the step function at a rational turn, using the stored
        arcs and point values (no new signature computation)."""
        if z.numerator == 0:
            return 0
        if not self.breakpoints:
            return self.arc_values[0]
        turn = z.turn
        exact = {bp.exact_turn: i for i, bp in enumerate(self.breakpoints)
                 if bp.exact_turn is not None}
        if turn in exact:
            return self.point_values[exact[turn]]
        bounds = self._separating_bounds_for_grid(z.denominator)
        for i, (lo, hi) in enumerate(bounds):
            if turn <= lo:
                # at or before the enclosure: strictly below the breakpoint
                return self.arc_values[i - 1] if i else self.arc_values[-1]
            if turn < hi:
                raise AssertionError("grid point inside a separated enclosure")
        return self.arc_values[-1]

    def _separating_bounds_for_grid(self, k):
        """Turn enclosures for all breakpoints, each refined until it
        contains no multiple of 1/k (except exactly at a rational turn)."""
        out = []
        for bp in self.breakpoints:
            if bp.exact_turn is not None:
                out.append((bp.exact_turn, bp.exact_turn))
                continue
            width = Fraction(1, 4 * k)
            while True:
                lo, hi = bp.turn_bounds(width)
                j0 = lo.numerator * k // lo.denominator + 1  # floor(k*lo) + 1
                if j0 >= hi * k:
                    out.append((lo, hi))
                    break
                width /= 16
        return out

    def eta_sum(self, k: int) -> int:
        """Sum of the signature over all k-th roots of unity (j = 1..k),
        computed by exact arc counting."""
        if k < 1:
            raise ValueError("k must be positive")
        if self.matrix.n == 0:
            return 0
        if not self.breakpoints:
            return (k - 1) * self.arc_values[0]
        bounds = self._separating_bounds_for_grid(k)
        below = []      # number of j in 1..k with j/k strictly below the turn
        on_grid = []
        for bp, (lo, hi) in zip(self.breakpoints, bounds):
            if bp.exact_turn is not None:
                t = bp.exact_turn
                hit = k % t.denominator == 0
                kt = k * t
                below.append((kt.numerator - 1) // kt.denominator)
                on_grid.append(hit)
            else:
                below.append(lo.numerator * k // lo.denominator)
                on_grid.append(False)
        m = len(self.breakpoints)
        total = 0
        counted = 0
        for i in range(m - 1):
            cnt = below[i + 1] - below[i] - (1 if on_grid[i] else 0)
            total += self.arc_values[i] * cnt
            counted += cnt
        wrap = (k - 1) - below[m - 1] - (1 if on_grid[m - 1] else 0) + below[0]
        total += self.arc_values[-1] * wrap
        counted += wrap
        for hit, pv in zip(on_grid, self.point_values):
            if hit:
                total += pv
                counted += 1
        counted += 1  # j = k, the point z = 1, value 0
        assert counted == k, "grid accounting must cover every root of unity"
        return total

    def arc_measures(self, width):
        """Certified (lo, hi) bounds for the normalized Haar measure of each
        arc, from breakpoint turn enclosures of the given width."""
        if not self.breakpoints:
            return [(Fraction(1), Fraction(1))]
        encl = [bp.turn_bounds(width) for bp in self.breakpoints]
        out = []
        m = len(encl)
        for i in range(m - 1):
            out.append((max(Fraction(0), encl[i + 1][0] - encl[i][1]),
                        encl[i + 1][1] - encl[i][0]))
        out.append((max(Fraction(0), 1 + encl[0][0] - encl[m - 1][1]),
                    1 + encl[0][1] - encl[m - 1][0]))
        return out


@lru_cache(maxsize=None)
def signature_function(a: SeifertMatrix) -> SignatureFunction:
    """Compute the full signature step function: exact breakpoints, one
    sampled value per open arc, and exact values at the breakpoints."""
    bps = _compute_breakpoints(a)
    if not bps:
        sample = tl_signature_at(a, UnitRootAngle(1, 2)) if a.n else 0
        return SignatureFunction(a, (), (sample,), ())
    # refine turn enclosures until pairwise disjoint, then sample the arcs
    width = Fraction(1, 64)
    while True:
        encl = [bp.turn_bounds(width) for bp in bps]
        if all(encl[i][1] < encl[i + 1][0] for i in range(len(encl) - 1)):
            break
        width /= 16
    arc_values = []
    for i in range(len(bps)):
        if i + 1 < len(bps):
            gap = (encl[i][1], encl[i + 1][0])
        else:
            gap = (encl[i][1], Fraction(1))
        t = simplest_between(gap[0], gap[1])
        arc_values.append(tl_signature_at(a, UnitRootAngle(t.numerator, t.denominator)))
    point_cache = {}
    point_values = []
    for bp in bps:
        key = id(bp.x)
        if key not in point_cache:
            point_cache[key] = _signature_at_algebraic(a, bp.x)
        point_values.append(point_cache[key])
    return SignatureFunction(a, bps, arc_values, point_values)


# eta invariants and approximation ------------------------------------------

def eta_cyclic(a: SeifertMatrix, k: int) -> int:
    """Sum of sigma over the k-th roots of unity e^(2*pi*i*j/k), j = 1..k
    (the term j = k is z = 1 and contributes 0)."""
    return signature_function(a).eta_sum(k)


def l2_eta_cyclic(a: SeifertMatrix, k: int) -> Fraction:
    """eta_cyclic(a, k) / k as an exact rational."""
    return Fraction(eta_cyclic(a, k), k)


def l2_eta_abelian(a: SeifertMatrix, eps):
    """A certified interval of width <= eps containing the integral of the
    signature function over the circle with normalized Haar measure (total
    mass 1)."""
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    sf = signature_function(a)
    weight = sum(abs(v) + 1 for v in sf.arc_values)
    width = eps / (4 * weight)
    while True:
        measures = sf.arc_measures(width)
        lo = hi = Fraction(0)
        for v, (mlo, mhi) in zip(sf.arc_values, measures):
            if v >= 0:
                lo += v * mlo
                hi += v * mhi
            else:
                lo += v * mhi
                hi += v * mlo
        if hi - lo <= eps:
            return lo, hi
        width /= 16


@dataclass(frozen=True)
class ApproxRow:
    k: int
    average: Fraction
    gap_lo: Fraction
    gap_hi: Fraction


def approximation_table(a: SeifertMatrix, schedule, eps):
    """Rows (k, eta_cyclic(a,k)/k, |average - integral| bounds) for each k
    in the schedule; the gap interval accounts for the integral enclosure."""
    schedule = list(schedule)
    if not schedule:
        raise ValueError("schedule must be nonempty")
    if any(b <= a_ for a_, b in zip(schedule, schedule[1:])) or any(k < 1 for k in schedule):
        raise ValueError("schedule must be strictly increasing and positive")
    ilo, ihi = l2_eta_abelian(a, eps)
    rows = []
    for k in schedule:
        avg = l2_eta_cyclic(a, k)
        if ilo <= avg <= ihi:
            glo = Fraction(0)
        else:
            glo = min(abs(avg - ilo), abs(avg - ihi))
        ghi = max(abs(avg - ilo), abs(avg - ihi))
        rows.append(ApproxRow(k, avg, glo, ghi))
    return rows


def factorial_schedule(top):
    """[2!, 3!, ..., top!]"""
    out = []
    f = 1
    for i in range(2, top + 1):
        f *= i
        out.append(f)
    return out
