"""Certified exact real arithmetic for algebraic numbers on [-1, 1].

Real numbers appear in two flavors here: roots of integer polynomials held
as isolating intervals (RealAlgebraic), and cosines of rational multiples
of 2*pi held through certified rational enclosures. All enclosures are
produced by rational Taylor sums with explicit remainder bounds, so every
returned bound is mathematically guaranteed. No floating point is used.
"""

from fractions import Fraction
from functools import lru_cache

from .polyz import cyclotomic, pdivides, peval, pgcd, pdeg, pnorm

#: Bisection/refinement depth after which sign determination gives up.
#: Exceeding it indicates a bug (every sign queried here is decidable).
MAX_REFINE = 2000


class PrecisionExhausted(RuntimeError):
    """Interval refinement exceeded the configured depth."""


def _sgn(x):
    return (x > 0) - (x < 0)


def dyadic_floor(x, bits):
    scale = 1 << bits
    num = (x.numerator * scale) // x.denominator
    return Fraction(num, scale)


def dyadic_ceil(x, bits):
    scale = 1 << bits
    num = -((-x.numerator * scale) // x.denominator)
    return Fraction(num, scale)


def _arctan_inv_bounds(x, terms):
    """Bracketing partial sums of arctan(1/x), x >= 2 integer (alternating)."""
    s = Fraction(0)
    lo = hi = None
    xsq = x * x
    power = Fraction(1, x)
    for i in range(terms):
        term = power / (2 * i + 1)
        s = s + term if i % 2 == 0 else s - term
        if i % 2 == 0:
            hi = s
        else:
            lo = s
        power /= xsq
    if lo is None or hi is None:
        raise ValueError("need at least two terms")
    return lo, hi


@lru_cache(maxsize=None)
def pi_bounds(bits):
    """Rational lo < pi < hi with hi - lo <= 2**(1-bits) (Machin formula)."""
    terms = max(4, bits // 4 + 4)
    a_lo, a_hi = _arctan_inv_bounds(5, terms)
    b_lo, b_hi = _arctan_inv_bounds(239, max(4, bits // 15 + 4))
    lo = 16 * a_lo - 4 * b_hi
    hi = 16 * a_hi - 4 * b_lo
    lo = dyadic_floor(lo, bits + 4)
    hi = dyadic_ceil(hi, bits + 4)
    assert hi - lo <= Fraction(1, 1 << (bits - 1))
    return lo, hi


def _cos_series_bounds(u, bits):
    """Certified bounds on cos(u) for rational |u| <= 4, via Taylor at 0."""
    target = Fraction(1, 1 << bits)
    s = Fraction(0)
    term = Fraction(1)
    usq = u * u
    i = 0
    while True:
        s = s + term if i % 2 == 0 else s - term
        i += 1
        term = term * usq / ((2 * i - 1) * (2 * i))
        if term <= target / 4:
            break
    # |remainder| is at most the first omitted term bound
    lo = dyadic_floor(s - term, bits + 2)
    hi = dyadic_ceil(s + term, bits + 2)
    return lo, hi


class _CosCache:
    def __init__(self):
        self.store = {}

    def bounds(self, turn, bits):
        """Certified (lo, hi) with lo <= cos(2*pi*turn) <= hi, hi-lo <= 2**(2-bits)."""
        key = turn
        cached = self.store.get(key)
        if cached is not None and cached[0] >= bits:
            return cached[1], cached[2]
        t = turn - (turn.numerator // turn.denominator)  # reduce mod 1 into [0,1)
        if 2 * t > 1:
            t = 1 - t
        # u = 2*pi*t, with pi known to an interval; |cos' | <= 1 gives the
        # Lipschitz correction for the pi uncertainty.
        pl, ph = pi_bounds(bits + 8)
        u_mid = (pl + ph) * t
        slack = (ph - pl) * t
        u_mid = dyadic_floor(u_mid, bits + 8)
        slack += Fraction(1, 1 << (bits + 7))
        lo, hi = _cos_series_bounds(u_mid, bits + 4)
        lo, hi = lo - slack, hi + slack
        lo = max(lo, Fraction(-1))
        hi = min(hi, Fraction(1))
        self.store[key] = (bits, lo, hi)
        return lo, hi


_COS = _CosCache()


def cos_turn_bounds(turn, bits):
    return _COS.bounds(Fraction(turn), bits)


#: Rational values of cos(2*pi*j/d); the only rational turns with rational
#: cosine (Niven).
_COS_RATIONAL = {1: Fraction(1), 2: Fraction(-1), 3: Fraction(-1, 2),
                 4: Fraction(0), 6: Fraction(1, 2)}


def cos_turn_rational(turn):
    """cos(2*pi*turn) as an exact Fraction when it is rational, else None."""
    turn = Fraction(turn)
    d = turn.denominator
    return _COS_RATIONAL.get(d)


def poly_eval_interval(p, lo, hi):
    """Interval Horner evaluation of an integer polynomial on [lo, hi]."""
    alo = ahi = Fraction(0)
    for c in reversed(p):
        cands = (alo * lo, alo * hi, ahi * lo, ahi * hi)
        alo, ahi = min(cands) + c, max(cands) + c
    return alo, ahi


class RealAlgebraic:
    """A real algebraic number: either an exact rational, or the unique root
    of a squarefree integer polynomial inside an isolating interval with a
    sign change at the endpoints."""

    __slots__ = ("poly", "lo", "hi", "value", "_sign_lo")

    def __init__(self, poly, lo, hi, value=None):
        self.poly = tuple(poly) if poly is not None else None
        self.lo = lo
        self.hi = hi
        self.value = value
        self._sign_lo = None if value is not None else _sgn(peval(self.poly, lo))

    @classmethod
    def rational(cls, r):
        r = Fraction(r)
        return cls(None, r, r, value=r)

    @classmethod
    def root_of(cls, poly, lo, hi):
        lo, hi = Fraction(lo), Fraction(hi)
        slo, shi = _sgn(peval(poly, lo)), _sgn(peval(poly, hi))
        if slo * shi >= 0:
            raise ValueError("not an isolating interval with a sign change")
        return cls(poly, lo, hi)

    @property
    def is_rational(self):
        return self.value is not None

    def refine(self):
        if self.value is not None:
            return
        mid = (self.lo + self.hi) / 2
        s = _sgn(peval(self.poly, mid))
        if s == 0:
            self.value = mid
            self.lo = self.hi = mid
        elif s == self._sign_lo:
            self.lo = mid
        else:
            self.hi = mid

    def bounds(self, width):
        steps = 0
        while self.hi - self.lo > width:
            self.refine()
            steps += 1
            if steps > MAX_REFINE:
                raise PrecisionExhausted("interval refinement stalled")
        return self.lo, self.hi

    def sign_of_poly(self, q):
        """Exact sign of q(alpha) for an integer polynomial q."""
        q = pnorm(list(q))
        if not q:
            return 0
        if self.value is not None:
            return _sgn(peval(q, self.value))
        g = pgcd(list(self.poly), q)
        if pdeg(g) >= 1 and peval(g, self.lo) * peval(g, self.hi) < 0:
            # the unique root of self.poly in the interval is also a root of q
            return 0
        for _ in range(MAX_REFINE):
            vlo, vhi = poly_eval_interval(q, self.lo, self.hi)
            if vlo > 0:
                return 1
            if vhi < 0:
                return -1
            self.refine()
        raise PrecisionExhausted("sign of polynomial at algebraic point")

    def compare_rational(self, r):
        """Sign of (alpha - r)."""
        r = Fraction(r)
        return self.sign_of_poly([-r.numerator, r.denominator])

    def __repr__(self):
        if self.value is not None:
            return f"RealAlgebraic({self.value})"
        return f"RealAlgebraic(poly={self.poly}, ({self.lo}, {self.hi}))"


def sign_at_cos_turn(q, turn):
    """Exact sign of q(cos(2*pi*turn)) for an integer polynomial q and a
    rational turn.

    Zero is certified symbolically: clearing denominators in
    q((t + 1/t)/2) yields an integer polynomial whose value at
    exp(2*pi*i*turn) vanishes iff q does at the cosine, which reduces the
    zero test to divisibility by a cyclotomic polynomial. Nonzero signs
    come from certified cosine enclosures refined until decisive.
    """
    q = pnorm(list(q))
    if not q:
        return 0
    turn = Fraction(turn)
    r = cos_turn_rational(turn)
    if r is not None:
        return _sgn(peval(q, r))
    d = turn.denominator
    n = pdeg(q)
    # H(t) = 2^n * t^n * q((t + 1/t)/2), an integer polynomial
    h = []
    for i, c in enumerate(q):
        h = _padd(h, _pscale(_ppow_t2p1(i), c * 2 ** (n - i), n - i))
    h = pnorm(h)
    if not h:
        return 0
    # the cyclotomic polynomial is only needed when its degree phi(d) is
    # small enough to divide h; phi itself is cheap even for huge d
    if _euler_phi(d) <= pdeg(h) and pdivides(list(cyclotomic(d)), h):
        return 0
    bits = 16
    for _ in range(MAX_REFINE):
        lo, hi = cos_turn_bounds(turn, bits)
        vlo, vhi = poly_eval_interval(q, lo, hi)
        if vlo > 0:
            return 1
        if vhi < 0:
            return -1
        bits *= 2
    raise PrecisionExhausted("sign of polynomial at root-of-unity cosine")


def _euler_phi(n):
    out = n
    d = 2
    while d * d <= n:
        if n % d == 0:
            out -= out // d
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out -= out // n
    return out


@lru_cache(maxsize=None)
def _ppow_t2p1(i):
    """(t^2 + 1)^i as a coefficient tuple."""
    out = [1]
    for _ in range(i):
        out = _pmul_simple(out, [1, 0, 1])
    return tuple(out)


def _pmul_simple(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _padd(p, q):
    n = max(len(p), len(q))
    out = [0] * n
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return out


def _pscale(p, c, shift):
    return [0] * shift + [c * a for a in p]


def simplest_between(lo, hi):
    """The rational with smallest denominator (then smallest numerator) in
    the open interval (lo, hi). Requires lo < hi."""
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise ValueError("empty interval")
    if lo < 0:
        if hi > 0:
            return Fraction(0)
        return -simplest_between(-hi, -lo)

    def rec(a, b):
        # 0 <= a < b
        n = a.numerator // a.denominator
        if n + 1 < b:
            return Fraction(n + 1)
        frac_a = a - n
        frac_b = b - n
        if frac_a == 0:
            # simplest in (0, frac_b): 1/q with smallest q
            q = frac_b.denominator // frac_b.numerator + 1
            return n + Fraction(1, q)
        return n + 1 / rec(1 / frac_b, 1 / frac_a)

    return rec(lo, hi)
