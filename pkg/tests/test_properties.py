"""Hypothesis-driven invariant checks, complementing the bulk randomized
suites in test_acceptance.py."""

import math
import random
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from knotsig import (UnitRootAngle, alexander_polynomial, arf_invariant,
                     block_sum, eta_cyclic, signature_function,
                     tl_signature_at, validate_seifert)
from knotsig.polyz import isolate_roots, peval, sturm_chain, sturm_count
from knotsig.realalg import (cos_turn_bounds, pi_bounds, simplest_between,
                             sign_at_cos_turn, RealAlgebraic)

from conftest import random_interesting_seifert


@st.composite
def small_seifert(draw):
    genus = draw(st.integers(1, 2))
    seed = draw(st.integers(0, 10 ** 6))
    return random_interesting_seifert(random.Random(seed), genus)


@st.composite
def angles(draw):
    k = draw(st.integers(1, 48))
    j = draw(st.integers(0, k - 1))
    return UnitRootAngle.of(j, k)


class TestSignatureInvariants:
    @given(small_seifert(), angles())
    @settings(max_examples=120, deadline=None)
    def test_bound_and_conjugation(self, a, z):
        v = tl_signature_at(a, z)
        assert abs(v) <= a.n
        assert v == tl_signature_at(a, z.conjugate())

    @given(small_seifert(), angles())
    @settings(max_examples=80, deadline=None)
    def test_step_function_lookup_matches_pointwise(self, a, z):
        assert signature_function(a).value_at(z) == tl_signature_at(a, z)

    @given(small_seifert(), small_seifert(), angles())
    @settings(max_examples=60, deadline=None)
    def test_additivity(self, a, b, z):
        ab = block_sum(a, b)
        assert tl_signature_at(ab, z) == tl_signature_at(a, z) + tl_signature_at(b, z)

    @given(small_seifert(), st.integers(1, 30))
    @settings(max_examples=40, deadline=None)
    def test_eta_sum_matches_direct(self, a, k):
        direct = sum(tl_signature_at(a, UnitRootAngle.of(j, k))
                     for j in range(1, k + 1))
        assert eta_cyclic(a, k) == direct


class TestAlexanderInvariants:
    @given(small_seifert())
    @settings(max_examples=100, deadline=None)
    def test_symmetry_and_unit_value(self, a):
        p = alexander_polynomial(a)
        assert p(1) == 1
        assert p.is_palindromic()

    @given(small_seifert())
    @settings(max_examples=60, deadline=None)
    def test_arf_is_a_bit(self, a):
        assert arf_invariant(a) in (0, 1)


class TestCertifiedEnclosures:
    def test_pi_bounds_tighten(self):
        enclosures = []
        for bits in (16, 64, 256):
            lo, hi = pi_bounds(bits)
            assert lo < hi
            assert hi - lo <= Fraction(1, 2 ** (bits - 1))
            enclosures.append((lo, hi))
        # every enclosure contains pi, so all pairs must overlap
        for lo1, hi1 in enclosures:
            for lo2, hi2 in enclosures:
                assert max(lo1, lo2) < min(hi1, hi2)
        lo, hi = enclosures[0]
        assert float(lo) <= math.pi <= float(hi)
        assert lo < Fraction(355, 113) < hi  # pi is within 3e-7 of 355/113

    @given(st.integers(1, 400), st.integers(1, 400))
    @settings(max_examples=120, deadline=None)
    def test_cos_enclosure_contains_float_cos(self, j, k):
        turn = Fraction(j % k, k)
        lo, hi = cos_turn_bounds(turn, 40)
        ref = math.cos(2 * math.pi * float(turn))
        assert float(lo) - 1e-9 <= ref <= float(hi) + 1e-9
        assert hi - lo <= Fraction(1, 2 ** 38)

    @given(st.fractions(min_value=-10, max_value=10, max_denominator=60),
           st.fractions(min_value=-10, max_value=10, max_denominator=60))
    @settings(max_examples=150, deadline=None)
    def test_simplest_between(self, a, b):
        if a == b:
            return
        lo, hi = min(a, b), max(a, b)
        s = simplest_between(lo, hi)
        assert lo < s < hi
        # no fraction with a smaller denominator lies inside the interval
        for den in range(1, s.denominator):
            first = lo.numerator * den // lo.denominator + 1
            assert not lo < Fraction(first, den) < hi


class TestRootIsolation:
    @given(st.lists(st.integers(-6, 6), min_size=3, max_size=7))
    @settings(max_examples=120, deadline=None)
    def test_isolation_consistent_with_sturm_count(self, coeffs):
        from knotsig.polyz import squarefree_part, pnorm, pdeg
        p = pnorm(coeffs)
        if pdeg(p) < 1:
            return
        p = squarefree_part(p)
        if pdeg(p) < 1 or peval(p, Fraction(-1)) == 0 or peval(p, Fraction(1)) == 0:
            return
        ivs = isolate_roots(p, Fraction(-1), Fraction(1))
        chain = sturm_chain(p)
        assert len(ivs) == sturm_count(chain, Fraction(-1), Fraction(1))
        for lo, hi in ivs:
            assert peval(p, lo) * peval(p, hi) < 0
            assert sturm_count(chain, lo, hi) == 1
        for (a1, b1), (a2, b2) in zip(ivs, ivs[1:]):
            assert b1 <= a2

    def test_real_algebraic_sign_against_floats(self):
        rng = random.Random(77)
        for _ in range(60):
            # a squarefree cubic with a root in (-1, 1)
            c = [rng.randint(-5, 5) for _ in range(4)]
            from knotsig.polyz import squarefree_part, pnorm, pdeg
            p = squarefree_part(pnorm(c))
            if pdeg(p) < 1:
                continue
            if peval(p, Fraction(-1)) == 0 or peval(p, Fraction(1)) == 0:
                continue
            for lo, hi in isolate_roots(p, Fraction(-1), Fraction(1)):
                alpha = RealAlgebraic.root_of(p, lo, hi)
                q = [rng.randint(-4, 4) for _ in range(3)]
                sign = alpha.sign_of_poly(q)
                flo, fhi = alpha.bounds(Fraction(1, 2 ** 40))
                approx = peval(q, Fraction((flo + fhi) / 2))
                if abs(approx) > Fraction(1, 2 ** 20):
                    assert sign == (approx > 0) - (approx < 0)


class TestConcurrency:
    def test_parallel_queries_match_sequential(self):
        from concurrent.futures import ThreadPoolExecutor
        from knotsig import eta_cyclic, l2_eta_abelian, signature_function

        rng = random.Random(59)
        mats = [random_interesting_seifert(rng, 2) for _ in range(4)]
        jobs = [(a, k) for a in mats for k in (6, 24, 120, 720)]
        with ThreadPoolExecutor(max_workers=8) as pool:
            parallel = list(pool.map(lambda job: eta_cyclic(*job), jobs))
        # fresh caches for the sequential pass
        signature_function.cache_clear()
        sequential = [eta_cyclic(a, k) for a, k in jobs]
        assert parallel == sequential
        for a in mats:
            lo, hi = l2_eta_abelian(a, Fraction(1, 10 ** 6))
            assert hi - lo <= Fraction(1, 10 ** 6)


class TestHighPrecisionOracles:
    """mpmath at 50+ digits as an independent numerical oracle for the
    certified enclosures, and determinant interpolation as an independent
    route to the symbolic characteristic polynomial."""

    def test_pi_bounds_against_mpmath(self):
        import mpmath
        mpmath.mp.dps = 80
        ref = Fraction(mpmath.nstr(mpmath.mp.pi, 70))
        tol = Fraction(1, 10 ** 65)
        for bits in (32, 128, 200):
            lo, hi = pi_bounds(bits)
            assert lo <= ref + tol and ref - tol <= hi

    def test_cos_bounds_against_mpmath(self):
        import mpmath
        mpmath.mp.dps = 60
        rng = random.Random(7)
        for _ in range(40):
            k = rng.randrange(1, 1000)
            j = rng.randrange(k)
            turn = Fraction(j, k)
            lo, hi = cos_turn_bounds(turn, 120)
            ref = Fraction(mpmath.nstr(
                mpmath.cos(2 * mpmath.pi * mpmath.mpf(j) / k), 50))
            tol = Fraction(1, 10 ** 45)
            assert lo <= ref + tol and ref - tol <= hi
            assert hi - lo <= Fraction(1, 2 ** 118)

    def test_char_poly_against_determinant_interpolation(self):
        from knotsig.signature import _char_poly_in_x
        from knotsig.polyz import peval
        from oracles import char_poly_at_x_by_interpolation
        rng = random.Random(29)
        xs = [Fraction(0), Fraction(1, 2), Fraction(-1, 2), Fraction(1, 3),
              Fraction(-3, 4), Fraction(7, 9)]
        for _ in range(10):
            a = random_interesting_seifert(rng, rng.choice([1, 2]))
            coeffs = _char_poly_in_x(a)
            for x in xs:
                direct = [peval(list(c), x) for c in coeffs]
                oracle = char_poly_at_x_by_interpolation(a, x)
                assert direct == oracle, (a.entries, x)


class TestSignAtCosTurn:
    def test_zero_certificates(self):
        # 2x - 1 vanishes exactly at the sixth-root cosine
        assert sign_at_cos_turn([-1, 2], Fraction(1, 6)) == 0
        assert sign_at_cos_turn([-1, 2], Fraction(5, 6)) == 0
        assert sign_at_cos_turn([-1, 2], Fraction(1, 5)) != 0
        # the minimal polynomial of cos(2 pi / 5): 4x^2 + 2x - 1
        assert sign_at_cos_turn([-1, 2, 4], Fraction(1, 5)) == 0
        assert sign_at_cos_turn([-1, 2, 4], Fraction(2, 5)) == 0
        assert sign_at_cos_turn([-1, 2, 4], Fraction(1, 7)) != 0

    @given(st.integers(1, 60), st.integers(1, 60),
           st.lists(st.integers(-5, 5), min_size=1, max_size=4))
    @settings(max_examples=100, deadline=None)
    def test_sign_matches_float_evaluation(self, j, k, q):
        turn = Fraction(j % k, k)
        s = sign_at_cos_turn(q, turn)
        x = math.cos(2 * math.pi * float(turn))
        val = sum(c * x ** i for i, c in enumerate(q))
        if abs(val) > 1e-6:
            assert s == (val > 0) - (val < 0)
