"""Finite quotient towers of Z x| Lambda/(Delta) certifying residual
finiteness at desk scale.

At stage i the coefficient ring is reduced mod p^i (p coprime to the
leading coefficient, so Delta can be made monic and the quotient H/H_i is
free of rank deg(Delta) over Z/p^i with t acting by the companion matrix).
The cyclic order k_i is the exact order of t on H/H_i, minimally adjusted
so that k_i > i and k_i | k_(i+1); separation of concrete group elements
replaces the intersection axiom, which is not checkable at finite depth.
"""

from dataclasses import dataclass
from math import gcd
from typing import Optional

from .alexmod import FiniteLambdaModule
from .seifert import IntLaurentPoly


class PrimeDividesLeading(ValueError):
    """p divides the leading coefficient, so the companion model breaks."""


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _prime_factorization(n):
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _mat_mul_mod(a, b, mod):
    n = len(a)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for k in range(n):
            c = a[i][k]
            if c:
                for j in range(n):
                    out[i][j] = (out[i][j] + c * b[k][j]) % mod
    return out


def _mat_pow_mod(m, e, mod):
    n = len(m)
    result = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    base = [[x % mod for x in row] for row in m]
    while e:
        if e & 1:
            result = _mat_mul_mod(result, base, mod)
        base = _mat_mul_mod(base, base, mod)
        e >>= 1
    return result


def _is_identity_mod(m, mod):
    return all(m[i][j] % mod == (1 if i == j else 0) % mod
               for i in range(len(m)) for j in range(len(m)))


def _companion_mod(delta: IntLaurentPoly, p: int, i: int):
    """Companion matrix of the monic reduction of delta mod p^i."""
    coeffs = list(delta.canonical().coeffs)
    if not coeffs:
        raise ValueError("the zero polynomial presents no finite quotient")
    deg = len(coeffs) - 1
    if deg == 0:
        return [], 1
    if coeffs[-1] % p == 0:
        raise PrimeDividesLeading(f"{p} divides the leading coefficient")
    mod = p ** i
    inv = pow(coeffs[-1], -1, mod)
    monic = [(c * inv) % mod for c in coeffs]
    comp = [[0] * deg for _ in range(deg)]
    for j in range(deg - 1):
        comp[j + 1][j] = 1
    for j in range(deg):
        comp[j][deg - 1] = (-monic[j]) % mod
    return comp, mod


def finite_alexander_quotient(delta: IntLaurentPoly, p: int, i: int) -> FiniteLambdaModule:
    """The module (Z/p^i)[t]/(delta): free of rank deg(delta) over Z/p^i,
    with t acting by the companion matrix of the monicized polynomial.
    Requires p coprime to the leading coefficient."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if i < 1:
        raise ValueError("level must be >= 1")
    comp, mod = _companion_mod(delta, p, i)
    deg = len(comp)
    if deg == 0:
        return FiniteLambdaModule.trivial()
    return FiniteLambdaModule.make((mod,) * deg, comp)


def order_of_t(delta: IntLaurentPoly, p: int, i: int) -> int:
    """Minimal k with t^k the identity on (Z/p^i)[t]/(delta).

    The order mod p divides |GL(deg, p)|, whose prime factors are divided
    out; the order then lifts along powers of p.
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if i < 1:
        raise ValueError("level must be >= 1")
    comp, _ = _companion_mod(delta, p, i)
    deg = len(comp)
    if deg == 0:
        return 1
    # order modulo p, starting from the full group order
    group_order = 1
    for j in range(deg):
        group_order *= p ** deg - p ** j
    order = group_order
    for q in _prime_factorization(group_order):
        while order % q == 0 and _is_identity_mod(_mat_pow_mod(comp, order // q, p), p):
            order //= q
    assert _is_identity_mod(_mat_pow_mod(comp, order, p), p)
    # lift to p^i: the order can only grow by factors of p
    mod = p ** i
    while not _is_identity_mod(_mat_pow_mod(comp, order, mod), mod):
        order *= p
    # minimize once more (guards the p = 2 lift edge cases)
    for q in _prime_factorization(order):
        while order % q == 0 and _is_identity_mod(_mat_pow_mod(comp, order // q, mod), mod):
            order //= q
    return order


@dataclass(frozen=True)
class ResolutionStep:
    """One stage of the tower: the finite quotient Z/k^s x| H/H_i together
    with the reduction data (coefficients mod p^i, cyclic coordinate mod
    k^s)."""

    index: int
    prime: int
    k: int
    s: int
    t_order: int
    module: FiniteLambdaModule

    def cyclic_order(self):
        return self.k ** self.s

    def apply(self, n: int, h):
        """Image of (n, h): h is a coefficient vector of length deg(Delta)
        (representing a polynomial of degree < deg Delta)."""
        mod = self.prime ** self.index
        if len(h) != self.module.rank:
            raise ValueError("coefficient vector length mismatch")
        return (n % self.cyclic_order(), tuple(int(c) % mod for c in h))

    def to_json_dict(self):
        return {"i": self.index, "k": self.k, "s": self.s,
                "t_order": self.t_order, "order": quotient_group_order(self)}


@dataclass(frozen=True)
class WitnessRecord:
    element: tuple          # (n, coefficient tuple)
    separated_at: Optional[int]


@dataclass(frozen=True)
class ResolutionReport:
    prime: int
    delta: IntLaurentPoly
    steps: tuple
    witnesses: tuple

    @property
    def separation_failures(self):
        return tuple(w for w in self.witnesses if w.separated_at is None)

    def to_json_dict(self):
        return {
            "p": self.prime,
            "delta": str(self.delta),
            "steps": [s.to_json_dict() for s in self.steps],
            "witnesses": [{"element": {"n": w.element[0], "h": list(w.element[1])},
                           "separated_at": w.separated_at}
                          for w in self.witnesses],
        }


def quotient_group_order(step: ResolutionStep) -> int:
    """k^s * p^(i * deg Delta), the order of Z/k^s x| H/H_i."""
    return step.cyclic_order() * step.module.order()


def _lcm(a, b):
    return a * b // gcd(a, b)


def build_resolution(delta: IntLaurentPoly, p: int, depth: int,
                     s_schedule=None, witnesses=None, witness_bound: int = 2) -> ResolutionReport:
    """Build the first `depth` stages of the tower for the given polynomial
    and prime, and separate witness elements.

    k_i is the exact order of t on H/H_i times the least factor enforcing
    k_i > i and k_(i-1) | k_i (any multiple of the exact order still acts
    trivially, so correctness is preserved). s_i defaults to i; a list or a
    callable may be supplied instead. Witnesses default to all nonzero
    (n, h) with |n| and the coefficients of h bounded by witness_bound;
    an unseparated witness is recorded, not fatal (the depth may simply be
    too small)."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    delta = delta.canonical()
    deg = delta.degree

    def s_of(i):
        if s_schedule is None:
            return i
        if callable(s_schedule):
            return int(s_schedule(i))
        return int(s_schedule[i - 1])

    steps = []
    k_prev = 1
    s_prev = 0
    for i in range(1, depth + 1):
        module = finite_alexander_quotient(delta, p, i)
        o = order_of_t(delta, p, i)
        base = _lcm(o, k_prev)
        k_i = base * (i // base + 1)
        s_i = s_of(i)
        if s_i < max(1, s_prev):
            raise ValueError("s schedule must be positive and nondecreasing")
        assert k_i > i and k_i % k_prev == 0 and k_i % o == 0
        if module.rank:
            assert module.order() == p ** (i * deg), "H/H_i must be a p-group"
            assert module.action_order() == o
        steps.append(ResolutionStep(i, p, k_i, s_i, o, module))
        k_prev, s_prev = k_i, s_i

    if witnesses is None:
        witnesses = _default_witnesses(deg, witness_bound)
    records = []
    for n, h in witnesses:
        if n == 0 and all(c == 0 for c in h):
            continue
        sep = None
        for step in steps:
            n_img, h_img = step.apply(n, h)
            if n_img != 0 or any(h_img):
                sep = step.index
                break
        records.append(WitnessRecord((n, tuple(h)), sep))
    return ResolutionReport(p, delta, tuple(steps), tuple(records))


def _default_witnesses(deg, bound):
    from itertools import product
    rng = range(-bound, bound + 1)
    out = []
    for n in rng:
        for h in product(rng, repeat=deg):
            if n == 0 and not any(h):
                continue
            out.append((n, h))
    return out
