"""The Alexander module and its finite shadows.

The module over Lambda = Z[t, 1/t] presented by the pencil tA - A^t is
studied through its finite quotients: the torsion of the k-fold cyclic
cover homology is the torsion of coker(S (x) A - I (x) A^t) with S the
k-cycle shift, computed by exact Smith normal form with the t-action
transported to the normal-form basis. The order of that torsion has an
independent exact oracle, the resultant of the Alexander polynomial with
(t^k - 1)/(t - 1). For k = 2 the linking form on the torsion is
x^t (A + A^t)^(-1) y mod 1.
"""

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from itertools import product
from math import gcd
from typing import Optional

from . import intmat
from .polyz import resultant
from .seifert import SeifertMatrix, alexander_polynomial


class DegenerateForm(ValueError):
    """The symmetrized matrix is singular; the would-be finite form is not."""


class CapExceeded(RuntimeError):
    """Enumeration would exceed the configured group-order cap."""

    def __init__(self, order, cap):
        super().__init__(f"group order {order} exceeds cap {cap}")
        self.order = order
        self.cap = cap


def default_cap():
    return int(os.environ.get("KNOTSIG_CAP", "1000000"))


@dataclass(frozen=True)
class LambdaModulePresentation:
    """Presentation pencil (A, A^t): the relation matrix is tA - A^t."""

    matrix: SeifertMatrix

    @property
    def size(self):
        return self.matrix.n

    def pencil(self):
        a = self.matrix.as_lists()
        return a, intmat.transpose(a)

    def determinant(self):
        """Order of the module: the normalized Alexander polynomial."""
        return alexander_polynomial(self.matrix)


def alexander_module(a: SeifertMatrix) -> LambdaModulePresentation:
    return LambdaModulePresentation(a)


@dataclass(frozen=True)
class FiniteLambdaModule:
    """A finite abelian group with torsion coefficients d_1 | d_2 | ... | d_r
    (each >= 2) and an automorphism t given by an integer matrix acting on
    the coordinates mod each d_i."""

    torsion: tuple
    t_matrix: tuple

    def __post_init__(self):
        d = self.torsion
        for a, b in zip(d, d[1:]):
            if b % a != 0:
                raise ValueError("torsion coefficients must form a divisor chain")
        if any(x < 2 for x in d):
            raise ValueError("torsion coefficients must be >= 2")
        t = self.t_matrix
        r = len(d)
        if len(t) != r or any(len(row) != r for row in t):
            raise ValueError("action matrix size mismatch")
        for i in range(r):
            for j in range(r):
                if (d[j] * t[i][j]) % d[i] != 0:
                    raise ValueError("action is not a well-defined endomorphism")
        if r and not self._is_invertible():
            raise ValueError("action is not invertible")

    def _is_invertible(self):
        # surjective iff surjective on F/pF for every prime p dividing d_r
        for p in _prime_factors(self.torsion[-1]):
            idx = [i for i, d in enumerate(self.torsion) if d % p == 0]
            sub = [[self.t_matrix[i][j] % p for j in idx] for i in idx]
            if intmat.det(sub) % p == 0:
                return False
        return True

    @classmethod
    def make(cls, torsion, t_matrix):
        torsion = tuple(int(x) for x in torsion)
        t = tuple(tuple(int(x) % torsion[i] for x in row)
                  for i, row in enumerate(t_matrix))
        return cls(torsion, t)

    @classmethod
    def trivial(cls):
        return cls((), ())

    @property
    def rank(self):
        return len(self.torsion)

    def order(self):
        return reduce(lambda x, y: x * y, self.torsion, 1)

    def reduce_vec(self, vec):
        return tuple(int(v) % d for v, d in zip(vec, self.torsion))

    def zero(self):
        return (0,) * self.rank

    def add(self, u, v):
        return tuple((x + y) % d for x, y, d in zip(u, v, self.torsion))

    def neg(self, v):
        return tuple((-x) % d for x, d in zip(v, self.torsion))

    def elements(self):
        return product(*(range(d) for d in self.torsion))

    def t_apply(self, vec):
        return tuple(sum(self.t_matrix[i][j] * vec[j] for j in range(self.rank)) % d
                     for i, d in enumerate(self.torsion))

    def action_order(self, cap=10**7):
        """Minimal o >= 1 with t^o the identity on the module."""
        return _action_order(self, cap)

    def t_power_matrix(self, e):
        """The matrix of t^e on the module (e taken mod the action order)."""
        if self.rank == 0:
            return ()
        return _t_power_matrix(self, e % self.action_order())

    def t_pow_apply(self, vec, e):
        vec = self.reduce_vec(vec)
        if self.rank == 0:
            return vec
        mat = self.t_power_matrix(e)
        return tuple(sum(mat[i][j] * vec[j] for j in range(self.rank)) % d
                     for i, d in enumerate(self.torsion))

    def to_json_dict(self):
        return {"torsion": list(self.torsion), "t": [list(r) for r in self.t_matrix]}

    @classmethod
    def from_json_dict(cls, data):
        return cls.make(data["torsion"], data["t"])


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@lru_cache(maxsize=None)
def _action_order(module, cap):
    if module.rank == 0:
        return 1
    basis = [tuple(int(i == j) for j in range(module.rank))
             for i in range(module.rank)]
    cur = list(basis)
    for o in range(1, cap + 1):
        cur = [module.t_apply(v) for v in cur]
        if cur == basis:
            return o
    raise RuntimeError("action order exceeds cap")


@lru_cache(maxsize=None)
def _t_power_matrix(module, e):
    if e == 0:
        return tuple(tuple(int(i == j) for j in range(module.rank))
                     for i in range(module.rank))
    prev = _t_power_matrix(module, e - 1)
    t = module.t_matrix
    r = module.rank
    return tuple(tuple(sum(t[i][k] * prev[k][j] for k in range(r)) % module.torsion[i]
                       for j in range(r)) for i in range(r))


@dataclass(frozen=True)
class CyclicCoverHomology:
    """Torsion and free rank of the homology of a finite cyclic cover."""

    module: FiniteLambdaModule
    free_rank: int


def cyclic_quotient(pres: LambdaModulePresentation, k: int) -> CyclicCoverHomology:
    """Quotient of the Alexander module by (t^k - 1), split into torsion
    plus free rank, with the induced t-action on the torsion.

    The torsion here is taken, by definition, as the torsion of
    coker(S (x) A - I (x) A^t); for prime-power k it agrees with the
    torsion of the cover homology and its order equals the resultant
    oracle, which the test suite checks on every fixture.
    """
    if k < 1:
        raise ValueError("k must be positive")
    n = pres.size
    if n == 0:
        return CyclicCoverHomology(FiniteLambdaModule.trivial(), 0)
    a, at = pres.pencil()
    shift = [[1 if i == (j + 1) % k else 0 for j in range(k)] for i in range(k)]
    big = intmat.mat_sub(intmat.kron(shift, a), intmat.kron(intmat.identity(k), at))
    t_big = intmat.kron(shift, intmat.identity(n))
    snf = intmat.smith_form(big)
    w = intmat.mat_mul(intmat.mat_mul(snf.u, t_big), snf.u_inv)
    tor_idx = [i for i, d in enumerate(snf.d) if d not in (0, 1)]
    free_idx = [i for i, d in enumerate(snf.d) if d == 0]
    for i in free_idx:
        for j in tor_idx:
            assert w[i][j] == 0, "t-action must preserve the torsion submodule"
    torsion = tuple(snf.d[i] for i in tor_idx)
    t_tor = tuple(tuple(w[i][j] % snf.d[i] for j in tor_idx) for i in tor_idx)
    module = (FiniteLambdaModule.make(torsion, t_tor) if torsion
              else FiniteLambdaModule.trivial())
    return CyclicCoverHomology(module, len(free_idx))


def torsion_order_by_resultant(a: SeifertMatrix, k: int) -> int:
    """|prod over j=1..k-1 of Delta(zeta_k^j)|, computed exactly as the
    absolute resultant of Delta with (t^k - 1)/(t - 1). Zero signals an
    infinite quotient (Delta vanishes at some k-th root of unity).

    Independent of cyclic_quotient: no Smith form, no matrix pencils.
    """
    if k < 1:
        raise ValueError("k must be positive")
    delta = alexander_polynomial(a)
    if k == 1:
        return 1
    q = [1] * k  # 1 + t + ... + t^(k-1)
    return abs(resultant(list(delta.coeffs), q))


@dataclass(frozen=True)
class LinkingForm:
    """Symmetric nonsingular Q/Z-valued pairing on a FiniteLambdaModule,
    given by a Gram matrix of fractions mod 1 on the generators."""

    module: FiniteLambdaModule
    gram: tuple

    def __post_init__(self):
        r = self.module.rank
        g = self.gram
        if len(g) != r or any(len(row) != r for row in g):
            raise ValueError("gram size mismatch")
        for i in range(r):
            for j in range(r):
                if g[i][j] != g[j][i]:
                    raise ValueError("linking form must be symmetric")
                v = g[i][j] * self.module.torsion[i]
                if v.denominator != 1:
                    raise ValueError("form not well defined on the torsion")

    def pair(self, u, v):
        total = Fraction(0)
        for i, x in enumerate(u):
            if x:
                for j, y in enumerate(v):
                    if y:
                        total += x * y * self.gram[i][j]
        return total % 1

    def to_json_dict(self):
        d = self.module.to_json_dict()
        d["gram"] = [[_frac_str(x) for x in row] for row in self.gram]
        return d


def _frac_str(x):
    x = Fraction(x)
    return str(x)


def double_cover_linking_form(a: SeifertMatrix) -> LinkingForm:
    """Linking form of the double branched cover: the pairing
    x^t (A + A^t)^(-1) y mod 1 on coker(A + A^t), with t acting as -1."""
    n = a.n
    if n == 0:
        return LinkingForm(FiniteLambdaModule.trivial(), ())
    b = a.symmetrization()
    if intmat.det(b) == 0:
        raise DegenerateForm("A + A^t is singular")
    binv = intmat.frac_inverse(b)
    snf = intmat.smith_form(b)
    uinv = snf.u_inv
    tor_idx = [i for i, d in enumerate(snf.d) if d > 1]
    torsion = tuple(snf.d[i] for i in tor_idx)
    if not torsion:
        return LinkingForm(FiniteLambdaModule.trivial(), ())
    gens = [[uinv[r][i] for r in range(n)] for i in tor_idx]
    gram = []
    for gi in gens:
        row = []
        for gj in gens:
            val = sum(Fraction(gi[r]) * binv[r][s] * gj[s]
                      for r in range(n) for s in range(n))
            row.append(val % 1)
        gram.append(tuple(row))
    t_mat = tuple(tuple((-1 if i == j else 0) % torsion[i] for j in range(len(tor_idx)))
                  for i in range(len(tor_idx)))
    module = FiniteLambdaModule.make(torsion, t_mat)
    return LinkingForm(module, tuple(gram))


def find_linking_metabolizers(form: LinkingForm, cap: Optional[int] = None):
    """All t-invariant subgroups P with P equal to its own annihilator
    under the form, as generator tuples. Exhaustive, so the module order is
    capped (default from KNOTSIG_CAP, else 10**6)."""
    if cap is None:
        cap = default_cap()
    mod = form.module
    order = mod.order()
    if order > cap:
        raise CapExceeded(order, cap)
    if order == 1:
        return [()]
    sq = _isqrt(order)
    if sq * sq != order:
        return []

    elements = list(mod.elements())

    def closure(gens):
        seen = {mod.zero()}
        frontier = [mod.zero()]
        for g in gens:
            if g not in seen:
                seen.add(g)
                frontier.append(g)
        while frontier:
            v = frontier.pop()
            for w in (mod.t_apply(v), *(mod.add(v, g) for g in list(seen))):
                if w not in seen:
                    if len(seen) >= order:
                        break
                    seen.add(w)
                    frontier.append(w)
        return frozenset(seen)

    def perp(subgroup):
        gens = list(subgroup)
        return frozenset(x for x in elements
                         if all(form.pair(x, g) == 0 for g in gens))

    found = {}
    seen_subgroups = set()

    def search(gens, sub):
        if len(sub) > sq:
            return
        if len(sub) == sq and sub not in found:
            if perp(sub) == sub:
                found[sub] = tuple(gens)
        for g in elements:
            if g in sub:
                continue
            nsub = closure(list(sub) + [g])
            if nsub in seen_subgroups or len(nsub) > sq:
                continue
            seen_subgroups.add(nsub)
            search(gens + [g], nsub)

    base = closure([])
    seen_subgroups.add(base)
    search([], base)
    return sorted(found.values())


def _isqrt(n):
    x = int(n ** 0.5)
    while x * x > n:
        x -= 1
    while (x + 1) * (x + 1) <= n:
        x += 1
    return x


@dataclass(frozen=True)
class Character:
    """A character into the complex units with values that are m-th roots
    of unity: generator i maps to exp(2*pi*i*exponents[i]/modulus)."""

    modulus: int
    exponents: tuple

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        if any(not 0 <= c < self.modulus for c in self.exponents):
            raise ValueError("exponents must be reduced mod the modulus")

    @classmethod
    def make(cls, modulus, exponents):
        return cls(modulus, tuple(int(c) % modulus for c in exponents))

    def is_well_defined_on(self, module: FiniteLambdaModule):
        return all((d * c) % self.modulus == 0
                   for d, c in zip(module.torsion, self.exponents))

    def turn_of(self, vec):
        """The value on vec, as a fraction of a full turn (mod 1)."""
        return Fraction(sum(c * v for c, v in zip(self.exponents, vec)),
                        self.modulus) % 1

    def compose_t(self, module: FiniteLambdaModule):
        """The character x -> chi(t x)."""
        t = module.t_matrix
        r = module.rank
        new = [sum(t[i][j] * self.exponents[i] for i in range(r)) % self.modulus
               for j in range(r)]
        return Character(self.modulus, tuple(new))

    def order(self):
        g = self.modulus
        for c in self.exponents:
            g = gcd(g, c)
        return self.modulus // g

    def is_trivial(self):
        return all(c == 0 for c in self.exponents)


def characters_vanishing_on(module: FiniteLambdaModule, p_gens, p: int, r: int):
    """All characters of order dividing p**r vanishing on the t-invariant
    submodule generated by p_gens, enumerated exactly in lexicographic
    order. Vanishing is enforced on the t-orbits of the generators, so the
    submodule may be given by module generators over the group ring."""
    if r < 1 or p < 2:
        raise ValueError("need a prime p and r >= 1")
    m = p ** r
    gens = []
    for g in p_gens:
        v = module.reduce_vec(g)
        seen = set()
        while v not in seen:
            seen.add(v)
            gens.append(v)
            v = module.t_apply(v)
    ranges = []
    for d in module.torsion:
        step = m // gcd(d, m)
        ranges.append([j * step for j in range(gcd(d, m))])
    out = []
    for combo in product(*ranges):
        chi = Character.make(m, combo)
        if all(chi.turn_of(g) == 0 for g in gens):
            assert chi.is_well_defined_on(module)
            out.append(chi)
    return out
