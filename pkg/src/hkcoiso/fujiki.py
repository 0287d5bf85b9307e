"""
Fujiki-type integration on the subalgebra generated by degree-2 classes.

The top-degree functional is the polarization of lambda -> mu * q(lambda)^n:

    int(l_1 ... l_2n) = mu / (2n-1)!! * sum over perfect matchings M of
                        prod_{(a,b) in M} q(l_a, l_b),

so that int(lambda^2n) = mu q(lambda)^n. On a monomial in basis vectors the
matching sum is a memoized recursion over the index multiset.
"""

from dataclasses import dataclass
from fractions import Fraction
import random

from .errors import ArityMismatch, WrongDegree, InconsistentConstant, DimensionMismatch
from .linalg import frac, left_nullspace
from .quadratic_space import QuadraticSpace, dual_class
from .sym_algebra import Subspace, sym_dim, harmonic_subspace
from .symelement import SymElement, multiply, monomials


def double_factorial_odd(n):
    """(2n-1)!! = number of perfect matchings of 2n points."""
    out = 1
    for k in range(1, 2 * n, 2):
        out *= k
    return out


def matching_sum(pair, items):
    """sum over perfect matchings of `items` of prod pair(a, b). Brute force."""
    if not items:
        return Fraction(1)
    first, rest = items[0], items[1:]
    total = Fraction(0)
    for j in range(len(rest)):
        w = pair(first, rest[j])
        if w:
            total += w * matching_sum(pair, rest[:j] + rest[j + 1:])
    return total


def _monomial_matchings(gram, mono, memo):
    # same recursion as matching_sum, but over a sorted multiset of indices:
    # partners with equal index are grouped and counted once with multiplicity
    if not mono:
        return Fraction(1)
    hit = memo.get(mono)
    if hit is not None:
        return hit
    first, rest = mono[0], mono[1:]
    total = Fraction(0)
    prev = None
    for j, b in enumerate(rest):
        if b == prev:
            continue
        prev = b
        g = gram[first][b]
        if not g:
            continue
        mult = rest.count(b)
        total += g * mult * _monomial_matchings(gram, rest[:j] + rest[j + 1:], memo)
    memo[mono] = total
    return total


_MATCHING_MEMO = {}


@dataclass(frozen=True)
class IntegrationFunctional:
    space: QuadraticSpace
    n: int
    mu: Fraction = Fraction(1)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        object.__setattr__(self, "mu", frac(self.mu))
        if self.mu == 0:
            raise ValueError("mu must be nonzero")

    def monomial_integral(self, mono):
        memo = _MATCHING_MEMO.setdefault(self.space.gram, {})
        return self.mu * _monomial_matchings(self.space.gram, tuple(sorted(mono)), memo) \
            / double_factorial_odd(self.n)

    def against(self, w):
        """The functional r -> int(r w) on S^(2n - deg w) V, as a monomial dict."""
        out = {}
        for m in monomials(self.space.dim, 2 * self.n - w.degree):
            val = sum((c * self.monomial_integral(m + m2) for m2, c in w.coeffs.items()),
                      Fraction(0))
            if val:
                out[m] = val
        return out


def integrate_vectors(F, *vectors):
    if len(vectors) != 2 * F.n:
        raise ArityMismatch(f"expected {2 * F.n} vectors, got {len(vectors)}")
    for v in vectors:
        if len(v) != F.space.dim:
            raise DimensionMismatch("vector length does not match the space")
    vs = [tuple(map(frac, v)) for v in vectors]
    s = matching_sum(F.space.pair, vs)
    return F.mu * s / double_factorial_odd(F.n)


def integrate(F, p):
    if p.degree != 2 * F.n:
        raise WrongDegree(f"can only integrate degree {2 * F.n}, got {p.degree}")
    return sum((c * F.monomial_integral(m) for m, c in p.coeffs.items()), Fraction(0))


def _random_vector(rng, dim, bound=5):
    return tuple(Fraction(rng.randint(-bound, bound)) for _ in range(dim))


def mu_i(F, i, seed=0, checks=3):
    """The constant mu_i with int(c^i lambda^(2n-2i)) = mu_i q(lambda)^(n-i)."""
    if not 0 <= i <= F.n:
        raise ValueError("need 0 <= i <= n")
    space = F.space
    ci = dual_class(space) ** i
    rng = random.Random(seed)

    def ratio():
        while True:
            lam = _random_vector(rng, space.dim)
            ql = space.q(lam)
            if ql:
                val = integrate(F, multiply(ci, SymElement.linear(space, lam) ** (2 * F.n - 2 * i)))
                return val / ql ** (F.n - i)

    value = ratio()
    for _ in range(checks):
        other = ratio()
        if other != value:
            raise InconsistentConstant(f"mu_{i}: {value} != {other}")
    return value


def fujiki_evaluate(F, split, P, alpha, beta):
    """int(alpha^(n-i+1) beta^(n-1) P) for P of degree i <= n."""
    i = P.degree
    if i > F.n:
        raise WrongDegree("P must have degree <= n")
    if P.space != split.ambient or F.space != split.ambient:
        raise DimensionMismatch("P and the functional must live on the ambient space")
    a = SymElement.linear(F.space, alpha) ** (F.n - i + 1)
    b = SymElement.linear(F.space, beta) ** (F.n - 1)
    return integrate(F, multiply(multiply(a, b), P))


def gorenstein_pairing(F, a):
    """Matrix of (p, r) -> int(p r) on monomials of S^a V x S^(2n-a) V."""
    if not 0 <= a <= 2 * F.n:
        raise ValueError("need 0 <= a <= 2n")
    left = monomials(F.space.dim, a)
    right = monomials(F.space.dim, 2 * F.n - a)
    return [[F.monomial_integral(tuple(sorted(m1 + m2))) for m2 in right] for m1 in left]


def gorenstein_left_kernel(F, a):
    """{p in S^a V : int(p r) = 0 for all r in S^(2n-a) V} as a Subspace."""
    mat = gorenstein_pairing(F, a)
    nrows = sym_dim(F.space.dim, a)
    ncols = sym_dim(F.space.dim, 2 * F.n - a)
    return Subspace(F.space, a, left_nullspace(mat, nrows, ncols))


def harm_ideal(space, n, a):
    """Degree-a part of the ideal generated by Harm^(n+1): S^(a-n-1) V * Harm^(n+1)."""
    if a <= n:
        return Subspace(space, a, [])
    harm = harmonic_subspace(space, n + 1).basis
    gens = [multiply(SymElement(space, a - n - 1, {m: 1}), h)
            for m in monomials(space.dim, a - n - 1) for h in harm]
    return Subspace.span(space, a, gens)
