"""
Free model of CH_0 of the symmetric products of a pointed surface.

Level-n cycles are rational combinations of degree-n monomials in a finite
alphabet of point symbols; the first symbol is the marked point o. On this
model

    push_o     : level n-1 -> level n,   z -> o + z
    sigma_pull : level n   -> level n-1, x_1...x_n -> sum_j x_1..^x_j..x_n

satisfy sigma_pull . push_o = Id + push_o . sigma_pull, and writing each
x_j = (x_j - o) + o splits a cycle into pieces o^k * (degree-zero star
products), k = 0..n.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import comb

from .errors import NotDegreeZero
from .linalg import frac, frac_str, rank, row_basis, nullspace, matmul, identity


@dataclass(frozen=True)
class PointAlphabet:
    symbols: tuple

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError("point names must be distinct")
        if len(self.symbols) < 2:
            raise ValueError("need the marked point and at least one more")

    @classmethod
    def standard(cls, m):
        return cls(("o",) + tuple(f"x{j}" for j in range(1, m + 1)))

    @property
    def m(self):
        return len(self.symbols) - 1

    @property
    def size(self):
        return len(self.symbols)

    def with_marked(self, name):
        """Same points, with `name` moved to the front as the marked point."""
        rest = tuple(s for s in self.symbols if s != name)
        if len(rest) == len(self.symbols):
            raise ValueError(f"unknown point {name!r}")
        return PointAlphabet((name,) + rest)

    def basis(self, n):
        return list(combinations_with_replacement(range(self.size), n))

    def dim(self, n):
        return comb(self.m + n, n)


class ZeroCycle:
    __slots__ = ("alphabet", "n", "coeffs")

    def __init__(self, alphabet, n, coeffs=None):
        self.alphabet = alphabet
        self.n = n
        out = {}
        for mono, c in (coeffs or {}).items():
            mono = tuple(sorted(mono))
            if len(mono) != n:
                raise ValueError(f"monomial {mono} is not of level {n}")
            c = frac(c)
            if c:
                out[mono] = out.get(mono, Fraction(0)) + c
        self.coeffs = {k: v for k, v in out.items() if v}

    @classmethod
    def point(cls, alphabet, *names):
        idx = {s: i for i, s in enumerate(alphabet.symbols)}
        return cls(alphabet, len(names), {tuple(idx[s] for s in names): 1})

    def degree(self):
        return sum(self.coeffs.values(), Fraction(0))

    def coords(self):
        idx = {m: i for i, m in enumerate(self.alphabet.basis(self.n))}
        v = [Fraction(0)] * len(idx)
        for m, c in self.coeffs.items():
            v[idx[m]] = c
        return v

    @classmethod
    def from_coords(cls, alphabet, n, coords):
        return cls(alphabet, n, dict(zip(alphabet.basis(n), coords)))

    def __add__(self, other):
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, Fraction(0)) + c
        return ZeroCycle(self.alphabet, self.n, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, t):
        t = frac(t)
        return ZeroCycle(self.alphabet, self.n, {m: t * c for m, c in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, ZeroCycle):
            return NotImplemented
        return self.alphabet == other.alphabet and self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))

    def is_zero(self):
        return not self.coeffs

    def __repr__(self):
        if not self.coeffs:
            return "0"
        names = self.alphabet.symbols
        terms = []
        for m in sorted(self.coeffs):
            mono = "*".join(names[i] for i in m) or "1"
            c = self.coeffs[m]
            terms.append(mono if c == 1 else f"{frac_str(c)}*{mono}")
        return " + ".join(terms)

    def to_json(self):
        names = self.alphabet.symbols
        return [{"points": [names[i] for i in m], "coeff": frac_str(c)}
                for m, c in sorted(self.coeffs.items())]


def _mul(a, b):
    out = {}
    for m1, c1 in a.coeffs.items():
        for m2, c2 in b.coeffs.items():
            m = tuple(sorted(m1 + m2))
            out[m] = out.get(m, Fraction(0)) + c1 * c2
    return ZeroCycle(a.alphabet, a.n + b.n, out)


def push_o(z, k=1):
    """(ko)_*: add k copies of the marked point."""
    return ZeroCycle(z.alphabet, z.n + k, {(0,) * k + m: c for m, c in z.coeffs.items()})


def sigma_pull(z):
    if z.n < 1:
        raise ValueError("sigma_pull needs level >= 1")
    out = {}
    for m, c in z.coeffs.items():
        for j in range(len(m)):
            key = m[:j] + m[j + 1:]
            out[key] = out.get(key, Fraction(0)) + c
    return ZeroCycle(z.alphabet, z.n - 1, out)


def star_product(*cycles):
    """External product of degree-zero level-1 cycles, pushed to level n."""
    if not cycles:
        raise ValueError("need at least one factor")
    alphabet = cycles[0].alphabet
    out = ZeroCycle(alphabet, 0, {(): 1})
    for d in cycles:
        if d.n != 1:
            raise ValueError("star factors must be level-1 cycles")
        if d.degree() != 0:
            raise NotDegreeZero(f"factor {d!r} has degree {d.degree()}")
        out = _mul(out, d)
    return out


def _diff(alphabet, j):
    # x_j - o at level 1
    return ZeroCycle(alphabet, 1, {(j,): 1, (0,): -1})


def operator_matrix(alphabet, n_from, n_to, op):
    cols = [op(ZeroCycle(alphabet, n_from, {m: 1})).coords() for m in alphabet.basis(n_from)]
    return [[cols[j][i] for j in range(len(cols))] for i in range(alphabet.dim(n_to))]


def verify_commutation(alphabet, n):
    """sigma_pull . push_o == Id + push_o . sigma_pull on level n-1, as matrices."""
    if n < 2:
        raise ValueError("need n >= 2")
    lvl = n - 1
    lhs = operator_matrix(alphabet, lvl, lvl, lambda z: sigma_pull(push_o(z)))
    rhs = operator_matrix(alphabet, lvl, lvl, lambda z: push_o(sigma_pull(z)))
    ident = identity(alphabet.dim(lvl))
    return all(lhs[i][j] == ident[i][j] + rhs[i][j]
               for i in range(len(lhs)) for j in range(len(lhs)))


def decompose(z):
    """Components [C_0, ..., C_n] with C_k in (ko)_*(Ker sigma_pull) and sum C_k = z."""
    alphabet, n = z.alphabet, z.n
    comps = [dict() for _ in range(n + 1)]
    for m, c in z.coeffs.items():
        nonmarked = [x for x in m if x != 0]
        # o-factors of m contribute only to the o summand
        for size in range(len(nonmarked) + 1):
            for T in combinations(range(len(nonmarked)), size):
                prod = ZeroCycle(alphabet, 0, {(): c})
                for t in T:
                    prod = _mul(prod, _diff(alphabet, nonmarked[t]))
                k = n - size
                for mm, cc in push_o(prod, k).coeffs.items():
                    comps[k][mm] = comps[k].get(mm, Fraction(0)) + cc
    return [ZeroCycle(alphabet, n, d) for d in comps]


def projector_matrix(alphabet, n, k):
    """Matrix of z -> decompose(z)[k] on the level-n model."""
    return operator_matrix(alphabet, n, n, lambda z: decompose(z)[k])


def star_span(alphabet, n):
    """Span of n-fold star products of the degree-zero cycles x_j - o."""
    if n == 0:
        return [[Fraction(1)]]
    gens = []
    for js in combinations_with_replacement(range(1, alphabet.size), n):
        gens.append(star_product(*[_diff(alphabet, j) for j in js]).coords())
    return row_basis(gens, alphabet.dim(n))


def kernel_sigma(alphabet, n):
    """Ker(sigma_pull) on level n (everything at level 0)."""
    if n == 0:
        return [[Fraction(1)]]
    mat = operator_matrix(alphabet, n, n - 1, sigma_pull)
    return nullspace(mat, alphabet.dim(n))


def component_space(alphabet, n, k):
    """(ko)_*(Ker sigma_pull at level n-k) inside level n."""
    gens = []
    for row in kernel_sigma(alphabet, n - k):
        gens.append(push_o(ZeroCycle.from_coords(alphabet, n - k, row), k).coords())
    return row_basis(gens, alphabet.dim(n))


def filtration_N(alphabet, n, k):
    """N_k = image of (ko)_* from level n-k."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    gens = [push_o(ZeroCycle(alphabet, n - k, {m: 1}), k).coords() for m in alphabet.basis(n - k)]
    return row_basis(gens, alphabet.dim(n))


def filtration_FBB(alphabet, n, i):
    """F'^i = sum over k <= n-i of the component spaces."""
    if not 0 <= i <= n:
        raise ValueError("need 0 <= i <= n")
    gens = [v for k in range(n - i + 1) for v in component_space(alphabet, n, k)]
    return row_basis(gens, alphabet.dim(n))


def opposite(alphabet, n, i):
    """N_i -> model -> model / F'^(n-i+1) is an isomorphism."""
    N = filtration_N(alphabet, n, i)
    F = filtration_FBB(alphabet, n, n - i + 1) if i >= 1 else []
    total = alphabet.dim(n)
    # injective with zero intersection, and dimensions complementary
    return len(N) + len(F) == total and rank(N + F, total) == total


def transport(rows, source, target, n):
    """Re-express level-n coordinate rows from one alphabet ordering in another."""
    perm = [target.symbols.index(s) for s in source.symbols]
    tidx = {m: i for i, m in enumerate(target.basis(n))}
    out = []
    for row in rows:
        v = [Fraction(0)] * len(tidx)
        for m, c in zip(source.basis(n), row):
            if c:
                v[tidx[tuple(sorted(perm[x] for x in m))]] = c
        out.append(v)
    return row_basis(out, len(tidx))


def fbb_marked_point_invariant(alphabet, n, i, other):
    """F'^i computed with `other` as marked point equals F'^i for the original one."""
    moved = alphabet.with_marked(other)
    here = filtration_FBB(alphabet, n, i)
    there = transport(filtration_FBB(moved, n, i), moved, alphabet, n)
    return here == there


def projector_laws(alphabet, n):
    """P_k^2 = P_k, P_j P_k = 0 (j != k), sum P_k = Id."""
    Ps = [projector_matrix(alphabet, n, k) for k in range(n + 1)]
    d = alphabet.dim(n)
    zero = [[Fraction(0)] * d for _ in range(d)]
    for j, Pj in enumerate(Ps):
        for k, Pk in enumerate(Ps):
            prod = matmul(Pj, Pk)
            if prod != (Pk if j == k else zero):
                return False
    total = [[sum(P[r][c] for P in Ps) for c in range(d)] for r in range(d)]
    return total == identity(d)
